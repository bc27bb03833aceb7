#include <doctest.h>

#include "graphcat/errors.hpp"
#include "graphcat/fixtures.hpp"
#include "graphcat/functors.hpp"
#include "graphcat/generate.hpp"
#include "graphcat/json_io.hpp"

using namespace graphcat;
using namespace graphcat::fixtures;

namespace {

Atom L(const std::string& s) { return Atom::leaf(s); }

void roundtrip(const GraphObject& x) {
    const std::string text = serialize(x);
    GraphObject back = parse_object(text);
    CHECK(back == x);
    CHECK(serialize(back) == text);
}

void roundtrip(const Morphism& m) {
    const std::string text = serialize(m);
    Morphism back = parse_morphism(text);
    CHECK(back == m);
    CHECK(serialize(back) == text);
}

} // namespace

TEST_CASE("every structure kind survives a serialize/parse round trip") {
    roundtrip(GraphObject(loop_quiver()));
    roundtrip(GraphObject(parallel_arc_quiver()));
    roundtrip(GraphObject(one_arc_digraph()));
    roundtrip(GraphObject(one_three_edge()));
    roundtrip(GraphObject(two_edge_path()));
    roundtrip(GraphObject(empty_endpoint_edge()));
    roundtrip(apply(FunctorName::SimpM, GraphObject(two_edge_path())));
    roundtrip(apply(FunctorName::EmbR, apply(FunctorName::WeakOf,
                                             GraphObject(two_edge_path()))));
    roundtrip(apply(FunctorName::AssocInc, GraphObject(loop_quiver())));
}

TEST_CASE("structured atoms from functor images round trip intact") {
    // clique_quiver output names arcs by incidence pairs; simplicial_repl
    // builds pair-of-pair edges; both exercise nested atom encodings.
    GraphObject x(two_edge_path());
    roundtrip(apply(FunctorName::CliqueQuiver,
                    apply(FunctorName::EmbR, apply(FunctorName::WeakOf, x))));
    roundtrip(apply(FunctorName::SimplicialRepl, x));
    roundtrip(apply(FunctorName::UnderU, GraphObject(parallel_arc_quiver())));
}

TEST_CASE("random objects of every kind round trip") {
    Rng rng(7);
    GenBounds b;
    for (StructureKind k : {StructureKind::Quiver, StructureKind::Digraph, StructureKind::Ssh,
                            StructureKind::SSys, StructureKind::IncHyp, StructureKind::IStr})
        for (int i = 0; i < 10; ++i)
            roundtrip(random_object(rng, k, {}, b));
}

TEST_CASE("random morphisms of every kind round trip") {
    Rng rng(11);
    GenBounds b;
    for (MorKind k : {MorKind::Quiver, MorKind::Digraph, MorKind::StrictSsh, MorKind::WeakSsh,
                      MorKind::SSys, MorKind::IncHyp, MorKind::IStr})
        for (int i = 0; i < 8; ++i)
            roundtrip(random_morphism(rng, k, {}, b));
}

TEST_CASE("serialization is deterministic and assignment order does not matter on parse") {
    GraphObject x(two_edge_path());
    CHECK(serialize(x) == serialize(x));

    // src/tgt style maps may list pairs in any order.
    const std::string shuffled = R"({
      "kind": "quiver",
      "vertices": ["u", "w"],
      "arcs": ["a1", "a2"],
      "src": [["a2", "u"], ["a1", "u"]],
      "tgt": [["a1", "w"], ["a2", "w"]]
    })";
    CHECK(parse_object(shuffled) == GraphObject(parallel_arc_quiver()));
}

TEST_CASE("morphism serialization carries exactly the components of its kind") {
    GraphObject x(one_arc_digraph());
    Morphism id = Morphism::identity(x, MorKind::Digraph);
    const std::string text = serialize(id);
    CHECK(text.find("edge_map") == std::string::npos);
    CHECK(text.find("incidence_map") == std::string::npos);
    roundtrip(id);

    Morphism qid = Morphism::identity(GraphObject(loop_quiver()), MorKind::Quiver);
    CHECK(serialize(qid).find("edge_map") != std::string::npos);

    Morphism hid = Morphism::identity(
        apply(FunctorName::EmbR, apply(FunctorName::WeakOf, GraphObject(one_three_edge()))),
        MorKind::IncHyp);
    CHECK(serialize(hid).find("incidence_map") != std::string::npos);
}

TEST_CASE("malformed object text raises ParseError") {
    CHECK_THROWS_AS(parse_object("not json at all"), ParseError);
    CHECK_THROWS_AS(parse_object("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_object(R"({"vertices": []})"), ParseError);
    CHECK_THROWS_AS(parse_object(R"({"kind": "heptagraph", "vertices": []})"), ParseError);
    CHECK_THROWS_AS(parse_object(R"({"kind": "digraph"})"), ParseError);
    CHECK_THROWS_AS(parse_object(R"({"kind": "digraph", "vertices": ["v", "v"], "arcs": []})"),
                    ParseError);
    CHECK_THROWS_AS(parse_object(R"({"kind": "quiver", "vertices": ["v"], "arcs": ["a"],
                                     "src": [["a", "v"]], "tgt": []})"),
                    ParseError);
    CHECK_THROWS_AS(parse_object(R"({"kind": "quiver", "vertices": ["v"], "arcs": ["a"],
                                     "src": [["a", "missing"]], "tgt": [["a", "v"]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_object(R"({"kind": "quiver", "vertices": ["v"], "arcs": ["a"],
                                     "src": [["b", "v"]], "tgt": [["a", "v"]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_object(R"({"kind": "ssh", "vertices": ["v"], "edges": ["e"],
                                     "eps": [["e", "v"]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_object(R"({"kind": "ssh", "vertices": ["v"], "edges": ["e"],
                                     "eps": [["f", {"subset": ["v"]}]]})"),
                    ParseError);
}

TEST_CASE("malformed atom encodings raise ParseError") {
    CHECK_THROWS_AS(parse_object(R"({"kind": "digraph", "vertices": [7], "arcs": []})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_object(R"({"kind": "digraph", "vertices": [{"pair": ["a"]}], "arcs": []})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_object(R"({"kind": "digraph", "vertices": [{"wedge": ["a", "b"]}], "arcs": []})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_object(R"({"kind": "digraph", "vertices": [{"tag": ["x", "a"]}], "arcs": []})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_object(
            R"({"kind": "digraph", "vertices": [{"pair": ["a", "b"], "extra": 1}], "arcs": []})"),
        ParseError);
}

TEST_CASE("malformed morphism text raises ParseError") {
    const std::string dom = R"({"kind": "digraph", "vertices": ["u"], "arcs": []})";
    CHECK_THROWS_AS(parse_morphism("{"), ParseError);
    CHECK_THROWS_AS(parse_morphism(R"({"kind": "digraph", "vertices": [], "arcs": []})"),
                    ParseError);
    CHECK_THROWS_AS(parse_morphism(R"({"kind": "morphism", "mor_kind": "sideways",
                                       "dom": )" + dom +
                                       R"(, "cod": )" + dom + R"(, "vertex_map": [["u", "u"]]})"),
                    ParseError);
    // component for a kind that does not carry one
    CHECK_THROWS_AS(parse_morphism(R"({"kind": "morphism", "mor_kind": "digraph",
                                       "dom": )" + dom +
                                       R"(, "cod": )" + dom + R"(, "vertex_map": [["u", "u"]],
                                       "edge_map": []})"),
                    ParseError);
    // missing component for a kind that requires one
    const std::string q = serialize(GraphObject(loop_quiver()));
    CHECK_THROWS_AS(parse_morphism(R"({"kind": "morphism", "mor_kind": "quiver",
                                       "dom": )" + q +
                                       R"(, "cod": )" + q + R"(, "vertex_map": [["u", "u"]]})"),
                    ParseError);
    // morphism kind does not match the endpoint objects
    CHECK_THROWS_AS(parse_morphism(R"({"kind": "morphism", "mor_kind": "ssys",
                                       "dom": )" + dom +
                                       R"(, "cod": )" + dom + R"(, "vertex_map": [["u", "u"]]})"),
                    ParseError);
    // vertex map missing an assignment
    CHECK_THROWS_AS(parse_morphism(R"({"kind": "morphism", "mor_kind": "digraph",
                                       "dom": )" + dom +
                                       R"(, "cod": )" + dom + R"(, "vertex_map": []})"),
                    ParseError);
}

TEST_CASE("parsed morphisms can be invalid and caught by check_morphism, not the parser") {
    // The parser enforces shape; semantic validity stays a separate question.
    const std::string text = R"({
      "kind": "morphism", "mor_kind": "digraph",
      "dom": {"kind": "digraph", "vertices": ["u", "w"],
              "arcs": [{"pair": ["u", "w"]}]},
      "cod": {"kind": "digraph", "vertices": ["u", "w"], "arcs": []},
      "vertex_map": [["u", "u"], ["w", "w"]]
    })";
    Morphism m = parse_morphism(text);
    CHECK_FALSE(check_morphism(m));
    CHECK(parse_morphism(serialize(m)) == m);
}

TEST_CASE("subset atoms normalize to canonical member order on parse") {
    GraphObject a = parse_object(R"({"kind": "ssys", "vertices": ["0", "1"],
                                     "edges": [{"subset": ["1", "0"]}]})");
    GraphObject b = parse_object(R"({"kind": "ssys", "vertices": ["0", "1"],
                                     "edges": [{"subset": ["0", "1"]}]})");
    CHECK(a == b);
    CHECK(a.ssys().edges.contains(Atom::subset({L("0"), L("1")})));
    CHECK(serialize(a) == serialize(b));
}
