#include "doctest.h"

#include "graphcat/errors.hpp"
#include "graphcat/fixtures.hpp"
#include "graphcat/morphism.hpp"
#include "graphcat/structures.hpp"

using namespace graphcat;

namespace {

Atom L(const char* s) { return Atom::leaf(s); }

} // namespace

TEST_CASE("fixtures are well formed") {
    for (const GraphObject& x :
         {fixtures::one_three_edge(), fixtures::one_two_edge(), fixtures::two_edge_path(),
          fixtures::single_edge(), fixtures::shared_endpoint_pair(),
          fixtures::parallel_two_edges(), fixtures::empty_endpoint_edge(),
          fixtures::one_loop_edge(), fixtures::parallel_arc_quiver(), fixtures::loop_quiver(),
          fixtures::one_arc_digraph()})
        CHECK(validate(x).empty());
}

TEST_CASE("validate flags dangling endpoints") {
    FinSet vs{L("a")};
    FinSet arcs{L("e")};
    FinSet vs2{L("a"), L("b")};
    // arc targets b which is not a vertex of the object
    Quiver q{vs, arcs, FinFunction(arcs, vs2, {L("a")}), FinFunction(arcs, vs2, {L("b")})};
    auto problems = validate(GraphObject(q));
    CHECK(!problems.empty());

    Digraph d{vs, FinSet{Atom::pair(L("a"), L("b"))}};
    CHECK(!validate(GraphObject(d)).empty());

    SetSystem s{vs, FinSet{Atom::subset({L("b")})}};
    CHECK(!validate(GraphObject(s)).empty());

    IncidenceStructure is{vs, FinSet{L("e")}, FinSet{Atom::pair(L("b"), L("e"))}};
    CHECK(!validate(GraphObject(is)).empty());
}

TEST_CASE("predicates refine the carriers") {
    CHECK(satisfies(fixtures::one_two_edge(), Predicate::Multigraph));
    CHECK(satisfies(fixtures::one_loop_edge(), Predicate::Multigraph));
    // a 3-edge and an empty-endpoint edge both break the multigraph bound
    CHECK_FALSE(satisfies(fixtures::one_three_edge(), Predicate::Multigraph));
    CHECK_FALSE(satisfies(fixtures::empty_endpoint_edge(), Predicate::Multigraph));

    SetSystem gra{FinSet{L("0"), L("1")},
                  FinSet{Atom::subset({L("0")}), Atom::subset({L("0"), L("1")})}};
    CHECK(satisfies(GraphObject(gra), Predicate::SimpleGraph));
    SetSystem not_gra{FinSet{L("0"), L("1")}, FinSet{Atom::subset({})}};
    CHECK_FALSE(satisfies(GraphObject(not_gra), Predicate::SimpleGraph));

    Digraph sym{FinSet{L("a"), L("b")},
                FinSet{Atom::pair(L("a"), L("b")), Atom::pair(L("b"), L("a"))}};
    CHECK(satisfies(GraphObject(sym), Predicate::Symmetric));
    CHECK_FALSE(satisfies(fixtures::one_arc_digraph(), Predicate::Symmetric));

    // predicate on the wrong kind reports rather than passing vacuously
    CHECK_FALSE(satisfies(fixtures::one_arc_digraph(), Predicate::Multigraph));
}

TEST_CASE("collapsing map between ssh objects is a strict morphism") {
    GraphObject g3 = fixtures::one_three_edge();
    GraphObject h2 = fixtures::one_two_edge();
    FinFunction fv(g3.vertices(), h2.vertices(), {L("0"), L("1"), L("1")});
    FinFunction fe(g3.ssh().edges, h2.ssh().edges, {L("f")});
    Morphism m = Morphism::make(MorKind::StrictSsh, g3, h2, fv, fe);
    CHECK(check_morphism(m));

    // sending every vertex to 0 only covers half of f's endpoints: weak, not strict
    FinFunction collapse(g3.vertices(), h2.vertices(), {L("0"), L("0"), L("0")});
    Morphism w = Morphism::make(MorKind::WeakSsh, g3, h2, collapse, fe);
    Morphism s = Morphism::make(MorKind::StrictSsh, g3, h2, collapse, fe);
    CHECK(check_morphism(w));
    CHECK_FALSE(check_morphism(s));
}

TEST_CASE("empty endpoint edge maps weakly but not strictly into a loop edge") {
    GraphObject a = fixtures::empty_endpoint_edge();
    GraphObject b = fixtures::one_loop_edge();
    FinFunction fv(a.vertices(), b.vertices(), {L("x")});
    FinFunction fe(a.ssh().edges, b.ssh().edges, {L("f")});
    CHECK(check_morphism(Morphism::make(MorKind::WeakSsh, a, b, fv, fe)));
    CHECK_FALSE(check_morphism(Morphism::make(MorKind::StrictSsh, a, b, fv, fe)));
}

TEST_CASE("morphism construction validates component shapes") {
    GraphObject g3 = fixtures::one_three_edge();
    GraphObject h2 = fixtures::one_two_edge();
    FinFunction wrong_dom(h2.vertices(), h2.vertices(), {L("0"), L("1")});
    CHECK_THROWS_AS(Morphism::make(MorKind::StrictSsh, g3, h2, wrong_dom,
                                   FinFunction(g3.ssh().edges, h2.ssh().edges, {L("f")})),
                    KindError);
    // missing edge component
    FinFunction fv(g3.vertices(), h2.vertices(), {L("0"), L("1"), L("1")});
    CHECK_THROWS_AS(Morphism::make(MorKind::StrictSsh, g3, h2, fv), KindError);
    // kind does not match the objects
    CHECK_THROWS_AS(Morphism::make(MorKind::Digraph, g3, h2, fv), KindError);
}

TEST_CASE("identities and composition behave categorically") {
    GraphObject g3 = fixtures::one_three_edge();
    GraphObject h2 = fixtures::one_two_edge();
    Morphism id_g = Morphism::identity(g3, MorKind::StrictSsh);
    Morphism id_h = Morphism::identity(h2, MorKind::StrictSsh);
    CHECK(check_morphism(id_g));

    FinFunction fv(g3.vertices(), h2.vertices(), {L("0"), L("1"), L("1")});
    FinFunction fe(g3.ssh().edges, h2.ssh().edges, {L("f")});
    Morphism m = Morphism::make(MorKind::StrictSsh, g3, h2, fv, fe);
    CHECK(compose(m, id_g) == m);
    CHECK(compose(id_h, m) == m);

    Morphism mm = compose(m, id_g);
    CHECK(check_morphism(mm));
    CHECK(canonical_encode(mm) == canonical_encode(m));

    // composing across mismatched endpoints is rejected
    CHECK_THROWS_AS(compose(m, id_h), KindError);
}

TEST_CASE("quiver morphisms must commute with sources and targets") {
    GraphObject q = fixtures::parallel_arc_quiver();
    GraphObject l = fixtures::loop_quiver();
    FinFunction fv(q.vertices(), l.vertices(), {L("u"), L("u")});
    FinFunction fe(q.quiver().arcs, l.quiver().arcs, {L("a"), L("a")});
    CHECK(check_morphism(Morphism::make(MorKind::Quiver, q, l, fv, fe)));

    // no morphism from the loop into the parallel pair: a loop needs a loop
    FinFunction gv(l.vertices(), q.vertices(), {L("u")});
    FinFunction ge(l.quiver().arcs, q.quiver().arcs, {L("a1")});
    CHECK_FALSE(check_morphism(Morphism::make(MorKind::Quiver, l, q, gv, ge)));
}

TEST_CASE("digraph and incidence-structure morphisms track their relations") {
    Digraph d2{FinSet{L("a"), L("b")}, FinSet{Atom::pair(L("a"), L("b"))}};
    Digraph loop{FinSet{L("z")}, FinSet{Atom::pair(L("z"), L("z"))}};
    FinFunction to_z(FinSet{L("a"), L("b")}, FinSet{L("z")}, {L("z"), L("z")});
    CHECK(check_morphism(Morphism::make(MorKind::Digraph, GraphObject(d2), GraphObject(loop), to_z)));
    Digraph edgeless{FinSet{L("z")}, FinSet{}};
    CHECK_FALSE(check_morphism(
        Morphism::make(MorKind::Digraph, GraphObject(d2), GraphObject(edgeless), to_z)));

    IncidenceStructure i1{FinSet{L("v")}, FinSet{L("e")}, FinSet{Atom::pair(L("v"), L("e"))}};
    IncidenceStructure i2{FinSet{L("w")}, FinSet{L("f")}, FinSet{Atom::pair(L("w"), L("f"))}};
    Morphism ok = Morphism::make(MorKind::IStr, GraphObject(i1), GraphObject(i2),
                                 FinFunction(i1.vertices, i2.vertices, {L("w")}),
                                 FinFunction(i1.edges, i2.edges, {L("f")}));
    CHECK(check_morphism(ok));
    CHECK(is_isomorphism(ok));
}

TEST_CASE("bijective components alone do not make an isomorphism") {
    Digraph d1{FinSet{L("a"), L("b")}, FinSet{}};
    Digraph d2{FinSet{L("a"), L("b")}, FinSet{Atom::pair(L("a"), L("b"))}};
    Morphism m = Morphism::make(MorKind::Digraph, GraphObject(d1), GraphObject(d2),
                                FinFunction::identity(FinSet{L("a"), L("b")}));
    CHECK(check_morphism(m));
    CHECK_FALSE(is_isomorphism(m)); // the inverse drops an arc
}

TEST_CASE("canonical encoding separates structurally distinct objects") {
    CHECK(canonical_encode(fixtures::one_two_edge()) == canonical_encode(fixtures::one_two_edge()));
    CHECK(canonical_encode(fixtures::one_two_edge()) != canonical_encode(fixtures::single_edge()));
    CHECK(canonical_encode(fixtures::empty_endpoint_edge()) !=
          canonical_encode(fixtures::one_loop_edge()));
    // same carriers, different structure kind
    SetSystem s{FinSet{L("0")}, FinSet{}};
    Digraph d{FinSet{L("0")}, FinSet{}};
    CHECK(canonical_encode(GraphObject(s)) != canonical_encode(GraphObject(d)));
    // leaf names that would collide under naive concatenation
    CHECK(canonical_encode(Atom::pair(L("ab"), L("c"))) !=
          canonical_encode(Atom::pair(L("a"), L("bc"))));
}
