#include <doctest.h>

#include <algorithm>

#include "graphcat/errors.hpp"
#include "graphcat/fixtures.hpp"
#include "graphcat/generate.hpp"
#include "graphcat/laws.hpp"

using namespace graphcat;

namespace {

Atom L(const std::string& s) { return Atom::leaf(s); }

LawOptions quick(std::size_t cases = 10, std::uint64_t seed = 0) {
    LawOptions opt;
    opt.cases = cases;
    opt.seed = seed;
    return opt;
}

bool same_report(const CheckReport& a, const CheckReport& b) {
    return a.law == b.law && a.passed == b.passed && a.cases == b.cases &&
           a.notes == b.notes && a.failures == b.failures;
}

} // namespace

TEST_CASE("adjunction table lists twelve named rows reachable by id and name") {
    const auto& rows = adjunction_table();
    REQUIRE(rows.size() == 12);
    for (const AdjunctionInfo& a : rows) {
        CHECK(&adjunction(a.id) == &a);
        CHECK(find_adjunction(a.name) == &a);
        const FunctorInfo& left = functor_info(a.left);
        const FunctorInfo& right = functor_info(a.right);
        CHECK(left.dom_kind == a.a_kind);
        CHECK(left.cod_kind == a.b_kind);
        CHECK(right.dom_kind == a.b_kind);
        CHECK(right.cod_kind == a.a_kind);
    }
    CHECK(find_adjunction("nope") == nullptr);
    CHECK_THROWS_AS(adjunction(13), DomainError);
}

TEST_CASE("units and counits have identity vertex rows on random objects") {
    Rng rng(7);
    for (const AdjunctionInfo& a : adjunction_table()) {
        for (int i = 0; i < 5; ++i) {
            if (a.unit_based) {
                GraphObject x = random_object(rng, a.a_kind, a.a_pred);
                Morphism eta = adjunction_unit(a, x);
                CHECK(eta.dom() == x);
                CHECK(eta.cod() == apply(a.right, apply(a.left, x)));
                CHECK(eta.vertex_map().values() == x.vertices().elems());
                CHECK_THROWS_AS(adjunction_counit(a, x), UnsupportedError);
            } else {
                GraphObject b = random_object(rng, a.b_kind, a.b_pred);
                Morphism eps = adjunction_counit(a, b);
                CHECK(eps.dom() == apply(a.left, apply(a.right, b)));
                CHECK(eps.cod() == b);
                CHECK(eps.vertex_map().values() == b.vertices().elems());
                CHECK_THROWS_AS(adjunction_unit(a, b), UnsupportedError);
            }
        }
    }
}

TEST_CASE("factoring a universal morphism through itself yields the identity") {
    Rng rng(11);
    for (const AdjunctionInfo& a : adjunction_table()) {
        for (int i = 0; i < 8; ++i) {
            if (a.unit_based) {
                GraphObject x = random_object(rng, a.a_kind, a.a_pred);
                GraphObject lx = apply(a.left, x);
                Morphism h = adjunction_factor(a, x, lx, adjunction_unit(a, x));
                CHECK(h == Morphism::identity(lx, a.b_mor));
            } else {
                GraphObject b = random_object(rng, a.b_kind, a.b_pred);
                GraphObject rb = apply(a.right, b);
                Morphism h = adjunction_factor(a, rb, b, adjunction_counit(a, b));
                CHECK(h == Morphism::identity(rb, a.a_mor));
            }
        }
    }
}

TEST_CASE("every adjunction check passes at reduced scale") {
    for (const AdjunctionInfo& a : adjunction_table()) {
        CheckReport r = check_adjunction(a, quick(8));
        INFO(r.law << (r.failures.empty() ? std::string() : ": " + r.failures.front()));
        CHECK(r.passed);
        CHECK(r.cases == 12);
    }
}

TEST_CASE("directed rounding of the underlying multigraph matches the symmetric closure") {
    for (GraphObject q : {fixtures::loop_quiver(), fixtures::parallel_arc_quiver()}) {
        GraphObject lhs = apply_pipeline(
            {FunctorName::UnderU, FunctorName::SimpM, FunctorName::ZGra}, q);
        GraphObject rhs =
            apply_pipeline({FunctorName::SimpQ, FunctorName::SymClosure}, q);
        CHECK(canonical_encode(lhs) == canonical_encode(rhs));
    }
    CheckReport r = check_equality("EQ3", quick());
    CHECK(r.passed);
    CHECK(r.cases == 20);
}

TEST_CASE("both incidence readings of a loop give the one-pair structure") {
    GraphObject q = fixtures::loop_quiver();
    GraphObject lhs = apply_pipeline({FunctorName::AssocInc, FunctorName::SimpR}, q);
    GraphObject rhs = apply_pipeline(
        {FunctorName::UnderU, FunctorName::InclM, FunctorName::InclWeak, FunctorName::WeakOf},
        q);
    REQUIRE(lhs.kind() == StructureKind::IStr);
    CHECK(lhs.istr().incidences.size() == 1);
    CHECK(canonical_encode(lhs) == canonical_encode(rhs));
    CHECK(check_equality("HEX", quick()).passed);
}

TEST_CASE("clique replacement of a three-edge equals the incidence route") {
    GraphObject x = fixtures::one_three_edge();
    GraphObject lhs = apply(FunctorName::CliqueFactored, x);
    REQUIRE(lhs.kind() == StructureKind::SSys);
    CHECK(lhs.ssys().edges.size() == 6); // three singletons and three pairs
    GraphObject rhs = apply_pipeline(
        {FunctorName::InclWeak, FunctorName::WeakOf, FunctorName::EmbR,
         FunctorName::CliqueQuiver, FunctorName::SimpQ, FunctorName::SymClosure,
         FunctorName::ZGraInv},
        x);
    CHECK(canonical_encode(lhs) == canonical_encode(rhs));
    CHECK(check_equality("ALT-R", quick()).passed);
}

TEST_CASE("deleting large subsets commutes with renaming on the nose") {
    GraphObject g(SetSystem{FinSet{L("0"), L("1"), L("2")},
                            FinSet{Atom::subset({L("0"), L("1"), L("2")}),
                                   Atom::subset({L("0"), L("1")})}});
    GraphObject lhs = apply_pipeline({FunctorName::DelS, FunctorName::EmbM}, g);
    GraphObject rhs = apply_pipeline({FunctorName::EmbH, FunctorName::DelM}, g);
    REQUIRE(lhs.kind() == StructureKind::Ssh);
    CHECK(lhs.ssh().edges.size() == 1);
    CHECK(lhs.ssh().edges.contains(Atom::subset({L("0"), L("1")})));
    CHECK(canonical_encode(lhs) == canonical_encode(rhs));
    CheckReport r = check_natural_iso("ISO1", quick());
    CHECK(r.passed);
    REQUIRE(!r.notes.empty());
}

TEST_CASE("orienting one simple edge gives two triples matched to the two pairs") {
    GraphObject g(SetSystem{FinSet{L("0"), L("1")},
                            FinSet{Atom::subset({L("0"), L("1")})}});
    GraphObject lhs = apply_pipeline({FunctorName::EmbM, FunctorName::AssocD}, g);
    GraphObject rhs = apply_pipeline(
        {FunctorName::ZGra, FunctorName::InclSD, FunctorName::EmbQ}, g);
    CHECK(lhs.quiver().arcs.size() == 2);
    CHECK(rhs.quiver().arcs.size() == 2);
    CHECK(check_natural_iso("ISO2", quick()).passed);
}

TEST_CASE("incidence cliques of a two-edge match its simplicial orientation") {
    GraphObject x = fixtures::one_two_edge();
    GraphObject lhs = apply_pipeline(
        {FunctorName::WeakOf, FunctorName::EmbR, FunctorName::CliqueQuiver}, x);
    GraphObject rhs = apply_pipeline(
        {FunctorName::SimplicialRepl, FunctorName::DelM, FunctorName::AssocD}, x);
    CHECK(lhs.quiver().arcs.size() == 4);
    CHECK(rhs.quiver().arcs.size() == 4);
    CHECK(check_natural_iso("ISO3", quick()).passed);
}

TEST_CASE("the three dualities are involutions at reduced scale") {
    for (const char* law : {"INV-SHARP", "INV-TOP", "INV-DDAG"}) {
        CheckReport r = check_involution(law, quick());
        INFO(law);
        CHECK(r.passed);
        CHECK(r.cases == 20);
    }
    CHECK_THROWS_AS(check_involution("INV-NOPE", quick()), DomainError);
}

TEST_CASE("composite functors agree with their closed-form descriptions") {
    for (const char* law : {"ACT-R", "ACT-LAMBDA", "ACT-TOP", "ACT-DDAG"}) {
        CheckReport r = check_action_agreement(law, quick());
        INFO(law << (r.failures.empty() ? std::string() : ": " + r.failures.front()));
        CHECK(r.passed);
    }
    CHECK_THROWS_AS(check_action_agreement("ACT-NOPE", quick()), DomainError);
}

TEST_CASE("weak morphisms are exactly the lax squares") {
    CheckReport r = check_lax_equivalence(quick(30));
    INFO((r.failures.empty() ? std::string() : r.failures.front()));
    CHECK(r.passed);
    REQUIRE(!r.notes.empty());
    CHECK(r.notes.front().find("hold") != std::string::npos);
}

TEST_CASE("counterexample runs pin the expected counts") {
    for (const char* law : {"CX-GAMMA", "CX-LINE", "CX-DUAL", "CX-WEAK"}) {
        CheckReport r = run_counterexample(law);
        INFO(law);
        CHECK(r.passed);
        CHECK(r.notes.size() == 2);
    }
    CHECK_THROWS_AS(run_counterexample("CX-NOPE"), DomainError);
}

TEST_CASE("functor law checks pass for every registry entry at reduced scale") {
    for (const FunctorInfo& info : functor_table()) {
        CheckReport r = check_functor_laws(info.id, quick(6));
        INFO(info.name << (r.failures.empty() ? std::string() : ": " + r.failures.front()));
        CHECK(r.passed);
        if (info.object_only)
            CHECK(!r.notes.empty());
    }
}

TEST_CASE("law names cover the registry and resolve through the runner") {
    auto names = law_names();
    CHECK(names.size() == 34 + 12 + 21);
    for (const std::string& n : names)
        CHECK(is_law_name(n));
    CHECK(!is_law_name("FUNC(nope)"));
    CHECK_THROWS_AS(run_law("FUNC(nope)", quick()), DomainError);
    CHECK_THROWS_AS(run_law("ADJ(nope)", quick()), DomainError);
    CHECK_THROWS_AS(run_law("nope", quick()), DomainError);

    CheckReport r = run_law("EQ1", quick());
    CHECK(r.law == "EQ1");
    CHECK(r.passed);
}

TEST_CASE("suites partition the laws and the catch-all runs everything") {
    std::vector<std::string> gathered;
    for (const std::string& s : suite_names()) {
        if (s == "all")
            continue;
        auto laws = suite_laws(s);
        gathered.insert(gathered.end(), laws.begin(), laws.end());
    }
    auto all = suite_laws("all");
    CHECK(gathered.size() == all.size());
    std::sort(gathered.begin(), gathered.end());
    auto sorted_all = all;
    std::sort(sorted_all.begin(), sorted_all.end());
    CHECK(gathered == sorted_all);
    CHECK(all.size() == law_names().size());
    CHECK_THROWS_AS(suite_laws("nope"), DomainError);

    auto reports = run_suite("counterexamples", quick());
    REQUIRE(reports.size() == 4);
    for (const CheckReport& r : reports)
        CHECK(r.passed);
}

TEST_CASE("reports are reproducible for a fixed seed and vary across seeds") {
    CheckReport a = check_adjunction(adjunction(5), quick(6, 3));
    CheckReport b = check_adjunction(adjunction(5), quick(6, 3));
    CHECK(same_report(a, b));

    CheckReport c = check_equality("EQ4", quick(6, 1));
    CheckReport d = check_equality("EQ4", quick(6, 1));
    CHECK(same_report(c, d));
}

TEST_CASE("uniqueness searches agree with direct enumeration on a pinned instance") {
    // two-edge path into itself under incl_m -| del_m: enumerate every
    // strict morphism satisfying the counit triangle by hand
    const AdjunctionInfo& a = adjunction(3);
    GraphObject x = fixtures::two_edge_path();
    GraphObject lx = apply(a.left, x);
    GraphObject b = fixtures::two_edge_path();
    Morphism eps = adjunction_counit(a, b);
    GraphObject rb = apply(a.right, b);
    for (const Morphism& m : enumerate_homs(a.b_mor, lx, b, Caps{})) {
        Morphism h = adjunction_factor(a, x, b, m);
        std::size_t solutions = 0;
        for (const Morphism& cand : enumerate_homs(a.a_mor, x, rb, Caps{})) {
            if (compose(eps, apply(a.left, cand)) == m) {
                ++solutions;
                CHECK(cand == h);
            }
        }
        CHECK(solutions == 1);
    }
}
