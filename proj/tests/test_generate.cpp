#include "graphcat/generate.hpp"

#include <doctest.h>

#include "graphcat/errors.hpp"
#include "graphcat/fixtures.hpp"
#include "graphcat/functors.hpp"
#include "graphcat/morphism.hpp"

using namespace graphcat;

namespace {

const StructureKind kKinds[] = {StructureKind::Quiver,  StructureKind::Digraph,
                                StructureKind::Ssh,     StructureKind::SSys,
                                StructureKind::IncHyp,  StructureKind::IStr};

const MorKind kMorKinds[] = {MorKind::Quiver, MorKind::Digraph, MorKind::StrictSsh,
                             MorKind::WeakSsh, MorKind::SSys,   MorKind::IncHyp,
                             MorKind::IStr};

} // namespace

TEST_CASE("random objects are valid and fit the bounds") {
    GenBounds bounds;
    for (StructureKind kind : kKinds)
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            Rng rng(seed);
            GraphObject x = random_object(rng, kind, {}, bounds);
            CHECK(validate(x).empty());
            CHECK(x.vertices().size() <= bounds.vertices);
        }
}

TEST_CASE("random objects respect the requested refinement") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        CHECK(satisfies(random_object(rng, StructureKind::Ssh, Predicate::Multigraph),
                        Predicate::Multigraph));
        CHECK(satisfies(random_object(rng, StructureKind::SSys, Predicate::SimpleGraph),
                        Predicate::SimpleGraph));
        CHECK(satisfies(random_object(rng, StructureKind::Digraph, Predicate::Symmetric),
                        Predicate::Symmetric));
    }
}

TEST_CASE("same seed reproduces the same object, different seeds vary") {
    Rng a(7), b(7);
    GraphObject x = random_object(a, StructureKind::IncHyp);
    GraphObject y = random_object(b, StructureKind::IncHyp);
    CHECK(x == y);

    bool varied = false;
    GraphObject base = [&] {
        Rng r(0);
        return random_object(r, StructureKind::Ssh);
    }();
    for (std::uint64_t seed = 1; seed < 10 && !varied; ++seed) {
        Rng r(seed);
        varied = !(random_object(r, StructureKind::Ssh) == base);
    }
    CHECK(varied);
}

TEST_CASE("random morphisms hold the preservation law for every kind") {
    for (MorKind kind : kMorKinds)
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            Rng rng(seed);
            Morphism m = random_morphism(rng, kind);
            CHECK(check_morphism(m));
        }
}

TEST_CASE("random morphisms can carry refinements on both sides") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Rng rng(seed);
        Morphism m = random_morphism(rng, MorKind::StrictSsh, Predicate::Multigraph);
        CHECK(satisfies(m.dom(), Predicate::Multigraph));
        CHECK(satisfies(m.cod(), Predicate::Multigraph));

        Morphism s = random_morphism(rng, MorKind::SSys, Predicate::SimpleGraph);
        CHECK(satisfies(s.dom(), Predicate::SimpleGraph));
        CHECK(satisfies(s.cod(), Predicate::SimpleGraph));

        Morphism d = random_morphism(rng, MorKind::Digraph, Predicate::Symmetric);
        CHECK(satisfies(d.dom(), Predicate::Symmetric));
        CHECK(satisfies(d.cod(), Predicate::Symmetric));
    }
}

TEST_CASE("morphisms into a fixed codomain land exactly there") {
    GraphObject targets[] = {fixtures::two_edge_path(), fixtures::one_three_edge()};
    for (const GraphObject& t : targets)
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            Rng rng(seed);
            Morphism m = random_morphism_into(rng, MorKind::StrictSsh, t);
            CHECK(m.cod() == t);
            CHECK(check_morphism(m));
        }
}

TEST_CASE("morphisms into functor images exercise every structure kind") {
    GraphObject h = fixtures::two_edge_path();
    GraphObject i = apply(FunctorName::WeakOf, h);
    GraphObject r = apply(FunctorName::EmbR, i);
    GraphObject q = apply(FunctorName::AssocD, h);
    GraphObject d = apply(FunctorName::ZGra, apply(FunctorName::SimpM, h));
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Rng rng(seed);
        CHECK(check_morphism(random_morphism_into(rng, MorKind::IStr, i)));
        CHECK(check_morphism(random_morphism_into(rng, MorKind::IncHyp, r)));
        CHECK(check_morphism(random_morphism_into(rng, MorKind::Quiver, q)));
        CHECK(check_morphism(random_morphism_into(rng, MorKind::Digraph, d)));
        CHECK(check_morphism(random_morphism_into(rng, MorKind::WeakSsh, h)));
    }
}

TEST_CASE("morphisms out of a fixed domain start exactly there") {
    GraphObject sources[] = {fixtures::shared_endpoint_pair(), fixtures::one_loop_edge()};
    for (const GraphObject& s : sources)
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            Rng rng(seed);
            Morphism m = random_morphism_from(rng, MorKind::WeakSsh, s);
            CHECK(m.dom() == s);
            CHECK(check_morphism(m));
        }
}

TEST_CASE("composable pairs share the middle object and compose") {
    for (MorKind kind : kMorKinds)
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            Rng rng(seed);
            auto [f, g] = random_composable_pair(rng, kind);
            CHECK(f.cod() == g.dom());
            CHECK(check_morphism(compose(g, f)));
        }
}

TEST_CASE("generation requests reject mismatched kinds") {
    Rng rng(0);
    GraphObject q = fixtures::loop_quiver();
    CHECK_THROWS_AS(random_morphism_from(rng, MorKind::Digraph, q), KindError);
    CHECK_THROWS_AS(random_morphism_into(rng, MorKind::SSys, q), KindError);
}

TEST_CASE("random functions cover the hom set constraints") {
    Rng rng(3);
    FinSet dom{Atom::leaf("x"), Atom::leaf("y")};
    FinSet cod{Atom::leaf("u")};
    FinFunction f = random_function(rng, dom, cod);
    CHECK(f(Atom::leaf("x")) == Atom::leaf("u"));

    FinSet empty;
    FinFunction e = random_function(rng, empty, cod);
    CHECK(e.domain().empty());
    CHECK_THROWS_AS(random_function(rng, dom, empty), DomainError);
}
