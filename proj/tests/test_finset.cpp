#include "doctest.h"

#include <algorithm>
#include <vector>

#include "graphcat/errors.hpp"
#include "graphcat/finset.hpp"
#include "graphcat/order.hpp"

using namespace graphcat;

namespace {

Atom L(const char* s) { return Atom::leaf(s); }

FinSet abc() { return FinSet{L("a"), L("b"), L("c")}; }

/// Every total function between two small carriers, in odometer order.
std::vector<FinFunction> all_functions(const FinSet& dom, const FinSet& cod) {
    std::vector<FinFunction> out;
    if (dom.empty()) {
        out.emplace_back(dom, cod, std::vector<Atom>{});
        return out;
    }
    if (cod.empty())
        return out;
    std::vector<std::size_t> idx(dom.size(), 0);
    while (true) {
        std::vector<Atom> values;
        for (std::size_t i : idx)
            values.push_back(cod.elems()[i]);
        out.emplace_back(dom, cod, std::move(values));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == cod.size()) {
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size())
            break;
    }
    return out;
}

} // namespace

TEST_CASE("atom total order ranks constructors before content") {
    Atom a = L("a"), b = L("b");
    Atom p = Atom::pair(a, b);
    Atom t = Atom::triple(a, a, a);
    Atom s = Atom::subset({a});
    Atom g = Atom::tag(0, a);
    CHECK(b < p);
    CHECK(p < t);
    CHECK(t < s);
    CHECK(s < g);
    CHECK(a < b);
    CHECK(Atom::pair(a, a) < Atom::pair(a, b));
    CHECK(Atom::tag(0, b) < Atom::tag(1, a));
    // subsets compare lexicographically on sorted members, prefix first
    CHECK(Atom::subset({}) < Atom::subset({a}));
    CHECK(Atom::subset({a}) < Atom::subset({a, b}));
    CHECK(Atom::subset({a, b}) < Atom::subset({b}));
}

TEST_CASE("subset atoms deduplicate and sort members") {
    Atom s1 = Atom::subset({L("b"), L("a"), L("b")});
    Atom s2 = Atom::subset({L("a"), L("b")});
    CHECK(s1 == s2);
    CHECK(s1.parts().size() == 2);
    CHECK(s1.show() == "{a,b}");
}

TEST_CASE("finset stores a sorted duplicate-free carrier") {
    FinSet s{L("c"), L("a"), L("c"), L("b")};
    CHECK(s.size() == 3);
    CHECK(s.elems()[0] == L("a"));
    CHECK(s.contains(L("c")));
    CHECK_FALSE(s.contains(L("d")));
    CHECK_THROWS_AS(s.index_of(L("z")), DomainError);
}

TEST_CASE("finfunction validates shape and applies by lookup") {
    FinSet dom{L("x"), L("y")};
    FinSet cod{L("0"), L("1")};
    FinFunction f(dom, cod, {L("1"), L("0")});
    CHECK(f(L("x")) == L("1"));
    CHECK(f(L("y")) == L("0"));
    CHECK_THROWS_AS(f(L("z")), DomainError);
    CHECK_THROWS_AS(FinFunction(dom, cod, {L("1")}), InvariantError);
    CHECK_THROWS_AS(FinFunction(dom, cod, {L("1"), L("2")}), InvariantError);
    CHECK(f.is_injective());
    CHECK(f.is_surjective());
}

TEST_CASE("composition matches pointwise evaluation") {
    FinSet a{L("x")}, b{L("p"), L("q")}, c{L("0"), L("1")};
    FinFunction f(a, b, {L("q")});
    FinFunction g(b, c, {L("0"), L("1")});
    FinFunction gf = compose(g, f);
    CHECK(gf(L("x")) == L("1"));
    CHECK(gf.domain() == a);
    CHECK(gf.codomain() == c);
    FinFunction h(a, c, {L("0")});
    CHECK_THROWS_AS(compose(f, h), KindError);
}

TEST_CASE("power_set agrees with independent bitmask enumeration") {
    FinSet s = abc();
    FinSet ps = power_set(s);
    CHECK(ps.size() == 8);

    // oracle: generate every mask directly over the raw element list
    std::vector<Atom> expect;
    for (unsigned mask = 0; mask < 8u; ++mask) {
        std::vector<Atom> members;
        for (unsigned i = 0; i < 3u; ++i)
            if (mask & (1u << i))
                members.push_back(s.elems()[i]);
        expect.push_back(Atom::subset(members));
    }
    std::sort(expect.begin(), expect.end());
    CHECK(ps.elems() == expect);

    CHECK_THROWS_AS(power_set(s, 2), CapError);
}

TEST_CASE("power_set of an empty carrier is the singleton empty subset") {
    FinSet ps = power_set(FinSet{});
    CHECK(ps.size() == 1);
    CHECK(ps.elems()[0] == Atom::subset({}));
}

TEST_CASE("image takes subsets of the domain onto value sets") {
    FinSet dom = abc();
    FinSet cod{L("0"), L("1")};
    FinFunction f(dom, cod, {L("0"), L("0"), L("1")});
    CHECK(image(f, FinSet{L("a"), L("b")}) == FinSet{L("0")});
    CHECK(image(f, dom) == cod);
    CHECK(image(f, FinSet{}) == FinSet{});
    CHECK_THROWS_AS(image(f, FinSet{L("z")}), DomainError);
}

TEST_CASE("product carries both projections") {
    FinSet s{L("a"), L("b")}, t{L("0"), L("1"), L("2")};
    Product p = product(s, t);
    CHECK(p.carrier.size() == 6);
    for (const Atom& pr : p.carrier) {
        CHECK(p.proj0(pr) == pr.parts()[0]);
        CHECK(p.proj1(pr) == pr.parts()[1]);
    }
    CHECK_THROWS_AS(product(s, t, 5), CapError);
}

TEST_CASE("tagged coproduct keeps both sides apart and copairing is unique") {
    FinSet s{L("a"), L("b")}, t{L("a"), L("z")};
    TaggedCoproduct cp = tagged_coproduct(s, t);
    CHECK(cp.carrier.size() == 4); // shared name 'a' stays separated by tags
    CHECK(cp.inj0(L("a")) == Atom::tag(0, L("a")));
    CHECK(cp.inj1(L("a")) == Atom::tag(1, L("a")));

    FinSet z{L("0"), L("1")};
    FinFunction u(s, z, {L("0"), L("1")});
    FinFunction v(t, z, {L("1"), L("1")});
    FinFunction h = copair(u, v);
    CHECK(compose(h, cp.inj0) == u);
    CHECK(compose(h, cp.inj1) == v);

    // the copairing is the only map restricting to u and v on the two sides
    int mediating = 0;
    for (const FinFunction& cand : all_functions(cp.carrier, z))
        if (compose(cand, cp.inj0) == u && compose(cand, cp.inj1) == v)
            ++mediating;
    CHECK(mediating == 1);
}

TEST_CASE("kernel pair is the pullback of a map against itself") {
    FinSet dom = abc();
    FinSet cod{L("0"), L("1")};
    FinFunction f(dom, cod, {L("0"), L("0"), L("1")});
    KernelPair kp = kernel_pair(f);
    // a,b collapse: pairs aa ab ba bb cc
    CHECK(kp.carrier.size() == 5);
    CHECK(compose(f, kp.proj0) == compose(f, kp.proj1));

    // universal property: each equalizing cone factors through exactly one map
    FinSet w{L("w0"), L("w1")};
    for (const FinFunction& u0 : all_functions(w, dom))
        for (const FinFunction& u1 : all_functions(w, dom)) {
            if (compose(f, u0) != compose(f, u1))
                continue;
            int mediating = 0;
            for (const FinFunction& h : all_functions(w, kp.carrier))
                if (compose(kp.proj0, h) == u0 && compose(kp.proj1, h) == u1)
                    ++mediating;
            CHECK(mediating == 1);
        }
}

TEST_CASE("kernel pair of an injective map is the diagonal") {
    FinSet dom{L("a"), L("b")};
    FinFunction f = FinFunction::identity(dom);
    KernelPair kp = kernel_pair(f);
    CHECK(kp.carrier.size() == 2);
    for (const Atom& p : kp.carrier)
        CHECK(p.parts()[0] == p.parts()[1]);
}

TEST_CASE("quasi-order construction checks reflexivity and transitivity") {
    FinSet s{L("a"), L("b"), L("c")};
    // missing (a,a)
    CHECK_THROWS_AS(QuasiOrder(s, {{L("b"), L("b")}, {L("c"), L("c")}}), InvariantError);
    // a<=b, b<=c without a<=c
    std::vector<std::pair<Atom, Atom>> chain = {
        {L("a"), L("a")}, {L("b"), L("b")}, {L("c"), L("c")}, {L("a"), L("b")}, {L("b"), L("c")}};
    CHECK_THROWS_AS(QuasiOrder(s, chain), InvariantError);
    chain.emplace_back(L("a"), L("c"));
    QuasiOrder p(s, chain);
    CHECK(p.leq(L("a"), L("c")));
    CHECK_FALSE(p.leq(L("c"), L("a")));
}

TEST_CASE("dual order is an involution") {
    FinSet s{L("a"), L("b")};
    QuasiOrder p(s, {{L("a"), L("a")}, {L("b"), L("b")}, {L("a"), L("b")}});
    QuasiOrder d = dual_order(p);
    CHECK(d.leq(L("b"), L("a")));
    CHECK_FALSE(d.leq(L("a"), L("b")));
    CHECK(dual_order(d) == p);
}

TEST_CASE("subset order on a 2-set has nine related pairs") {
    QuasiOrder p = subset_order(FinSet{L("0"), L("1")});
    CHECK(p.carrier().size() == 4);
    CHECK(p.pairs().size() == 9);
    CHECK(p.leq(Atom::subset({}), Atom::subset({L("0"), L("1")})));
    CHECK_FALSE(p.leq(Atom::subset({L("0")}), Atom::subset({L("1")})));
}

TEST_CASE("image maps are monotone between subset orders") {
    // exhaustive over every function on carriers of size <= 3
    FinSet dom = abc();
    FinSet cod{L("0"), L("1")};
    QuasiOrder po = subset_order(dom), qo = subset_order(cod);
    for (const FinFunction& f : all_functions(dom, cod))
        CHECK(is_monotone(power_map(f), po, qo));
}

TEST_CASE("any map out of a discrete order is monotone") {
    FinSet dom{L("a"), L("b")};
    FinSet cod{L("0"), L("1")};
    QuasiOrder disc = discrete_order(dom);
    QuasiOrder q(cod, {{L("0"), L("0")}, {L("1"), L("1")}, {L("0"), L("1")}});
    for (const FinFunction& f : all_functions(dom, cod))
        CHECK(is_monotone(f, disc, q));
    FinFunction swap(cod, cod, {L("1"), L("0")});
    CHECK_FALSE(is_monotone(swap, q, q));
    CHECK_THROWS_AS(is_monotone(swap, disc, q), KindError);
}

TEST_CASE("lax squares compare endpoint images pointwise") {
    FinSet v{L("a"), L("b")}, vp{L("x")};
    FinSet e{L("e")}, ep{L("f")};
    FinFunction f(v, vp, {L("x"), L("x")});
    FinFunction g(e, ep, {L("f")});
    FinFunction eps =
        FinFunction::tabulate(e, FinSet{Atom::subset({L("a"), L("b")})},
                              [&](const Atom&) { return Atom::subset({L("a"), L("b")}); });
    FinFunction eps_big = FinFunction::tabulate(ep, FinSet{Atom::subset({L("x")})},
                                                [&](const Atom&) { return Atom::subset({L("x")}); });
    FinFunction eps_empty = FinFunction::tabulate(ep, FinSet{Atom::subset({})},
                                                  [&](const Atom&) { return Atom::subset({}); });
    CHECK(lax_square_holds(g, f, eps, eps_big));
    CHECK_FALSE(lax_square_holds(g, f, eps, eps_empty));
    CHECK_THROWS_AS(lax_square_holds(f, g, eps, eps_big), KindError);
}
