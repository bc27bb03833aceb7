#include "graphcat/finset.hpp"

#include <algorithm>
#include <iterator>

#include "graphcat/errors.hpp"

namespace graphcat {

FinSet::FinSet(std::vector<Atom> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

FinSet::FinSet(std::initializer_list<Atom> elems) : FinSet(std::vector<Atom>(elems)) {}

bool FinSet::contains(const Atom& a) const {
    return std::binary_search(elems_.begin(), elems_.end(), a);
}

std::size_t FinSet::index_of(const Atom& a) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), a);
    if (it == elems_.end() || *it != a)
        throw DomainError("element " + a.show() + " not in set");
    return static_cast<std::size_t>(std::distance(elems_.begin(), it));
}

FinSet set_union(const FinSet& a, const FinSet& b) {
    std::vector<Atom> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FinSet(std::move(out));
}

FinSet set_intersection(const FinSet& a, const FinSet& b) {
    std::vector<Atom> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FinSet(std::move(out));
}

FinSet set_difference(const FinSet& a, const FinSet& b) {
    std::vector<Atom> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FinSet(std::move(out));
}

bool is_subset(const FinSet& a, const FinSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FinFunction::FinFunction(FinSet domain, FinSet codomain, std::vector<Atom> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
    if (values_.size() != domain_.size())
        throw InvariantError("function value row does not match domain size");
    for (const Atom& v : values_)
        if (!codomain_.contains(v))
            throw InvariantError("function value " + v.show() + " not in codomain");
}

FinFunction FinFunction::identity(const FinSet& s) {
    return FinFunction(s, s, s.elems());
}

const Atom& FinFunction::operator()(const Atom& a) const {
    return values_[domain_.index_of(a)];
}

bool FinFunction::is_injective() const {
    std::vector<Atom> seen(values_);
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool FinFunction::is_surjective() const {
    return FinSet(values_).size() == codomain_.size();
}

FinFunction FinFunction::restricted(const FinSet& sub) const {
    if (!is_subset(sub, domain_))
        throw DomainError("restriction set is not a subset of the domain");
    return tabulate(sub, codomain_, [&](const Atom& a) { return (*this)(a); });
}

FinFunction FinFunction::corestricted(FinSet codomain) const {
    return FinFunction(domain_, std::move(codomain), values_);
}

FinFunction compose(const FinFunction& g, const FinFunction& f) {
    if (!is_subset(f.codomain(), g.domain()))
        throw KindError("compose: codomain of inner map not contained in domain of outer map");
    return FinFunction::tabulate(f.domain(), g.codomain(),
                                 [&](const Atom& a) { return g(f(a)); });
}

FinSet image(const FinFunction& f, const FinSet& subset) {
    std::vector<Atom> out;
    out.reserve(subset.size());
    for (const Atom& a : subset)
        out.push_back(f(a));
    return FinSet(std::move(out));
}

FinSet power_set(const FinSet& s, std::size_t cap) {
    if (s.size() > cap)
        throw CapError("power_set: carrier size " + std::to_string(s.size()) +
                       " exceeds cap " + std::to_string(cap));
    const auto& xs = s.elems();
    std::vector<Atom> subsets;
    subsets.reserve(std::size_t{1} << xs.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << xs.size()); ++mask) {
        std::vector<Atom> members;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (mask & (std::size_t{1} << i))
                members.push_back(xs[i]);
        subsets.push_back(Atom::subset(std::move(members)));
    }
    return FinSet(std::move(subsets));
}

FinFunction power_map(const FinFunction& f, std::size_t cap) {
    FinSet dom = power_set(f.domain(), cap);
    FinSet cod = power_set(f.codomain(), cap);
    return FinFunction::tabulate(dom, cod, [&](const Atom& a) {
        return subset_atom(image(f, subset_members(a)));
    });
}

FinSet subset_members(const Atom& subset_atom) {
    if (!subset_atom.is(Atom::Kind::Subset))
        throw KindError("subset_members on non-subset atom " + subset_atom.show());
    return FinSet(subset_atom.parts());
}

Atom subset_atom(const FinSet& s) {
    return Atom::subset(s.elems());
}

Product product(const FinSet& s, const FinSet& t, std::size_t cap) {
    if (s.size() * t.size() > cap)
        throw CapError("product: size " + std::to_string(s.size() * t.size()) +
                       " exceeds cap " + std::to_string(cap));
    std::vector<Atom> pairs;
    pairs.reserve(s.size() * t.size());
    for (const Atom& a : s)
        for (const Atom& b : t)
            pairs.push_back(Atom::pair(a, b));
    FinSet carrier(std::move(pairs));
    FinFunction p0 = FinFunction::tabulate(carrier, s, [](const Atom& p) { return p.parts()[0]; });
    FinFunction p1 = FinFunction::tabulate(carrier, t, [](const Atom& p) { return p.parts()[1]; });
    return Product{std::move(carrier), std::move(p0), std::move(p1)};
}

TaggedCoproduct tagged_coproduct(const FinSet& s, const FinSet& t) {
    std::vector<Atom> elems;
    elems.reserve(s.size() + t.size());
    for (const Atom& a : s)
        elems.push_back(Atom::tag(0, a));
    for (const Atom& b : t)
        elems.push_back(Atom::tag(1, b));
    FinSet carrier(std::move(elems));
    FinFunction i0 = FinFunction::tabulate(s, carrier, [](const Atom& a) { return Atom::tag(0, a); });
    FinFunction i1 = FinFunction::tabulate(t, carrier, [](const Atom& b) { return Atom::tag(1, b); });
    return TaggedCoproduct{std::move(carrier), std::move(i0), std::move(i1)};
}

FinFunction copair(const FinFunction& u, const FinFunction& v) {
    if (u.codomain() != v.codomain())
        throw KindError("copair: codomains differ");
    TaggedCoproduct cp = tagged_coproduct(u.domain(), v.domain());
    return FinFunction::tabulate(cp.carrier, u.codomain(), [&](const Atom& a) {
        return a.tag_index() == 0 ? u(a.parts()[0]) : v(a.parts()[0]);
    });
}

KernelPair kernel_pair(const FinFunction& f) {
    std::vector<Atom> pairs;
    for (const Atom& a : f.domain())
        for (const Atom& b : f.domain())
            if (f(a) == f(b))
                pairs.push_back(Atom::pair(a, b));
    FinSet carrier(std::move(pairs));
    FinFunction p0 =
        FinFunction::tabulate(carrier, f.domain(), [](const Atom& p) { return p.parts()[0]; });
    FinFunction p1 =
        FinFunction::tabulate(carrier, f.domain(), [](const Atom& p) { return p.parts()[1]; });
    return KernelPair{std::move(carrier), std::move(p0), std::move(p1)};
}

} // namespace graphcat
