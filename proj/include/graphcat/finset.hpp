#ifndef GRAPHCAT_FINSET_HPP
#define GRAPHCAT_FINSET_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "graphcat/atom.hpp"

namespace graphcat {

/// Default cap on the carrier size accepted by power_set and the subset
/// order; 2^12 subset atoms is the largest family built eagerly.
inline constexpr std::size_t kPowerSetCap = 12;

/// Default cap on |s| * |t| accepted by product.
inline constexpr std::size_t kProductCap = 4096;

/// Finite set of atoms, stored sorted and duplicate-free.
class FinSet {
public:
    FinSet() = default;
    explicit FinSet(std::vector<Atom> elems);
    FinSet(std::initializer_list<Atom> elems);

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(const Atom& a) const;
    /// Position of a in the sorted carrier; throws DomainError if absent.
    std::size_t index_of(const Atom& a) const;

    const std::vector<Atom>& elems() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    friend bool operator==(const FinSet& a, const FinSet& b) { return a.elems_ == b.elems_; }
    friend bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }

private:
    std::vector<Atom> elems_;
};

FinSet set_union(const FinSet& a, const FinSet& b);
FinSet set_intersection(const FinSet& a, const FinSet& b);
FinSet set_difference(const FinSet& a, const FinSet& b);
bool is_subset(const FinSet& a, const FinSet& b);

/// Total function between finite sets.  Values are stored aligned with the
/// sorted domain, so two functions are equal exactly when domain, codomain,
/// and value rows agree.
class FinFunction {
public:
    /// values[i] is the image of domain.elems()[i]; each value must lie in
    /// the codomain.
    FinFunction(FinSet domain, FinSet codomain, std::vector<Atom> values);

    static FinFunction identity(const FinSet& s);
    /// Builds values by evaluating fn on each domain element.
    template <typename Fn>
    static FinFunction tabulate(const FinSet& domain, FinSet codomain, Fn&& fn) {
        std::vector<Atom> values;
        values.reserve(domain.size());
        for (const Atom& a : domain)
            values.push_back(fn(a));
        return FinFunction(domain, std::move(codomain), std::move(values));
    }

    const FinSet& domain() const { return domain_; }
    const FinSet& codomain() const { return codomain_; }
    const std::vector<Atom>& values() const { return values_; }

    /// Applies the function; throws DomainError outside the domain.
    const Atom& operator()(const Atom& a) const;

    bool is_injective() const;
    bool is_surjective() const;

    /// Same mapping restricted to a subset of the domain.
    FinFunction restricted(const FinSet& sub) const;
    /// Same mapping with a replacement codomain containing every value.
    FinFunction corestricted(FinSet codomain) const;

    friend bool operator==(const FinFunction& f, const FinFunction& g) {
        return f.domain_ == g.domain_ && f.codomain_ == g.codomain_ && f.values_ == g.values_;
    }
    friend bool operator!=(const FinFunction& f, const FinFunction& g) { return !(f == g); }

private:
    FinSet domain_;
    FinSet codomain_;
    std::vector<Atom> values_;
};

/// g after f; f's values must lie in g's domain.
FinFunction compose(const FinFunction& g, const FinFunction& f);

/// Image of a subset of the domain under f, as a set of codomain atoms.
FinSet image(const FinFunction& f, const FinSet& subset);

/// All subsets of s as subset atoms, in atom order.  Throws CapError when
/// |s| exceeds the cap.
FinSet power_set(const FinSet& s, std::size_t cap = kPowerSetCap);

/// Direct image map between power sets: A maps to { f(a) : a in A }.
FinFunction power_map(const FinFunction& f, std::size_t cap = kPowerSetCap);

/// Members of a subset atom, as a set.
FinSet subset_members(const Atom& subset_atom);
/// The subset atom denoting s.
Atom subset_atom(const FinSet& s);

/// Cartesian product as a set of pair atoms, with the two projections.
struct Product {
    FinSet carrier;
    FinFunction proj0;
    FinFunction proj1;
};
Product product(const FinSet& s, const FinSet& t, std::size_t cap = kProductCap);

/// Disjoint union tagged 0/1, with the two injections.
struct TaggedCoproduct {
    FinSet carrier;
    FinFunction inj0;
    FinFunction inj1;
};
TaggedCoproduct tagged_coproduct(const FinSet& s, const FinSet& t);

/// The unique map out of the coproduct of u's and v's domains restricting
/// to u on side 0 and v on side 1.  Codomains must agree.
FinFunction copair(const FinFunction& u, const FinFunction& v);

/// Pairs (pair atoms) on which f takes equal values, with the two
/// projections back to f's domain.
struct KernelPair {
    FinSet carrier;
    FinFunction proj0;
    FinFunction proj1;
};
KernelPair kernel_pair(const FinFunction& f);

} // namespace graphcat

#endif
