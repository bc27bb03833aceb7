#ifndef GRAPHCAT_ORDER_HPP
#define GRAPHCAT_ORDER_HPP

#include <utility>
#include <vector>

#include "graphcat/finset.hpp"

namespace graphcat {

/// Reflexive transitive relation on a finite carrier, stored extensionally
/// as the sorted list of related pairs.  Construction validates both
/// closure properties.
class QuasiOrder {
public:
    QuasiOrder(FinSet carrier, std::vector<std::pair<Atom, Atom>> leq);

    const FinSet& carrier() const { return carrier_; }
    const std::vector<std::pair<Atom, Atom>>& pairs() const { return leq_; }
    bool leq(const Atom& a, const Atom& b) const;

    friend bool operator==(const QuasiOrder& p, const QuasiOrder& q) {
        return p.carrier_ == q.carrier_ && p.leq_ == q.leq_;
    }
    friend bool operator!=(const QuasiOrder& p, const QuasiOrder& q) { return !(p == q); }

private:
    FinSet carrier_;
    std::vector<std::pair<Atom, Atom>> leq_;
};

/// Order relating each element only to itself.
QuasiOrder discrete_order(const FinSet& s);

/// Same carrier with the relation reversed.
QuasiOrder dual_order(const QuasiOrder& p);

/// Power set of s ordered by inclusion.
QuasiOrder subset_order(const FinSet& s, std::size_t cap = kPowerSetCap);

/// Whether f maps related elements to related elements.
bool is_monotone(const FinFunction& f, const QuasiOrder& p, const QuasiOrder& q);

/// Lax commuting square for endpoint assignments: given edge data
/// eps : E -> P(V) and eps' : E' -> P(V') (values are subset atoms), a
/// vertex map f : V -> V' and an edge map g : E -> E' form a lax square
/// when the image of eps(e) under f is contained in eps'(g(e)) for all e.
bool lax_square_holds(const FinFunction& g, const FinFunction& f, const FinFunction& eps,
                      const FinFunction& eps_prime);

} // namespace graphcat

#endif
