#include "graphcat/order.hpp"

#include <algorithm>

#include "graphcat/errors.hpp"

namespace graphcat {

QuasiOrder::QuasiOrder(FinSet carrier, std::vector<std::pair<Atom, Atom>> leq)
    : carrier_(std::move(carrier)), leq_(std::move(leq)) {
    std::sort(leq_.begin(), leq_.end());
    leq_.erase(std::unique(leq_.begin(), leq_.end()), leq_.end());
    for (const auto& [a, b] : leq_)
        if (!carrier_.contains(a) || !carrier_.contains(b))
            throw InvariantError("order pair (" + a.show() + "," + b.show() +
                                 ") mentions elements outside the carrier");
    for (const Atom& a : carrier_)
        if (!this->leq(a, a))
            throw InvariantError("order not reflexive at " + a.show());
    for (const auto& [a, b] : leq_)
        for (const auto& [c, d] : leq_)
            if (b == c && !this->leq(a, d))
                throw InvariantError("order not transitive via " + b.show());
}

bool QuasiOrder::leq(const Atom& a, const Atom& b) const {
    return std::binary_search(leq_.begin(), leq_.end(), std::make_pair(a, b));
}

QuasiOrder discrete_order(const FinSet& s) {
    std::vector<std::pair<Atom, Atom>> leq;
    leq.reserve(s.size());
    for (const Atom& a : s)
        leq.emplace_back(a, a);
    return QuasiOrder(s, std::move(leq));
}

QuasiOrder dual_order(const QuasiOrder& p) {
    std::vector<std::pair<Atom, Atom>> leq;
    leq.reserve(p.pairs().size());
    for (const auto& [a, b] : p.pairs())
        leq.emplace_back(b, a);
    return QuasiOrder(p.carrier(), std::move(leq));
}

QuasiOrder subset_order(const FinSet& s, std::size_t cap) {
    FinSet subsets = power_set(s, cap);
    std::vector<std::pair<Atom, Atom>> leq;
    for (const Atom& a : subsets)
        for (const Atom& b : subsets)
            if (is_subset(subset_members(a), subset_members(b)))
                leq.emplace_back(a, b);
    return QuasiOrder(subsets, std::move(leq));
}

bool is_monotone(const FinFunction& f, const QuasiOrder& p, const QuasiOrder& q) {
    if (f.domain() != p.carrier() || f.codomain() != q.carrier())
        throw KindError("is_monotone: function carriers do not match the orders");
    for (const auto& [a, b] : p.pairs())
        if (!q.leq(f(a), f(b)))
            return false;
    return true;
}

bool lax_square_holds(const FinFunction& g, const FinFunction& f, const FinFunction& eps,
                      const FinFunction& eps_prime) {
    if (g.domain() != eps.domain() || g.codomain() != eps_prime.domain())
        throw KindError("lax_square_holds: edge map does not match the endpoint assignments");
    for (const Atom& e : eps.domain()) {
        FinSet ends = subset_members(eps(e));
        for (const Atom& v : ends)
            if (!f.domain().contains(v))
                throw KindError("lax_square_holds: endpoint " + v.show() +
                                " outside the vertex map domain");
        if (!is_subset(image(f, ends), subset_members(eps_prime(g(e)))))
            return false;
    }
    return true;
}

} // namespace graphcat
