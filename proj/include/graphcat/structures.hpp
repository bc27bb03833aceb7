#ifndef GRAPHCAT_STRUCTURES_HPP
#define GRAPHCAT_STRUCTURES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphcat/finset.hpp"

namespace graphcat {

/// Vertices and named arcs with source and target assignments.  Parallel
/// arcs and loops are both allowed.
struct Quiver {
    FinSet vertices;
    FinSet arcs;
    FinFunction src; // arcs -> vertices
    FinFunction tgt; // arcs -> vertices

    friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// Vertices with a set of ordered vertex pairs; arcs are the pair atoms
/// themselves, so there is at most one arc per direction.
struct Digraph {
    FinSet vertices;
    FinSet arcs; // pair atoms over vertices

    friend bool operator==(const Digraph&, const Digraph&) = default;
};

/// Vertices and named edges, each assigned a finite set of endpoints.
/// Endpoint sets may be empty, and distinct edges may share endpoints.
/// Build through make_ssh: it normalizes the eps codomain to the distinct
/// endpoint sets, which keeps object equality structural.
struct SetSystemHypergraph {
    FinSet vertices;
    FinSet edges;
    FinFunction eps; // edges -> subset atoms over vertices

    friend bool operator==(const SetSystemHypergraph&, const SetSystemHypergraph&) = default;
};

template <typename Fn>
SetSystemHypergraph make_ssh(FinSet vertices, FinSet edges, Fn&& endpoint) {
    std::vector<Atom> values;
    values.reserve(edges.size());
    for (const Atom& e : edges)
        values.push_back(endpoint(e));
    FinSet cod(values);
    FinFunction eps(edges, std::move(cod), std::move(values));
    return SetSystemHypergraph{std::move(vertices), std::move(edges), std::move(eps)};
}

/// Vertices with a family of subsets; edges are the subset atoms
/// themselves, so no two edges share an endpoint set.
struct SetSystem {
    FinSet vertices;
    FinSet edges; // subset atoms over vertices

    friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

/// Vertices, edges, and named incidences, each with a port (vertex) and an
/// attachment (edge).  Parallel incidences are allowed.
struct IncidenceHypergraph {
    FinSet vertices;
    FinSet edges;
    FinSet incidences;
    FinFunction port;   // incidences -> vertices
    FinFunction attach; // incidences -> edges

    friend bool operator==(const IncidenceHypergraph&, const IncidenceHypergraph&) = default;
};

/// Vertices and edges with a set of (vertex, edge) incidence pairs; the
/// incidences are the pair atoms themselves.
struct IncidenceStructure {
    FinSet vertices;
    FinSet edges;
    FinSet incidences; // pair atoms (vertex, edge)

    friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;
};

enum class StructureKind { Quiver, Digraph, Ssh, SSys, IncHyp, IStr };

/// Refinements carving out full subcategories of the carriers above.
enum class Predicate {
    Multigraph,  // ssh whose endpoint sets have size 1 or 2
    SimpleGraph, // set system whose subsets have size 1 or 2
    Symmetric    // digraph closed under arc reversal
};

const char* kind_name(StructureKind k);
const char* predicate_name(Predicate p);
std::optional<StructureKind> kind_from_name(const std::string& name);
std::optional<Predicate> predicate_from_name(const std::string& name);

/// Tagged union over the six structure representations.
class GraphObject {
public:
    GraphObject(Quiver q) : v_(std::move(q)) {}
    GraphObject(Digraph d) : v_(std::move(d)) {}
    GraphObject(SetSystemHypergraph h) : v_(std::move(h)) {}
    GraphObject(SetSystem s) : v_(std::move(s)) {}
    GraphObject(IncidenceHypergraph r) : v_(std::move(r)) {}
    GraphObject(IncidenceStructure i) : v_(std::move(i)) {}

    StructureKind kind() const;

    const Quiver& quiver() const { return expect<Quiver>(StructureKind::Quiver); }
    const Digraph& digraph() const { return expect<Digraph>(StructureKind::Digraph); }
    const SetSystemHypergraph& ssh() const {
        return expect<SetSystemHypergraph>(StructureKind::Ssh);
    }
    const SetSystem& ssys() const { return expect<SetSystem>(StructureKind::SSys); }
    const IncidenceHypergraph& inc_hyp() const {
        return expect<IncidenceHypergraph>(StructureKind::IncHyp);
    }
    const IncidenceStructure& istr() const {
        return expect<IncidenceStructure>(StructureKind::IStr);
    }

    /// Vertex carrier, common to every kind.
    const FinSet& vertices() const;

    friend bool operator==(const GraphObject& a, const GraphObject& b) { return a.v_ == b.v_; }
    friend bool operator!=(const GraphObject& a, const GraphObject& b) { return !(a == b); }

private:
    template <typename T>
    const T& expect(StructureKind k) const {
        if (kind() != k)
            throw_kind_mismatch(k);
        return std::get<T>(v_);
    }
    [[noreturn]] void throw_kind_mismatch(StructureKind wanted) const;

    std::variant<Quiver, Digraph, SetSystemHypergraph, SetSystem, IncidenceHypergraph,
                 IncidenceStructure>
        v_;
};

/// Internal consistency violations, empty when the object is well formed.
/// With a predicate, also reports elements breaking the refinement.
std::vector<std::string> validate(const GraphObject& x,
                                  std::optional<Predicate> pred = std::nullopt);

bool satisfies(const GraphObject& x, Predicate pred);

/// Deterministic injective byte encoding; equal objects encode equally and
/// distinct ones differ.
std::string canonical_encode(const GraphObject& x);
std::string canonical_encode(const Atom& a);

} // namespace graphcat

#endif
