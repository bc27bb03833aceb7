#ifndef GRAPHCAT_HOM_SEARCH_HPP
#define GRAPHCAT_HOM_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "graphcat/morphism.hpp"

namespace graphcat {

/// Per-query size limits on both endpoints of a homomorphism search.
/// Exceeding a cap raises CapError before any search work starts.
struct Caps {
    std::size_t vertices = 6;
    std::size_t edges = 6;
    std::size_t incidences = 12;
};

/// One complete assignment found by the search.  The vectors are aligned
/// with the sorted carriers of the domain (same convention as
/// FinFunction values); edge and incidence are null for kinds whose
/// morphisms lack those components.  The referenced storage is only valid
/// during the visit.
struct RawHom {
    const std::vector<Atom>& vertex;
    const std::vector<Atom>* edge;
    const std::vector<Atom>* incidence;
};

/// Builds the morphism a visited assignment denotes.
Morphism hom_from_raw(MorKind kind, const GraphObject& dom, const GraphObject& cod,
                      const RawHom& raw);

/// Backtracking search over all morphisms dom -> cod of the given kind.
/// The visitor runs once per morphism, in search order; returning false
/// stops the search.  Search order follows most-constrained-first slot
/// ordering, so it is deterministic but not sorted.
void for_each_hom(MorKind kind, const GraphObject& dom, const GraphObject& cod, const Caps& caps,
                  const std::function<bool(const RawHom&)>& visit);

/// Same search restricted to morphisms whose vertex component equals the
/// given values (aligned with the sorted domain carrier, as in RawHom).
void for_each_hom_fixing_vertices(MorKind kind, const GraphObject& dom, const GraphObject& cod,
                                  const std::vector<Atom>& vertex_values, const Caps& caps,
                                  const std::function<bool(const RawHom&)>& visit);

/// All morphisms dom -> cod, sorted by their canonical encoding.
std::vector<Morphism> enumerate_homs(MorKind kind, const GraphObject& dom,
                                     const GraphObject& cod, const Caps& caps = {});

/// |Hom(dom, cod)| without materializing the morphisms; free choices
/// multiply instead of being walked one by one.  Throws CapError if the
/// count leaves uint64 range.
std::uint64_t count_homs(MorKind kind, const GraphObject& dom, const GraphObject& cod,
                         const Caps& caps = {});

bool exists_hom(MorKind kind, const GraphObject& dom, const GraphObject& cod,
                const Caps& caps = {});

} // namespace graphcat

#endif
