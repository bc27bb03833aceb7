#ifndef GRAPHCAT_MORPHISM_HPP
#define GRAPHCAT_MORPHISM_HPP

#include <memory>
#include <optional>
#include <string>

#include "graphcat/structures.hpp"

namespace graphcat {

/// What a structure-preserving map between two objects consists of and
/// which preservation law it must satisfy.
enum class MorKind {
    Quiver,    // vertex + arc maps; sources and targets commute
    Digraph,   // vertex map; arcs land on arcs
    StrictSsh, // vertex + edge maps; endpoint image equals the target edge's endpoints
    WeakSsh,   // vertex + edge maps; endpoint image contained in the target edge's endpoints
    SSys,      // vertex map; each subset's image is again an edge
    IncHyp,    // vertex + edge + incidence maps; ports and attachments commute
    IStr       // vertex + edge maps; incidence pairs land on incidence pairs
};

const char* mor_kind_name(MorKind k);
std::optional<MorKind> mor_kind_from_name(const std::string& name);

/// Which structure kind a morphism kind connects.
StructureKind object_kind_of(MorKind k);

/// Componentwise map between two objects of matching kind.  Construction
/// through make() validates the component shapes (carriers and codomains);
/// whether the preservation law holds is a separate check.
class Morphism {
public:
    /// Shape-validates components against the endpoints; throws KindError
    /// on any mismatch.  Component count is fixed by the kind.
    static Morphism make(MorKind kind, GraphObject dom, GraphObject cod, FinFunction vertex_map,
                         std::optional<FinFunction> edge_map = std::nullopt,
                         std::optional<FinFunction> incidence_map = std::nullopt);

    static Morphism identity(const GraphObject& x, MorKind kind);

    MorKind kind() const { return kind_; }
    const GraphObject& dom() const { return *dom_; }
    const GraphObject& cod() const { return *cod_; }
    const FinFunction& vertex_map() const { return vertex_map_; }
    const FinFunction& edge_map() const;
    const FinFunction& incidence_map() const;
    bool has_edge_map() const { return edge_map_.has_value(); }
    bool has_incidence_map() const { return incidence_map_.has_value(); }

    /// Same components viewed with the weak preservation law.
    Morphism as_weak() const;

    friend bool operator==(const Morphism& f, const Morphism& g);
    friend bool operator!=(const Morphism& f, const Morphism& g) { return !(f == g); }

private:
    Morphism(MorKind kind, std::shared_ptr<const GraphObject> dom,
             std::shared_ptr<const GraphObject> cod, FinFunction vertex_map,
             std::optional<FinFunction> edge_map, std::optional<FinFunction> incidence_map)
        : kind_(kind), dom_(std::move(dom)), cod_(std::move(cod)),
          vertex_map_(std::move(vertex_map)), edge_map_(std::move(edge_map)),
          incidence_map_(std::move(incidence_map)) {}

    MorKind kind_;
    std::shared_ptr<const GraphObject> dom_;
    std::shared_ptr<const GraphObject> cod_;
    FinFunction vertex_map_;
    std::optional<FinFunction> edge_map_;
    std::optional<FinFunction> incidence_map_;
};

/// Whether the preservation law of the morphism's kind holds.
bool check_morphism(const Morphism& m);

/// g after f; kinds must match and f's codomain object must equal g's
/// domain object.
Morphism compose(const Morphism& g, const Morphism& f);

/// Bijective on every component.
bool is_isomorphism(const Morphism& m);

/// Deterministic injective byte encoding of kind, endpoints, components.
std::string canonical_encode(const Morphism& m);

} // namespace graphcat

#endif
