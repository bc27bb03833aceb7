#include "graphcat/morphism.hpp"

#include "graphcat/errors.hpp"

namespace graphcat {

const char* mor_kind_name(MorKind k) {
    switch (k) {
    case MorKind::Quiver: return "quiver";
    case MorKind::Digraph: return "digraph";
    case MorKind::StrictSsh: return "strict-ssh";
    case MorKind::WeakSsh: return "weak-ssh";
    case MorKind::SSys: return "ssys";
    case MorKind::IncHyp: return "inc-hyp";
    case MorKind::IStr: return "istr";
    }
    return "?";
}

std::optional<MorKind> mor_kind_from_name(const std::string& name) {
    for (MorKind k : {MorKind::Quiver, MorKind::Digraph, MorKind::StrictSsh, MorKind::WeakSsh,
                      MorKind::SSys, MorKind::IncHyp, MorKind::IStr})
        if (name == mor_kind_name(k))
            return k;
    // short aliases accepted on the command line
    if (name == "strict")
        return MorKind::StrictSsh;
    if (name == "weak")
        return MorKind::WeakSsh;
    return std::nullopt;
}

StructureKind object_kind_of(MorKind k) {
    switch (k) {
    case MorKind::Quiver: return StructureKind::Quiver;
    case MorKind::Digraph: return StructureKind::Digraph;
    case MorKind::StrictSsh:
    case MorKind::WeakSsh: return StructureKind::Ssh;
    case MorKind::SSys: return StructureKind::SSys;
    case MorKind::IncHyp: return StructureKind::IncHyp;
    case MorKind::IStr: return StructureKind::IStr;
    }
    throw KindError("unreachable morphism kind");
}

namespace {

/// Carrier pair (edge-like, incidence-like) for each structure kind; which
/// components a morphism of the kind carries.
struct ComponentShape {
    const FinSet* edge_dom = nullptr;
    const FinSet* edge_cod = nullptr;
    const FinSet* inc_dom = nullptr;
    const FinSet* inc_cod = nullptr;
};

ComponentShape component_shape(MorKind k, const GraphObject& dom, const GraphObject& cod) {
    ComponentShape s;
    switch (k) {
    case MorKind::Quiver:
        s.edge_dom = &dom.quiver().arcs;
        s.edge_cod = &cod.quiver().arcs;
        break;
    case MorKind::Digraph:
    case MorKind::SSys:
        break;
    case MorKind::StrictSsh:
    case MorKind::WeakSsh:
        s.edge_dom = &dom.ssh().edges;
        s.edge_cod = &cod.ssh().edges;
        break;
    case MorKind::IncHyp:
        s.edge_dom = &dom.inc_hyp().edges;
        s.edge_cod = &cod.inc_hyp().edges;
        s.inc_dom = &dom.inc_hyp().incidences;
        s.inc_cod = &cod.inc_hyp().incidences;
        break;
    case MorKind::IStr:
        s.edge_dom = &dom.istr().edges;
        s.edge_cod = &cod.istr().edges;
        break;
    }
    return s;
}

void require_carriers(const FinFunction& f, const FinSet& dom, const FinSet& cod,
                      const char* what) {
    if (f.domain() != dom || f.codomain() != cod)
        throw KindError(std::string(what) + " component does not match the endpoint carriers");
}

} // namespace

Morphism Morphism::make(MorKind kind, GraphObject dom, GraphObject cod, FinFunction vertex_map,
                        std::optional<FinFunction> edge_map,
                        std::optional<FinFunction> incidence_map) {
    if (dom.kind() != object_kind_of(kind) || cod.kind() != object_kind_of(kind))
        throw KindError(std::string("morphism kind ") + mor_kind_name(kind) +
                        " does not connect " + kind_name(dom.kind()) + " to " +
                        kind_name(cod.kind()));
    require_carriers(vertex_map, dom.vertices(), cod.vertices(), "vertex");
    ComponentShape shape = component_shape(kind, dom, cod);
    if ((shape.edge_dom != nullptr) != edge_map.has_value())
        throw KindError(std::string("morphism kind ") + mor_kind_name(kind) +
                        (shape.edge_dom ? " requires an edge component"
                                        : " does not carry an edge component"));
    if (edge_map)
        require_carriers(*edge_map, *shape.edge_dom, *shape.edge_cod, "edge");
    if ((shape.inc_dom != nullptr) != incidence_map.has_value())
        throw KindError(std::string("morphism kind ") + mor_kind_name(kind) +
                        (shape.inc_dom ? " requires an incidence component"
                                       : " does not carry an incidence component"));
    if (incidence_map)
        require_carriers(*incidence_map, *shape.inc_dom, *shape.inc_cod, "incidence");
    return Morphism(kind, std::make_shared<const GraphObject>(std::move(dom)),
                    std::make_shared<const GraphObject>(std::move(cod)), std::move(vertex_map),
                    std::move(edge_map), std::move(incidence_map));
}

Morphism Morphism::identity(const GraphObject& x, MorKind kind) {
    ComponentShape shape = component_shape(kind, x, x);
    std::optional<FinFunction> edge, inc;
    if (shape.edge_dom)
        edge = FinFunction::identity(*shape.edge_dom);
    if (shape.inc_dom)
        inc = FinFunction::identity(*shape.inc_dom);
    return make(kind, x, x, FinFunction::identity(x.vertices()), std::move(edge),
                std::move(inc));
}

const FinFunction& Morphism::edge_map() const {
    if (!edge_map_)
        throw KindError(std::string(mor_kind_name(kind_)) +
                        " morphism carries no edge component");
    return *edge_map_;
}

const FinFunction& Morphism::incidence_map() const {
    if (!incidence_map_)
        throw KindError(std::string(mor_kind_name(kind_)) +
                        " morphism carries no incidence component");
    return *incidence_map_;
}

Morphism Morphism::as_weak() const {
    if (kind_ == MorKind::WeakSsh)
        return *this;
    if (kind_ != MorKind::StrictSsh)
        throw KindError("as_weak applies to ssh morphisms only");
    return Morphism(MorKind::WeakSsh, dom_, cod_, vertex_map_, edge_map_, incidence_map_);
}

bool operator==(const Morphism& f, const Morphism& g) {
    return f.kind_ == g.kind_ && *f.dom_ == *g.dom_ && *f.cod_ == *g.cod_ &&
           f.vertex_map_ == g.vertex_map_ && f.edge_map_ == g.edge_map_ &&
           f.incidence_map_ == g.incidence_map_;
}

bool check_morphism(const Morphism& m) {
    const GraphObject& dom = m.dom();
    const GraphObject& cod = m.cod();
    const FinFunction& fv = m.vertex_map();
    switch (m.kind()) {
    case MorKind::Quiver: {
        const Quiver& q = dom.quiver();
        const Quiver& r = cod.quiver();
        const FinFunction& fe = m.edge_map();
        for (const Atom& a : q.arcs)
            if (r.src(fe(a)) != fv(q.src(a)) || r.tgt(fe(a)) != fv(q.tgt(a)))
                return false;
        return true;
    }
    case MorKind::Digraph: {
        for (const Atom& a : dom.digraph().arcs)
            if (!cod.digraph().arcs.contains(Atom::pair(fv(a.parts()[0]), fv(a.parts()[1]))))
                return false;
        return true;
    }
    case MorKind::StrictSsh:
    case MorKind::WeakSsh: {
        const SetSystemHypergraph& g = dom.ssh();
        const SetSystemHypergraph& h = cod.ssh();
        const FinFunction& fe = m.edge_map();
        for (const Atom& e : g.edges) {
            FinSet img = image(fv, subset_members(g.eps(e)));
            FinSet target = subset_members(h.eps(fe(e)));
            if (m.kind() == MorKind::StrictSsh ? img != target : !is_subset(img, target))
                return false;
        }
        return true;
    }
    case MorKind::SSys: {
        for (const Atom& e : dom.ssys().edges)
            if (!cod.ssys().edges.contains(subset_atom(image(fv, subset_members(e)))))
                return false;
        return true;
    }
    case MorKind::IncHyp: {
        const IncidenceHypergraph& g = dom.inc_hyp();
        const IncidenceHypergraph& h = cod.inc_hyp();
        const FinFunction& fe = m.edge_map();
        const FinFunction& fi = m.incidence_map();
        for (const Atom& i : g.incidences)
            if (h.port(fi(i)) != fv(g.port(i)) || h.attach(fi(i)) != fe(g.attach(i)))
                return false;
        return true;
    }
    case MorKind::IStr: {
        const FinFunction& fe = m.edge_map();
        for (const Atom& i : dom.istr().incidences)
            if (!cod.istr().incidences.contains(Atom::pair(fv(i.parts()[0]), fe(i.parts()[1]))))
                return false;
        return true;
    }
    }
    throw KindError("unreachable morphism kind");
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (f.kind() != g.kind())
        throw KindError(std::string("compose: morphism kinds differ (") +
                        mor_kind_name(f.kind()) + " vs " + mor_kind_name(g.kind()) + ")");
    if (f.cod() != g.dom())
        throw KindError("compose: codomain of the inner morphism is not the domain of the outer");
    std::optional<FinFunction> edge, inc;
    if (f.has_edge_map())
        edge = compose(g.edge_map(), f.edge_map());
    if (f.has_incidence_map())
        inc = compose(g.incidence_map(), f.incidence_map());
    return Morphism::make(f.kind(), f.dom(), g.cod(), compose(g.vertex_map(), f.vertex_map()),
                          std::move(edge), std::move(inc));
}

namespace {

std::optional<FinFunction> inverse_of(const FinFunction& f) {
    if (!f.is_injective() || !f.is_surjective())
        return std::nullopt;
    std::vector<Atom> values(f.codomain().size(), Atom::leaf(""));
    const auto& dom = f.domain().elems();
    for (std::size_t i = 0; i < dom.size(); ++i)
        values[f.codomain().index_of(f.values()[i])] = dom[i];
    return FinFunction(f.codomain(), f.domain(), std::move(values));
}

} // namespace

bool is_isomorphism(const Morphism& m) {
    if (!check_morphism(m))
        return false;
    auto iv = inverse_of(m.vertex_map());
    if (!iv)
        return false;
    std::optional<FinFunction> ie, ii;
    if (m.has_edge_map() && !(ie = inverse_of(m.edge_map())))
        return false;
    if (m.has_incidence_map() && !(ii = inverse_of(m.incidence_map())))
        return false;
    // the inverse assignment must itself preserve structure (it can fail to
    // for the relational kinds even when every component is bijective)
    Morphism inv = Morphism::make(m.kind(), m.cod(), m.dom(), std::move(*iv), std::move(ie),
                                  std::move(ii));
    return check_morphism(inv);
}

namespace {

void encode_component(std::string& out, const FinFunction& f) {
    out += '<';
    for (const Atom& v : f.values()) {
        out += canonical_encode(v);
        out += ';';
    }
    out += '>';
}

} // namespace

std::string canonical_encode(const Morphism& m) {
    std::string out = mor_kind_name(m.kind());
    out += '|';
    out += canonical_encode(m.dom());
    out += '|';
    out += canonical_encode(m.cod());
    out += '|';
    encode_component(out, m.vertex_map());
    if (m.has_edge_map())
        encode_component(out, m.edge_map());
    if (m.has_incidence_map())
        encode_component(out, m.incidence_map());
    return out;
}

} // namespace graphcat
