#include "graphcat/functors.hpp"

#include <algorithm>

#include "graphcat/errors.hpp"

namespace graphcat {

namespace {

constexpr auto Q = StructureKind::Quiver;
constexpr auto D = StructureKind::Digraph;
constexpr auto H = StructureKind::Ssh;
constexpr auto S = StructureKind::SSys;
constexpr auto R = StructureKind::IncHyp;
constexpr auto I = StructureKind::IStr;
constexpr auto MULTI = Predicate::Multigraph;
constexpr auto SIMPLE = Predicate::SimpleGraph;
constexpr auto SYM = Predicate::Symmetric;
constexpr auto mQ = MorKind::Quiver;
constexpr auto mD = MorKind::Digraph;
constexpr auto mST = MorKind::StrictSsh;
constexpr auto mWK = MorKind::WeakSsh;
constexpr auto mS = MorKind::SSys;
constexpr auto mR = MorKind::IncHyp;
constexpr auto mI = MorKind::IStr;

const std::vector<FunctorInfo> kTable = {
    {FunctorName::SimpQ, "simp_Q", Q, {}, D, {}, mQ, mD, false},
    {FunctorName::EmbQ, "emb_Q", D, {}, Q, {}, mD, mQ, false},
    {FunctorName::SimpH, "simp_H", H, {}, S, {}, mST, mS, false},
    {FunctorName::EmbH, "emb_H", S, {}, H, {}, mS, mST, false},
    {FunctorName::DelM, "del_M", H, {}, H, MULTI, mST, mST, false},
    {FunctorName::DelS, "del_S", S, {}, S, SIMPLE, mS, mS, false},
    {FunctorName::InclM, "incl_M", H, MULTI, H, {}, mST, mST, false},
    {FunctorName::InclGra, "incl_Gra", S, SIMPLE, S, {}, mS, mS, false},
    {FunctorName::UnderU, "under_U", Q, {}, H, MULTI, mQ, mST, false},
    {FunctorName::AssocD, "assoc_D", H, MULTI, Q, {}, mST, mQ, false},
    {FunctorName::SimpM, "simp_M", H, MULTI, S, SIMPLE, mST, mS, false},
    {FunctorName::EmbM, "emb_M", S, SIMPLE, H, MULTI, mS, mST, false},
    {FunctorName::SymClosure, "sym_closure", D, {}, D, SYM, mD, mD, false},
    {FunctorName::SymInterior, "sym_interior", D, {}, D, SYM, mD, mD, false},
    {FunctorName::InclSD, "incl_SD", D, SYM, D, {}, mD, mD, false},
    {FunctorName::ZGra, "z_Gra", S, SIMPLE, D, SYM, mS, mD, false},
    {FunctorName::ZGraInv, "z_Gra_inv", D, SYM, S, SIMPLE, mD, mS, false},
    {FunctorName::EmbR, "emb_R", I, {}, R, {}, mI, mR, false},
    {FunctorName::SimpR, "simp_R", R, {}, I, {}, mR, mI, false},
    {FunctorName::WeakOf, "weak_of", H, {}, I, {}, mWK, mI, false},
    {FunctorName::WeakFrom, "weak_from", I, {}, H, {}, mI, mWK, false},
    {FunctorName::InclWeak, "incl_weak", H, {}, H, {}, mST, mWK, false},
    {FunctorName::SimplicialRepl, "simplicial_repl", H, {}, H, {}, mWK, mST, false},
    {FunctorName::Gamma, "gamma", H, {}, S, SIMPLE, mST, mS, true},
    {FunctorName::LineGraph, "linegraph", H, {}, S, SIMPLE, mST, mS, true},
    {FunctorName::ClassicalDual, "classical_dual", H, {}, H, {}, mST, mST, true},
    {FunctorName::AssocInc, "assoc_inc", Q, {}, R, {}, mQ, mR, false},
    {FunctorName::CliqueQuiver, "clique_quiver", R, {}, Q, {}, mR, mQ, false},
    {FunctorName::CliqueFactored, "clique_factored", H, {}, S, SIMPLE, mST, mS, false},
    {FunctorName::SimplicialClosure, "simplicial_closure", S, SIMPLE, H, {}, mS, mST, false},
    {FunctorName::DualSharp, "dual_sharp", R, {}, R, {}, mR, mR, false},
    {FunctorName::DualTop, "dual_top", I, {}, I, {}, mI, mI, false},
    {FunctorName::DualDdag, "dual_ddag", H, {}, H, {}, mWK, mWK, false},
    {FunctorName::IntersectFactored, "intersect_factored", H, {}, S, SIMPLE, mST, mS, false},
};

void require_pred(const GraphObject& x, Predicate p, const char* fname) {
    if (!satisfies(x, p))
        throw KindError(std::string(fname) + " requires a " + predicate_name(p) + " " +
                        kind_name(x.kind()) + " input");
}

bool has_multigraph_arity(const Atom& subset) {
    std::size_t n = subset.parts().size();
    return n == 1 || n == 2;
}

// ---- object actions ------------------------------------------------------

Digraph simp_q_ob(const Quiver& q) {
    std::vector<Atom> arcs;
    arcs.reserve(q.arcs.size());
    for (const Atom& e : q.arcs)
        arcs.push_back(Atom::pair(q.src(e), q.tgt(e)));
    return Digraph{q.vertices, FinSet(std::move(arcs))};
}

Quiver emb_q_ob(const Digraph& d) {
    FinFunction src =
        FinFunction::tabulate(d.arcs, d.vertices, [](const Atom& a) { return a.parts()[0]; });
    FinFunction tgt =
        FinFunction::tabulate(d.arcs, d.vertices, [](const Atom& a) { return a.parts()[1]; });
    return Quiver{d.vertices, d.arcs, std::move(src), std::move(tgt)};
}

SetSystem simp_h_ob(const SetSystemHypergraph& h) {
    return SetSystem{h.vertices, FinSet(h.eps.values())};
}

SetSystemHypergraph emb_h_ob(const SetSystem& s) {
    return make_ssh(s.vertices, s.edges, [](const Atom& e) { return e; });
}

SetSystemHypergraph del_m_ob(const SetSystemHypergraph& h) {
    std::vector<Atom> kept;
    for (const Atom& e : h.edges)
        if (has_multigraph_arity(h.eps(e)))
            kept.push_back(e);
    return make_ssh(h.vertices, FinSet(std::move(kept)), [&](const Atom& e) { return h.eps(e); });
}

SetSystem del_s_ob(const SetSystem& s) {
    std::vector<Atom> kept;
    for (const Atom& e : s.edges)
        if (has_multigraph_arity(e))
            kept.push_back(e);
    return SetSystem{s.vertices, FinSet(std::move(kept))};
}

SetSystemHypergraph under_u_ob(const Quiver& q) {
    return make_ssh(q.vertices, q.arcs,
                    [&](const Atom& e) { return Atom::subset({q.src(e), q.tgt(e)}); });
}

Quiver assoc_d_ob(const SetSystemHypergraph& h) {
    std::vector<Atom> arcs;
    for (const Atom& e : h.edges) {
        const auto& ends = h.eps(e).parts();
        if (ends.size() == 1) {
            arcs.push_back(Atom::triple(e, ends[0], ends[0]));
        } else {
            arcs.push_back(Atom::triple(e, ends[0], ends[1]));
            arcs.push_back(Atom::triple(e, ends[1], ends[0]));
        }
    }
    FinSet carrier(std::move(arcs));
    FinFunction src =
        FinFunction::tabulate(carrier, h.vertices, [](const Atom& a) { return a.parts()[1]; });
    FinFunction tgt =
        FinFunction::tabulate(carrier, h.vertices, [](const Atom& a) { return a.parts()[2]; });
    return Quiver{h.vertices, carrier, std::move(src), std::move(tgt)};
}

Digraph sym_closure_ob(const Digraph& d) {
    std::vector<Atom> arcs(d.arcs.elems());
    for (const Atom& a : d.arcs)
        arcs.push_back(Atom::pair(a.parts()[1], a.parts()[0]));
    return Digraph{d.vertices, FinSet(std::move(arcs))};
}

Digraph sym_interior_ob(const Digraph& d) {
    std::vector<Atom> arcs;
    for (const Atom& a : d.arcs)
        if (d.arcs.contains(Atom::pair(a.parts()[1], a.parts()[0])))
            arcs.push_back(a);
    return Digraph{d.vertices, FinSet(std::move(arcs))};
}

Digraph z_gra_ob(const SetSystem& s) {
    std::vector<Atom> arcs;
    for (const Atom& e : s.edges) {
        const auto& m = e.parts();
        if (m.size() == 1) {
            arcs.push_back(Atom::pair(m[0], m[0]));
        } else {
            arcs.push_back(Atom::pair(m[0], m[1]));
            arcs.push_back(Atom::pair(m[1], m[0]));
        }
    }
    return Digraph{s.vertices, FinSet(std::move(arcs))};
}

SetSystem z_gra_inv_ob(const Digraph& d) {
    std::vector<Atom> edges;
    edges.reserve(d.arcs.size());
    for (const Atom& a : d.arcs)
        edges.push_back(Atom::subset({a.parts()[0], a.parts()[1]}));
    return SetSystem{d.vertices, FinSet(std::move(edges))};
}

IncidenceHypergraph emb_r_ob(const IncidenceStructure& s) {
    FinFunction port =
        FinFunction::tabulate(s.incidences, s.vertices, [](const Atom& i) { return i.parts()[0]; });
    FinFunction attach =
        FinFunction::tabulate(s.incidences, s.edges, [](const Atom& i) { return i.parts()[1]; });
    return IncidenceHypergraph{s.vertices, s.edges, s.incidences, std::move(port),
                               std::move(attach)};
}

IncidenceStructure simp_r_ob(const IncidenceHypergraph& r) {
    std::vector<Atom> inc;
    inc.reserve(r.incidences.size());
    for (const Atom& j : r.incidences)
        inc.push_back(Atom::pair(r.port(j), r.attach(j)));
    return IncidenceStructure{r.vertices, r.edges, FinSet(std::move(inc))};
}

IncidenceStructure weak_of_ob(const SetSystemHypergraph& h) {
    std::vector<Atom> inc;
    for (const Atom& e : h.edges)
        for (const Atom& v : h.eps(e).parts())
            inc.push_back(Atom::pair(v, e));
    return IncidenceStructure{h.vertices, h.edges, FinSet(std::move(inc))};
}

SetSystemHypergraph weak_from_ob(const IncidenceStructure& s) {
    return make_ssh(s.vertices, s.edges, [&](const Atom& e) {
        std::vector<Atom> ends;
        for (const Atom& i : s.incidences)
            if (i.parts()[1] == e)
                ends.push_back(i.parts()[0]);
        return Atom::subset(std::move(ends));
    });
}

SetSystemHypergraph simplicial_repl_ob(const SetSystemHypergraph& h) {
    std::vector<Atom> edges;
    for (const Atom& e : h.edges)
        for (const Atom& a : power_set(subset_members(h.eps(e))))
            edges.push_back(Atom::pair(e, a));
    return make_ssh(h.vertices, FinSet(std::move(edges)),
                    [](const Atom& e) { return e.parts()[1]; });
}

SetSystem gamma_ob(const SetSystemHypergraph& h) {
    std::vector<Atom> edges;
    for (const Atom& e : h.edges) {
        const auto& ends = h.eps(e).parts();
        for (std::size_t i = 0; i < ends.size(); ++i)
            for (std::size_t j = i + 1; j < ends.size(); ++j)
                edges.push_back(Atom::subset({ends[i], ends[j]}));
    }
    return SetSystem{h.vertices, FinSet(std::move(edges))};
}

SetSystem linegraph_ob(const SetSystemHypergraph& h) {
    std::vector<Atom> edges;
    const auto& es = h.edges.elems();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (!set_intersection(subset_members(h.eps(es[i])), subset_members(h.eps(es[j])))
                     .empty())
                edges.push_back(Atom::subset({es[i], es[j]}));
    return SetSystem{h.edges, FinSet(std::move(edges))};
}

SetSystemHypergraph classical_dual_ob(const SetSystemHypergraph& h) {
    return make_ssh(h.edges, h.vertices, [&](const Atom& v) {
        std::vector<Atom> star;
        for (const Atom& e : h.edges)
            if (subset_members(h.eps(e)).contains(v))
                star.push_back(e);
        return Atom::subset(std::move(star));
    });
}

IncidenceHypergraph assoc_inc_ob(const Quiver& q) {
    TaggedCoproduct cp = tagged_coproduct(q.arcs, q.arcs);
    FinFunction port = copair(q.src, q.tgt);
    FinFunction attach = FinFunction::tabulate(cp.carrier, q.arcs,
                                               [](const Atom& i) { return i.parts()[0]; });
    return IncidenceHypergraph{q.vertices, q.arcs, cp.carrier, std::move(port),
                               std::move(attach)};
}

Quiver clique_quiver_ob(const IncidenceHypergraph& r) {
    KernelPair kp = kernel_pair(r.attach);
    FinFunction src = compose(r.port, kp.proj0);
    FinFunction tgt = compose(r.port, kp.proj1);
    return Quiver{r.vertices, kp.carrier, std::move(src), std::move(tgt)};
}

SetSystemHypergraph simplicial_closure_ob(const SetSystem& s) {
    std::vector<Atom> cliques;
    for (const Atom& a : power_set(s.vertices)) {
        const auto& ms = a.parts();
        bool ok = true;
        for (std::size_t i = 0; i < ms.size() && ok; ++i)
            for (std::size_t j = i; j < ms.size() && ok; ++j)
                if (!s.edges.contains(Atom::subset({ms[i], ms[j]})))
                    ok = false;
        if (ok)
            cliques.push_back(a);
    }
    return make_ssh(s.vertices, FinSet(std::move(cliques)), [](const Atom& e) { return e; });
}

IncidenceHypergraph dual_sharp_ob(const IncidenceHypergraph& r) {
    return IncidenceHypergraph{r.edges, r.vertices, r.incidences, r.attach, r.port};
}

} // namespace

const std::vector<FunctorInfo>& functor_table() { return kTable; }

const FunctorInfo& functor_info(FunctorName f) {
    for (const FunctorInfo& info : kTable)
        if (info.id == f)
            return info;
    throw KindError("unknown functor");
}

std::optional<FunctorName> functor_from_name(const std::string& name) {
    for (const FunctorInfo& info : kTable)
        if (name == info.name)
            return info.id;
    return std::nullopt;
}

GraphObject apply(FunctorName f, const GraphObject& x) {
    const FunctorInfo& info = functor_info(f);
    if (x.kind() != info.dom_kind)
        throw KindError(std::string(info.name) + " expects a " + kind_name(info.dom_kind) +
                        " input, got " + kind_name(x.kind()));
    if (info.dom_pred)
        require_pred(x, *info.dom_pred, info.name);

    switch (f) {
    case FunctorName::SimpQ: return simp_q_ob(x.quiver());
    case FunctorName::EmbQ: return emb_q_ob(x.digraph());
    case FunctorName::SimpH: return simp_h_ob(x.ssh());
    case FunctorName::EmbH: return emb_h_ob(x.ssys());
    case FunctorName::DelM: return del_m_ob(x.ssh());
    case FunctorName::DelS: return del_s_ob(x.ssys());
    case FunctorName::InclM:
    case FunctorName::InclGra:
    case FunctorName::InclSD:
    case FunctorName::InclWeak: return x;
    case FunctorName::UnderU: return under_u_ob(x.quiver());
    case FunctorName::AssocD: return assoc_d_ob(x.ssh());
    case FunctorName::SimpM:
        return apply(FunctorName::DelS, apply(FunctorName::SimpH, apply(FunctorName::InclM, x)));
    case FunctorName::EmbM:
        return apply(FunctorName::DelM, apply(FunctorName::EmbH, apply(FunctorName::InclGra, x)));
    case FunctorName::SymClosure: return sym_closure_ob(x.digraph());
    case FunctorName::SymInterior: return sym_interior_ob(x.digraph());
    case FunctorName::ZGra: return z_gra_ob(x.ssys());
    case FunctorName::ZGraInv: return z_gra_inv_ob(x.digraph());
    case FunctorName::EmbR: return emb_r_ob(x.istr());
    case FunctorName::SimpR: return simp_r_ob(x.inc_hyp());
    case FunctorName::WeakOf: return weak_of_ob(x.ssh());
    case FunctorName::WeakFrom: return weak_from_ob(x.istr());
    case FunctorName::SimplicialRepl: return simplicial_repl_ob(x.ssh());
    case FunctorName::Gamma: return gamma_ob(x.ssh());
    case FunctorName::LineGraph: return linegraph_ob(x.ssh());
    case FunctorName::ClassicalDual: return classical_dual_ob(x.ssh());
    case FunctorName::AssocInc: return assoc_inc_ob(x.quiver());
    case FunctorName::CliqueQuiver: return clique_quiver_ob(x.inc_hyp());
    case FunctorName::CliqueFactored:
        return apply(FunctorName::SimpM,
                     apply(FunctorName::DelM,
                           apply(FunctorName::SimplicialRepl, apply(FunctorName::InclWeak, x))));
    case FunctorName::SimplicialClosure: return simplicial_closure_ob(x.ssys());
    case FunctorName::DualSharp: return dual_sharp_ob(x.inc_hyp());
    case FunctorName::DualTop:
        return apply(FunctorName::SimpR,
                     apply(FunctorName::DualSharp, apply(FunctorName::EmbR, x)));
    case FunctorName::DualDdag:
        return apply(FunctorName::WeakFrom,
                     apply(FunctorName::DualTop, apply(FunctorName::WeakOf, x)));
    case FunctorName::IntersectFactored:
        return apply(FunctorName::SimpM,
                     apply(FunctorName::DelM,
                           apply(FunctorName::SimplicialRepl,
                                 apply(FunctorName::DualDdag, apply(FunctorName::InclWeak, x)))));
    }
    throw KindError("unreachable functor");
}

Morphism apply(FunctorName f, const Morphism& m) {
    const FunctorInfo& info = functor_info(f);
    if (info.object_only)
        throw UnsupportedError(std::string(info.name) +
                               " acts on objects only; it has no morphism action");
    if (m.kind() != info.dom_mor)
        throw KindError(std::string(info.name) + " expects a " + mor_kind_name(info.dom_mor) +
                        " morphism, got " + mor_kind_name(m.kind()));

    // composites run stage by stage, never by a direct formula
    switch (f) {
    case FunctorName::SimpM:
        return apply(FunctorName::DelS, apply(FunctorName::SimpH, apply(FunctorName::InclM, m)));
    case FunctorName::EmbM:
        return apply(FunctorName::DelM, apply(FunctorName::EmbH, apply(FunctorName::InclGra, m)));
    case FunctorName::CliqueFactored:
        return apply(FunctorName::SimpM,
                     apply(FunctorName::DelM,
                           apply(FunctorName::SimplicialRepl, apply(FunctorName::InclWeak, m))));
    case FunctorName::DualTop:
        return apply(FunctorName::SimpR,
                     apply(FunctorName::DualSharp, apply(FunctorName::EmbR, m)));
    case FunctorName::DualDdag:
        return apply(FunctorName::WeakFrom,
                     apply(FunctorName::DualTop, apply(FunctorName::WeakOf, m)));
    case FunctorName::IntersectFactored:
        return apply(FunctorName::SimpM,
                     apply(FunctorName::DelM,
                           apply(FunctorName::SimplicialRepl,
                                 apply(FunctorName::DualDdag, apply(FunctorName::InclWeak, m)))));
    default: break;
    }

    if (f == FunctorName::InclM || f == FunctorName::InclGra || f == FunctorName::InclSD) {
        const FunctorInfo& inc = info;
        require_pred(m.dom(), *inc.dom_pred, inc.name);
        require_pred(m.cod(), *inc.dom_pred, inc.name);
        return m;
    }
    if (f == FunctorName::InclWeak)
        return m.as_weak();

    GraphObject fdom = apply(f, m.dom());
    GraphObject fcod = apply(f, m.cod());
    const FinFunction& fv = m.vertex_map();

    switch (f) {
    case FunctorName::SimpQ:
    case FunctorName::SimpH:
    case FunctorName::DelS:
    case FunctorName::SymClosure:
    case FunctorName::SymInterior:
    case FunctorName::ZGra:
    case FunctorName::ZGraInv:
        return Morphism::make(info.cod_mor, std::move(fdom), std::move(fcod), fv);
    case FunctorName::EmbQ: {
        FinFunction arc = FinFunction::tabulate(
            fdom.quiver().arcs, fcod.quiver().arcs,
            [&](const Atom& a) { return Atom::pair(fv(a.parts()[0]), fv(a.parts()[1])); });
        return Morphism::make(MorKind::Quiver, std::move(fdom), std::move(fcod), fv,
                              std::move(arc));
    }
    case FunctorName::EmbH: {
        FinFunction edge = FinFunction::tabulate(
            fdom.ssh().edges, fcod.ssh().edges,
            [&](const Atom& a) { return subset_atom(image(fv, subset_members(a))); });
        return Morphism::make(MorKind::StrictSsh, std::move(fdom), std::move(fcod), fv,
                              std::move(edge));
    }
    case FunctorName::DelM: {
        FinFunction edge =
            m.edge_map().restricted(fdom.ssh().edges).corestricted(fcod.ssh().edges);
        return Morphism::make(MorKind::StrictSsh, std::move(fdom), std::move(fcod), fv,
                              std::move(edge));
    }
    case FunctorName::UnderU:
        return Morphism::make(MorKind::StrictSsh, std::move(fdom), std::move(fcod), fv,
                              m.edge_map());
    case FunctorName::AssocD: {
        const FinFunction& fe = m.edge_map();
        FinFunction arc = FinFunction::tabulate(
            fdom.quiver().arcs, fcod.quiver().arcs, [&](const Atom& a) {
                return Atom::triple(fe(a.parts()[0]), fv(a.parts()[1]), fv(a.parts()[2]));
            });
        return Morphism::make(MorKind::Quiver, std::move(fdom), std::move(fcod), fv,
                              std::move(arc));
    }
    case FunctorName::EmbR: {
        const FinFunction& fe = m.edge_map();
        FinFunction inc = FinFunction::tabulate(
            fdom.inc_hyp().incidences, fcod.inc_hyp().incidences,
            [&](const Atom& i) { return Atom::pair(fv(i.parts()[0]), fe(i.parts()[1])); });
        return Morphism::make(MorKind::IncHyp, std::move(fdom), std::move(fcod), fv,
                              m.edge_map(), std::move(inc));
    }
    case FunctorName::SimpR:
        return Morphism::make(MorKind::IStr, std::move(fdom), std::move(fcod), fv, m.edge_map());
    case FunctorName::WeakOf:
        return Morphism::make(MorKind::IStr, std::move(fdom), std::move(fcod), fv, m.edge_map());
    case FunctorName::WeakFrom:
        return Morphism::make(MorKind::WeakSsh, std::move(fdom), std::move(fcod), fv,
                              m.edge_map());
    case FunctorName::SimplicialRepl: {
        const FinFunction& fe = m.edge_map();
        FinFunction edge = FinFunction::tabulate(
            fdom.ssh().edges, fcod.ssh().edges, [&](const Atom& a) {
                return Atom::pair(fe(a.parts()[0]),
                                  subset_atom(image(fv, subset_members(a.parts()[1]))));
            });
        return Morphism::make(MorKind::StrictSsh, std::move(fdom), std::move(fcod), fv,
                              std::move(edge));
    }
    case FunctorName::AssocInc: {
        const FinFunction& fe = m.edge_map();
        FinFunction inc = FinFunction::tabulate(
            fdom.inc_hyp().incidences, fcod.inc_hyp().incidences,
            [&](const Atom& i) { return Atom::tag(i.tag_index(), fe(i.parts()[0])); });
        return Morphism::make(MorKind::IncHyp, std::move(fdom), std::move(fcod), fv,
                              m.edge_map(), std::move(inc));
    }
    case FunctorName::CliqueQuiver: {
        const FinFunction& fi = m.incidence_map();
        FinFunction arc = FinFunction::tabulate(
            fdom.quiver().arcs, fcod.quiver().arcs,
            [&](const Atom& a) { return Atom::pair(fi(a.parts()[0]), fi(a.parts()[1])); });
        return Morphism::make(MorKind::Quiver, std::move(fdom), std::move(fcod), fv,
                              std::move(arc));
    }
    case FunctorName::SimplicialClosure: {
        FinFunction edge = FinFunction::tabulate(
            fdom.ssh().edges, fcod.ssh().edges,
            [&](const Atom& a) { return subset_atom(image(fv, subset_members(a))); });
        return Morphism::make(MorKind::StrictSsh, std::move(fdom), std::move(fcod), fv,
                              std::move(edge));
    }
    case FunctorName::DualSharp:
        return Morphism::make(MorKind::IncHyp, std::move(fdom), std::move(fcod), m.edge_map(),
                              fv, m.incidence_map());
    default:
        throw KindError("unreachable functor in morphism action");
    }
}

GraphObject apply_pipeline(const std::vector<FunctorName>& fs, const GraphObject& x) {
    GraphObject cur = x;
    for (FunctorName f : fs)
        cur = apply(f, cur);
    return cur;
}

std::optional<std::size_t> pipeline_mismatch(const std::vector<FunctorName>& fs,
                                             StructureKind input) {
    StructureKind cur = input;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const FunctorInfo& info = functor_info(fs[i]);
        if (info.dom_kind != cur)
            return i;
        cur = info.cod_kind;
    }
    return std::nullopt;
}

// ---- universal morphisms ---------------------------------------------------

Morphism unit_simp_q(const GraphObject& x) {
    GraphObject cod = apply(FunctorName::EmbQ, apply(FunctorName::SimpQ, x));
    const Quiver& q = x.quiver();
    FinFunction arc = FinFunction::tabulate(q.arcs, cod.quiver().arcs, [&](const Atom& e) {
        return Atom::pair(q.src(e), q.tgt(e));
    });
    return Morphism::make(MorKind::Quiver, x, cod, FinFunction::identity(q.vertices),
                          std::move(arc));
}

Morphism unit_simp_h(const GraphObject& x) {
    GraphObject cod = apply(FunctorName::EmbH, apply(FunctorName::SimpH, x));
    const SetSystemHypergraph& h = x.ssh();
    FinFunction edge =
        FinFunction::tabulate(h.edges, cod.ssh().edges, [&](const Atom& e) { return h.eps(e); });
    return Morphism::make(MorKind::StrictSsh, x, cod, FinFunction::identity(h.vertices),
                          std::move(edge));
}

namespace {

Morphism edge_inclusion(const GraphObject& sub, const GraphObject& whole, MorKind kind) {
    std::optional<FinFunction> edge;
    if (kind == MorKind::StrictSsh)
        edge = FinFunction(sub.ssh().edges, whole.ssh().edges, sub.ssh().edges.elems());
    return Morphism::make(kind, sub, whole, FinFunction::identity(sub.vertices()),
                          std::move(edge));
}

} // namespace

Morphism counit_del_m(const GraphObject& b) {
    GraphObject dom = apply(FunctorName::InclM, apply(FunctorName::DelM, b));
    return edge_inclusion(dom, b, MorKind::StrictSsh);
}

Morphism counit_del_s(const GraphObject& b) {
    GraphObject dom = apply(FunctorName::InclGra, apply(FunctorName::DelS, b));
    return edge_inclusion(dom, b, MorKind::SSys);
}

Morphism counit_assoc_d(const GraphObject& b) {
    GraphObject dom = apply(FunctorName::UnderU, apply(FunctorName::AssocD, b));
    FinFunction edge = FinFunction::tabulate(dom.ssh().edges, b.ssh().edges,
                                             [](const Atom& t) { return t.parts()[0]; });
    return Morphism::make(MorKind::StrictSsh, dom, b, FinFunction::identity(b.vertices()),
                          std::move(edge));
}

Morphism unit_simp_m(const GraphObject& x) {
    GraphObject cod = apply(FunctorName::EmbM, apply(FunctorName::SimpM, x));
    const SetSystemHypergraph& h = x.ssh();
    FinFunction edge =
        FinFunction::tabulate(h.edges, cod.ssh().edges, [&](const Atom& e) { return h.eps(e); });
    return Morphism::make(MorKind::StrictSsh, x, cod, FinFunction::identity(h.vertices),
                          std::move(edge));
}

Morphism unit_sym_closure(const GraphObject& x) {
    GraphObject cod = apply(FunctorName::InclSD, apply(FunctorName::SymClosure, x));
    return Morphism::make(MorKind::Digraph, x, cod, FinFunction::identity(x.vertices()));
}

Morphism counit_sym_interior(const GraphObject& b) {
    GraphObject dom = apply(FunctorName::InclSD, apply(FunctorName::SymInterior, b));
    return Morphism::make(MorKind::Digraph, dom, b, FinFunction::identity(b.vertices()));
}

Morphism unit_simp_r(const GraphObject& x) {
    GraphObject cod = apply(FunctorName::EmbR, apply(FunctorName::SimpR, x));
    const IncidenceHypergraph& r = x.inc_hyp();
    FinFunction inc =
        FinFunction::tabulate(r.incidences, cod.inc_hyp().incidences,
                              [&](const Atom& j) { return Atom::pair(r.port(j), r.attach(j)); });
    return Morphism::make(MorKind::IncHyp, x, cod, FinFunction::identity(r.vertices),
                          FinFunction::identity(r.edges), std::move(inc));
}

Morphism counit_simplicial_repl(const GraphObject& b) {
    GraphObject dom = apply(FunctorName::SimplicialRepl, b);
    FinFunction edge = FinFunction::tabulate(dom.ssh().edges, b.ssh().edges,
                                             [](const Atom& e) { return e.parts()[0]; });
    return Morphism::make(MorKind::WeakSsh, dom, b, FinFunction::identity(b.vertices()),
                          std::move(edge));
}

Morphism counit_clique_quiver(const GraphObject& b) {
    GraphObject dom = apply(FunctorName::AssocInc, apply(FunctorName::CliqueQuiver, b));
    const IncidenceHypergraph& r = b.inc_hyp();
    // dom edges are co-attachment pairs (i,j); send each back to its shared edge
    FinFunction edge = FinFunction::tabulate(dom.inc_hyp().edges, r.edges, [&](const Atom& a) {
        return r.attach(a.parts()[0]);
    });
    FinFunction inc =
        FinFunction::tabulate(dom.inc_hyp().incidences, r.incidences, [](const Atom& i) {
            return i.tag_index() == 0 ? i.parts()[0].parts()[0] : i.parts()[0].parts()[1];
        });
    return Morphism::make(MorKind::IncHyp, dom, b, FinFunction::identity(r.vertices),
                          std::move(edge), std::move(inc));
}

Morphism counit_simplicial_closure(const GraphObject& b) {
    GraphObject dom = apply(FunctorName::CliqueFactored, apply(FunctorName::SimplicialClosure, b));
    return Morphism::make(MorKind::SSys, dom, b, FinFunction::identity(b.vertices()));
}

} // namespace graphcat
