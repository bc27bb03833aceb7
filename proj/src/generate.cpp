#include "graphcat/generate.hpp"

#include <algorithm>
#include <map>

#include "graphcat/errors.hpp"

namespace graphcat {

namespace {

std::vector<Atom> fresh(const char* prefix, std::size_t n) {
    std::vector<Atom> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(Atom::leaf(prefix + std::to_string(i)));
    return out;
}

std::vector<Atom> sample_distinct(Rng& rng, std::vector<Atom> pool, std::size_t k) {
    std::vector<Atom> out;
    while (out.size() < k && !pool.empty()) {
        std::size_t j = rng.below(pool.size());
        out.push_back(pool[j]);
        pool.erase(pool.begin() + j);
    }
    return out;
}

Atom random_subset_atom(Rng& rng, const std::vector<Atom>& pool,
                        std::optional<Predicate> pred) {
    if (pool.empty())
        return Atom::subset({});
    std::size_t size;
    if (pred == Predicate::Multigraph || pred == Predicate::SimpleGraph)
        size = 1 + rng.below(std::min<std::size_t>(2, pool.size()));
    else
        size = rng.below(pool.size() + 1);
    return Atom::subset(sample_distinct(rng, pool, size));
}

void assert_valid(const GraphObject& x, std::optional<Predicate> pred) {
    auto problems = validate(x, pred);
    if (!problems.empty())
        throw InvariantError("generator produced an invalid object: " + problems.front());
}

void assert_valid(const Morphism& m) {
    if (!check_morphism(m))
        throw InvariantError("generator produced an invalid morphism");
}

GraphObject random_digraph(Rng& rng, std::optional<Predicate> pred, const GenBounds& bounds,
                           const std::vector<Atom>& vs) {
    std::vector<Atom> arcs;
    if (!vs.empty()) {
        std::size_t limit = std::min(bounds.edges, vs.size() * vs.size());
        std::size_t attempts = rng.below(limit + 1);
        FinSet have({});
        for (std::size_t i = 0; i < attempts; ++i) {
            const Atom& u = rng.pick(vs);
            const Atom& w = rng.pick(vs);
            std::vector<Atom> add = {Atom::pair(u, w)};
            if (pred == Predicate::Symmetric && !(u == w))
                add.push_back(Atom::pair(w, u));
            std::vector<Atom> next(have.elems());
            for (const Atom& a : add)
                next.push_back(a);
            FinSet grown{std::move(next)};
            if (grown.size() <= limit)
                have = std::move(grown);
        }
        arcs = have.elems();
    }
    return GraphObject(Digraph{FinSet(std::vector<Atom>(vs)), FinSet(std::move(arcs))});
}

} // namespace

GraphObject random_object(Rng& rng, StructureKind kind, std::optional<Predicate> pred,
                          const GenBounds& bounds) {
    std::size_t nv = rng.below(bounds.vertices + 1);
    std::vector<Atom> vs = fresh("v", nv);
    FinSet V{std::vector<Atom>(vs)};

    GraphObject out = [&]() -> GraphObject {
        switch (kind) {
        case StructureKind::Quiver: {
            std::size_t na = vs.empty() ? 0 : rng.below(bounds.edges + 1);
            FinSet arcs{fresh("a", na)};
            FinFunction src =
                FinFunction::tabulate(arcs, V, [&](const Atom&) { return rng.pick(vs); });
            FinFunction tgt =
                FinFunction::tabulate(arcs, V, [&](const Atom&) { return rng.pick(vs); });
            return GraphObject(Quiver{V, arcs, std::move(src), std::move(tgt)});
        }
        case StructureKind::Digraph: return random_digraph(rng, pred, bounds, vs);
        case StructureKind::Ssh: {
            bool need_members = pred == Predicate::Multigraph;
            std::size_t ne = (vs.empty() && need_members) ? 0 : rng.below(bounds.edges + 1);
            FinSet edges{fresh("e", ne)};
            return GraphObject(make_ssh(V, edges, [&](const Atom&) {
                return random_subset_atom(rng, vs, pred);
            }));
        }
        case StructureKind::SSys: {
            std::vector<Atom> edges;
            if (!vs.empty() || pred != Predicate::SimpleGraph) {
                std::size_t ne = rng.below(bounds.edges + 1);
                if (vs.empty() && pred == Predicate::SimpleGraph)
                    ne = 0;
                for (std::size_t i = 0; i < ne; ++i)
                    edges.push_back(random_subset_atom(rng, vs, pred));
            }
            return GraphObject(SetSystem{V, FinSet(std::move(edges))});
        }
        case StructureKind::IncHyp: {
            std::size_t ne = rng.below(bounds.edges + 1);
            std::vector<Atom> es = fresh("e", ne);
            FinSet E{std::vector<Atom>(es)};
            std::size_t ni =
                (vs.empty() || es.empty()) ? 0 : rng.below(bounds.incidences + 1);
            FinSet I{fresh("j", ni)};
            FinFunction port =
                FinFunction::tabulate(I, V, [&](const Atom&) { return rng.pick(vs); });
            FinFunction attach =
                FinFunction::tabulate(I, E, [&](const Atom&) { return rng.pick(es); });
            return GraphObject(
                IncidenceHypergraph{V, E, I, std::move(port), std::move(attach)});
        }
        case StructureKind::IStr: {
            std::size_t ne = rng.below(bounds.edges + 1);
            std::vector<Atom> es = fresh("e", ne);
            std::vector<Atom> inc;
            if (!vs.empty() && !es.empty()) {
                std::size_t ni = rng.below(bounds.incidences + 1);
                for (std::size_t i = 0; i < ni; ++i)
                    inc.push_back(Atom::pair(rng.pick(vs), rng.pick(es)));
            }
            return GraphObject(IncidenceStructure{V, FinSet(std::move(es)),
                                                  FinSet(std::move(inc))});
        }
        }
        throw KindError("unreachable kind");
    }();
    assert_valid(out, pred);
    return out;
}

FinFunction random_function(Rng& rng, const FinSet& dom, const FinSet& cod) {
    if (dom.empty())
        return FinFunction(dom, cod, {});
    if (cod.empty())
        throw DomainError("no function into an empty codomain");
    return FinFunction::tabulate(dom, cod,
                                 [&](const Atom&) { return rng.pick(cod.elems()); });
}

namespace {

// Forward construction: map the vertices somewhere fresh, push the
// structure through (optionally merging parallel images), then pad the
// codomain with junk that stays inside the bounds.
struct ForwardBuilder {
    Rng& rng;
    const GenBounds& bounds;
    const GraphObject& dom;
    std::optional<Predicate> cod_pred;

    FinSet cv;
    std::vector<Atom> cod_vertices;
    std::optional<FinFunction> fv;

    ForwardBuilder(Rng& r, const GenBounds& b, const GraphObject& d,
                   std::optional<Predicate> p)
        : rng(r), bounds(b), dom(d), cod_pred(p) {}

    void build_vertices() {
        const FinSet& dv = dom.vertices();
        std::size_t n = dv.empty() ? rng.below(bounds.vertices + 1)
                                   : 1 + rng.below(bounds.vertices);
        cod_vertices = fresh("w", n);
        cv = FinSet{std::vector<Atom>(cod_vertices)};
        if (dv.empty())
            fv = FinFunction(dv, cv, {});
        else
            fv = FinFunction::tabulate(dv, cv,
                                       [&](const Atom&) { return rng.pick(cod_vertices); });
    }
};

Morphism forward_digraph(Rng& rng, const GraphObject& dom, std::optional<Predicate> cod_pred,
                         const GenBounds& bounds) {
    ForwardBuilder b{rng, bounds, dom, cod_pred};
    b.build_vertices();
    const FinFunction& fv = *b.fv;
    std::vector<Atom> arcs;
    for (const Atom& a : dom.digraph().arcs)
        arcs.push_back(Atom::pair(fv(a.parts()[0]), fv(a.parts()[1])));
    if (cod_pred == Predicate::Symmetric)
        for (const Atom& a : std::vector<Atom>(arcs))
            arcs.push_back(Atom::pair(a.parts()[1], a.parts()[0]));
    FinSet have(std::move(arcs));
    if (!b.cod_vertices.empty()) {
        std::size_t extra = rng.below(3);
        for (std::size_t i = 0; i < extra; ++i) {
            const Atom& u = rng.pick(b.cod_vertices);
            const Atom& w = rng.pick(b.cod_vertices);
            std::vector<Atom> next(have.elems());
            next.push_back(Atom::pair(u, w));
            if (cod_pred == Predicate::Symmetric)
                next.push_back(Atom::pair(w, u));
            FinSet grown{std::move(next)};
            if (grown.size() <= bounds.edges)
                have = std::move(grown);
        }
    }
    GraphObject cod(Digraph{b.cv, std::move(have)});
    return Morphism::make(MorKind::Digraph, dom, std::move(cod), fv);
}

Morphism forward_ssys(Rng& rng, const GraphObject& dom, std::optional<Predicate> cod_pred,
                      const GenBounds& bounds) {
    ForwardBuilder b{rng, bounds, dom, cod_pred};
    b.build_vertices();
    const FinFunction& fv = *b.fv;
    std::vector<Atom> edges;
    for (const Atom& e : dom.ssys().edges)
        edges.push_back(subset_atom(image(fv, subset_members(e))));
    FinSet have(std::move(edges));
    if (!b.cod_vertices.empty() || cod_pred != Predicate::SimpleGraph) {
        std::size_t extra = rng.below(3);
        for (std::size_t i = 0; i < extra; ++i) {
            std::vector<Atom> next(have.elems());
            next.push_back(random_subset_atom(rng, b.cod_vertices, cod_pred));
            FinSet grown{std::move(next)};
            if (grown.size() <= bounds.edges)
                have = std::move(grown);
        }
    }
    GraphObject cod(SetSystem{b.cv, std::move(have)});
    return Morphism::make(MorKind::SSys, dom, std::move(cod), fv);
}

Morphism forward_quiver(Rng& rng, const GraphObject& dom, const GenBounds& bounds) {
    ForwardBuilder b{rng, bounds, dom, {}};
    b.build_vertices();
    const FinFunction& fv = *b.fv;
    const Quiver& q = dom.quiver();
    std::vector<Atom> names;
    std::map<Atom, std::pair<Atom, Atom>> ends;
    std::map<Atom, Atom> img;
    for (const Atom& a : q.arcs) {
        Atom s = fv(q.src(a));
        Atom t = fv(q.tgt(a));
        std::optional<Atom> reuse;
        if (rng.coin())
            for (const Atom& n : names)
                if (ends.at(n) == std::make_pair(s, t)) {
                    reuse = n;
                    break;
                }
        if (!reuse) {
            reuse = Atom::leaf("b" + std::to_string(names.size()));
            names.push_back(*reuse);
            ends.emplace(*reuse, std::make_pair(s, t));
        }
        img.emplace(a, *reuse);
    }
    if (!b.cod_vertices.empty()) {
        std::size_t extra = rng.below(3);
        for (std::size_t i = 0; i < extra && names.size() < bounds.edges; ++i) {
            Atom n = Atom::leaf("b" + std::to_string(names.size()));
            names.push_back(n);
            ends.emplace(n, std::make_pair(rng.pick(b.cod_vertices),
                                           rng.pick(b.cod_vertices)));
        }
    }
    FinSet arcs{std::move(names)};
    FinFunction src = FinFunction::tabulate(arcs, b.cv,
                                            [&](const Atom& n) { return ends.at(n).first; });
    FinFunction tgt = FinFunction::tabulate(arcs, b.cv,
                                            [&](const Atom& n) { return ends.at(n).second; });
    GraphObject cod(Quiver{b.cv, arcs, std::move(src), std::move(tgt)});
    FinFunction fe = FinFunction::tabulate(q.arcs, arcs,
                                           [&](const Atom& a) { return img.at(a); });
    return Morphism::make(MorKind::Quiver, dom, std::move(cod), fv, std::move(fe));
}

Morphism forward_ssh(Rng& rng, MorKind kind, const GraphObject& dom,
                     std::optional<Predicate> cod_pred, const GenBounds& bounds) {
    ForwardBuilder b{rng, bounds, dom, cod_pred};
    b.build_vertices();
    const FinFunction& fv = *b.fv;
    const SetSystemHypergraph& h = dom.ssh();
    bool weak = kind == MorKind::WeakSsh;

    std::vector<Atom> names;
    std::map<Atom, FinSet> ends;
    std::map<Atom, Atom> img;
    for (const Atom& e : h.edges) {
        FinSet target = image(fv, subset_members(h.eps(e)));
        std::optional<Atom> reuse;
        if (rng.coin())
            for (const Atom& n : names) {
                bool fits = weak ? is_subset(target, ends.at(n)) : ends.at(n) == target;
                if (fits) {
                    reuse = n;
                    break;
                }
            }
        if (!reuse) {
            if (weak) {
                std::vector<Atom> grown = target.elems();
                for (const Atom& w : b.cod_vertices)
                    if (rng.coin() && rng.coin())
                        grown.push_back(w);
                target = FinSet(std::move(grown));
                if (cod_pred == Predicate::Multigraph && target.size() > 2)
                    target = image(fv, subset_members(h.eps(e)));
            }
            reuse = Atom::leaf("d" + std::to_string(names.size()));
            names.push_back(*reuse);
            ends.emplace(*reuse, target);
        }
        img.emplace(e, *reuse);
    }
    std::size_t extra = rng.below(3);
    for (std::size_t i = 0; i < extra && names.size() < bounds.edges; ++i) {
        if (b.cod_vertices.empty() && cod_pred == Predicate::Multigraph)
            break;
        Atom n = Atom::leaf("d" + std::to_string(names.size()));
        names.push_back(n);
        ends.emplace(n, subset_members(random_subset_atom(rng, b.cod_vertices, cod_pred)));
    }
    FinSet edges{std::move(names)};
    GraphObject cod(make_ssh(b.cv, edges, [&](const Atom& n) {
        return subset_atom(ends.at(n));
    }));
    FinFunction fe = FinFunction::tabulate(h.edges, edges,
                                           [&](const Atom& e) { return img.at(e); });
    return Morphism::make(kind, dom, std::move(cod), fv, std::move(fe));
}

Morphism forward_inc_hyp(Rng& rng, const GraphObject& dom, const GenBounds& bounds) {
    ForwardBuilder b{rng, bounds, dom, {}};
    b.build_vertices();
    const FinFunction& fv = *b.fv;
    const IncidenceHypergraph& r = dom.inc_hyp();

    std::vector<Atom> enames;
    std::map<Atom, Atom> eimg;
    for (const Atom& e : r.edges) {
        std::optional<Atom> reuse;
        if (!enames.empty() && rng.coin())
            reuse = rng.pick(enames);
        if (!reuse) {
            reuse = Atom::leaf("d" + std::to_string(enames.size()));
            enames.push_back(*reuse);
        }
        eimg.emplace(e, *reuse);
    }
    std::size_t extra = rng.below(3);
    for (std::size_t i = 0; i < extra && enames.size() < bounds.edges; ++i)
        enames.push_back(Atom::leaf("d" + std::to_string(enames.size())));

    std::vector<Atom> inames;
    std::map<Atom, std::pair<Atom, Atom>> idata;  // port, attach
    std::map<Atom, Atom> iimg;
    for (const Atom& i : r.incidences) {
        std::pair<Atom, Atom> want{fv(r.port(i)), eimg.at(r.attach(i))};
        std::optional<Atom> reuse;
        if (rng.coin())
            for (const Atom& n : inames)
                if (idata.at(n) == want) {
                    reuse = n;
                    break;
                }
        if (!reuse) {
            reuse = Atom::leaf("k" + std::to_string(inames.size()));
            inames.push_back(*reuse);
            idata.emplace(*reuse, want);
        }
        iimg.emplace(i, *reuse);
    }
    if (!b.cod_vertices.empty() && !enames.empty()) {
        std::size_t more = rng.below(3);
        for (std::size_t i = 0; i < more && inames.size() < bounds.incidences; ++i) {
            Atom n = Atom::leaf("k" + std::to_string(inames.size()));
            inames.push_back(n);
            idata.emplace(n, std::make_pair(rng.pick(b.cod_vertices), rng.pick(enames)));
        }
    }

    FinSet E{std::move(enames)};
    FinSet I{std::move(inames)};
    FinFunction port = FinFunction::tabulate(I, b.cv,
                                             [&](const Atom& n) { return idata.at(n).first; });
    FinFunction attach = FinFunction::tabulate(
        I, E, [&](const Atom& n) { return idata.at(n).second; });
    GraphObject cod(IncidenceHypergraph{b.cv, E, I, std::move(port), std::move(attach)});
    FinFunction fe = FinFunction::tabulate(r.edges, E,
                                           [&](const Atom& e) { return eimg.at(e); });
    FinFunction fi = FinFunction::tabulate(r.incidences, I,
                                           [&](const Atom& i) { return iimg.at(i); });
    return Morphism::make(MorKind::IncHyp, dom, std::move(cod), fv, std::move(fe),
                          std::move(fi));
}

Morphism forward_istr(Rng& rng, const GraphObject& dom, const GenBounds& bounds) {
    ForwardBuilder b{rng, bounds, dom, {}};
    b.build_vertices();
    const FinFunction& fv = *b.fv;
    const IncidenceStructure& s = dom.istr();

    std::vector<Atom> enames;
    std::map<Atom, Atom> eimg;
    for (const Atom& e : s.edges) {
        std::optional<Atom> reuse;
        if (!enames.empty() && rng.coin())
            reuse = rng.pick(enames);
        if (!reuse) {
            reuse = Atom::leaf("d" + std::to_string(enames.size()));
            enames.push_back(*reuse);
        }
        eimg.emplace(e, *reuse);
    }
    std::size_t extra = rng.below(3);
    for (std::size_t i = 0; i < extra && enames.size() < bounds.edges; ++i)
        enames.push_back(Atom::leaf("d" + std::to_string(enames.size())));

    std::vector<Atom> inc;
    for (const Atom& i : s.incidences)
        inc.push_back(Atom::pair(fv(i.parts()[0]), eimg.at(i.parts()[1])));
    FinSet have(std::move(inc));
    if (!b.cod_vertices.empty() && !enames.empty()) {
        std::size_t more = rng.below(3);
        for (std::size_t i = 0; i < more; ++i) {
            std::vector<Atom> next(have.elems());
            next.push_back(Atom::pair(rng.pick(b.cod_vertices), rng.pick(enames)));
            FinSet grown{std::move(next)};
            if (grown.size() <= bounds.incidences)
                have = std::move(grown);
        }
    }
    FinSet E{std::move(enames)};
    GraphObject cod(IncidenceStructure{b.cv, E, std::move(have)});
    FinFunction fe = FinFunction::tabulate(s.edges, E,
                                           [&](const Atom& e) { return eimg.at(e); });
    return Morphism::make(MorKind::IStr, dom, std::move(cod), fv, std::move(fe));
}

} // namespace

Morphism random_morphism_from(Rng& rng, MorKind kind, const GraphObject& dom,
                              std::optional<Predicate> cod_pred, const GenBounds& bounds) {
    if (dom.kind() != object_kind_of(kind))
        throw KindError("domain kind does not fit the requested morphism kind");
    Morphism m = [&] {
        switch (kind) {
        case MorKind::Digraph: return forward_digraph(rng, dom, cod_pred, bounds);
        case MorKind::SSys: return forward_ssys(rng, dom, cod_pred, bounds);
        case MorKind::Quiver: return forward_quiver(rng, dom, bounds);
        case MorKind::StrictSsh:
        case MorKind::WeakSsh: return forward_ssh(rng, kind, dom, cod_pred, bounds);
        case MorKind::IncHyp: return forward_inc_hyp(rng, dom, bounds);
        case MorKind::IStr: return forward_istr(rng, dom, bounds);
        }
        throw KindError("unreachable morphism kind");
    }();
    assert_valid(m);
    assert_valid(m.cod(), cod_pred);
    return m;
}

namespace {

// Backward construction: pick preimages under a random vertex map so
// every piece of domain structure lands on chosen codomain structure.
struct BackwardBuilder {
    Rng& rng;
    const GenBounds& bounds;
    const GraphObject& cod;

    std::vector<Atom> dom_vertices;
    FinSet dv;
    std::optional<FinFunction> fv;
    std::map<Atom, std::vector<Atom>> preim;

    BackwardBuilder(Rng& r, const GenBounds& b, const GraphObject& c)
        : rng(r), bounds(b), cod(c) {}

    void build_vertices() {
        std::size_t n = cod.vertices().empty() ? 0 : rng.below(bounds.vertices + 1);
        dom_vertices = fresh("x", n);
        dv = FinSet{std::vector<Atom>(dom_vertices)};
        if (dom_vertices.empty())
            fv = FinFunction(dv, cod.vertices(), {});
        else
            fv = FinFunction::tabulate(dv, cod.vertices(), [&](const Atom&) {
                return rng.pick(cod.vertices().elems());
            });
        for (const Atom& x : dom_vertices)
            preim[(*fv)(x)].push_back(x);
    }

    const std::vector<Atom>* preimages(const Atom& target) const {
        auto it = preim.find(target);
        return it == preim.end() || it->second.empty() ? nullptr : &it->second;
    }
};

Morphism backward_quiver(Rng& rng, const GraphObject& cod, const GenBounds& bounds) {
    BackwardBuilder b{rng, bounds, cod};
    b.build_vertices();
    const Quiver& c = cod.quiver();
    std::vector<Atom> names;
    std::map<Atom, std::pair<Atom, Atom>> ends;
    std::map<Atom, Atom> img;
    std::size_t attempts = c.arcs.empty() ? 0 : rng.below(bounds.edges + 1);
    for (std::size_t i = 0; i < attempts; ++i) {
        const Atom& target = rng.pick(c.arcs.elems());
        const auto* us = b.preimages(c.src(target));
        const auto* ws = b.preimages(c.tgt(target));
        if (!us || !ws)
            continue;
        Atom n = Atom::leaf("a" + std::to_string(names.size()));
        names.push_back(n);
        ends.emplace(n, std::make_pair(rng.pick(*us), rng.pick(*ws)));
        img.emplace(n, target);
    }
    FinSet arcs{std::move(names)};
    FinFunction src = FinFunction::tabulate(arcs, b.dv,
                                            [&](const Atom& n) { return ends.at(n).first; });
    FinFunction tgt = FinFunction::tabulate(arcs, b.dv,
                                            [&](const Atom& n) { return ends.at(n).second; });
    GraphObject dom(Quiver{b.dv, arcs, std::move(src), std::move(tgt)});
    FinFunction fe = FinFunction::tabulate(arcs, c.arcs,
                                           [&](const Atom& n) { return img.at(n); });
    return Morphism::make(MorKind::Quiver, std::move(dom), cod, *b.fv, std::move(fe));
}

Morphism backward_digraph(Rng& rng, const GraphObject& cod, std::optional<Predicate> dom_pred,
                          const GenBounds& bounds) {
    BackwardBuilder b{rng, bounds, cod};
    b.build_vertices();
    std::vector<Atom> cands;
    for (const Atom& u : b.dom_vertices)
        for (const Atom& w : b.dom_vertices) {
            Atom arc = Atom::pair(u, w);
            if (!cod.digraph().arcs.contains(Atom::pair((*b.fv)(u), (*b.fv)(w))))
                continue;
            if (dom_pred == Predicate::Symmetric &&
                !cod.digraph().arcs.contains(Atom::pair((*b.fv)(w), (*b.fv)(u))))
                continue;
            cands.push_back(arc);
        }
    std::vector<Atom> arcs;
    if (!cands.empty()) {
        std::size_t take = rng.below(std::min(bounds.edges, cands.size()) + 1);
        arcs = sample_distinct(rng, cands, take);
        if (dom_pred == Predicate::Symmetric)
            for (const Atom& a : std::vector<Atom>(arcs))
                arcs.push_back(Atom::pair(a.parts()[1], a.parts()[0]));
    }
    GraphObject dom(Digraph{b.dv, FinSet(std::move(arcs))});
    return Morphism::make(MorKind::Digraph, std::move(dom), cod, *b.fv);
}

Morphism backward_ssh(Rng& rng, MorKind kind, const GraphObject& cod,
                      std::optional<Predicate> dom_pred, const GenBounds& bounds) {
    BackwardBuilder b{rng, bounds, cod};
    b.build_vertices();
    const SetSystemHypergraph& c = cod.ssh();
    bool weak = kind == MorKind::WeakSsh;

    std::vector<Atom> names;
    std::map<Atom, FinSet> ends;
    std::map<Atom, Atom> img;
    std::size_t attempts = c.edges.empty() ? 0 : rng.below(bounds.edges + 1);
    for (std::size_t i = 0; i < attempts; ++i) {
        const Atom& target = rng.pick(c.edges.elems());
        FinSet tends = subset_members(c.eps(target));
        std::vector<Atom> members;
        if (weak) {
            std::vector<Atom> pool;
            for (const Atom& a : tends)
                if (const auto* pre = b.preimages(a))
                    for (const Atom& x : *pre)
                        pool.push_back(x);
            if (dom_pred == Predicate::Multigraph) {
                if (pool.empty())
                    continue;
                std::size_t want = 1 + rng.below(std::min<std::size_t>(2, pool.size()));
                members = sample_distinct(rng, std::move(pool), want);
            } else {
                for (const Atom& x : pool)
                    if (rng.coin())
                        members.push_back(x);
            }
        } else {
            bool ok = true;
            for (const Atom& a : tends) {
                const auto* pre = b.preimages(a);
                if (!pre) {
                    ok = false;
                    break;
                }
                members.push_back(rng.pick(*pre));
            }
            if (!ok)
                continue;
            if (dom_pred == Predicate::Multigraph && (members.empty() || members.size() > 2))
                continue;
        }
        Atom n = Atom::leaf("e" + std::to_string(names.size()));
        names.push_back(n);
        ends.emplace(n, FinSet(std::move(members)));
        img.emplace(n, target);
    }
    FinSet edges{std::move(names)};
    GraphObject dom(make_ssh(b.dv, edges, [&](const Atom& n) {
        return subset_atom(ends.at(n));
    }));
    FinFunction fe = FinFunction::tabulate(edges, c.edges,
                                           [&](const Atom& n) { return img.at(n); });
    return Morphism::make(kind, std::move(dom), cod, *b.fv, std::move(fe));
}

Morphism backward_ssys(Rng& rng, const GraphObject& cod, std::optional<Predicate> dom_pred,
                       const GenBounds& bounds) {
    BackwardBuilder b{rng, bounds, cod};
    b.build_vertices();
    const SetSystem& c = cod.ssys();
    std::vector<Atom> edges;
    std::size_t attempts = c.edges.empty() ? 0 : rng.below(bounds.edges + 1);
    for (std::size_t i = 0; i < attempts; ++i) {
        const Atom& target = rng.pick(c.edges.elems());
        if (dom_pred == Predicate::SimpleGraph && (target.parts().empty() ||
                                                   target.parts().size() > 2))
            continue;
        std::vector<Atom> members;
        bool ok = true;
        for (const Atom& a : target.parts()) {
            const auto* pre = b.preimages(a);
            if (!pre) {
                ok = false;
                break;
            }
            members.push_back(rng.pick(*pre));
        }
        if (ok)
            edges.push_back(Atom::subset(std::move(members)));
    }
    GraphObject dom(SetSystem{b.dv, FinSet(std::move(edges))});
    return Morphism::make(MorKind::SSys, std::move(dom), cod, *b.fv);
}

Morphism backward_inc_hyp(Rng& rng, const GraphObject& cod, const GenBounds& bounds) {
    BackwardBuilder b{rng, bounds, cod};
    b.build_vertices();
    const IncidenceHypergraph& c = cod.inc_hyp();

    std::vector<Atom> enames;
    std::map<Atom, Atom> eimg;
    std::size_t ne = c.edges.empty() ? 0 : rng.below(bounds.edges + 1);
    for (std::size_t i = 0; i < ne; ++i) {
        Atom n = Atom::leaf("e" + std::to_string(enames.size()));
        enames.push_back(n);
        eimg.emplace(n, rng.pick(c.edges.elems()));
    }

    std::vector<Atom> inames;
    std::map<Atom, std::pair<Atom, Atom>> idata;
    std::map<Atom, Atom> iimg;
    std::size_t attempts = (enames.empty() || c.incidences.empty())
                               ? 0
                               : rng.below(bounds.incidences + 1);
    for (std::size_t i = 0; i < attempts; ++i) {
        const Atom& e = rng.pick(enames);
        const Atom& e2 = eimg.at(e);
        std::vector<Atom> targets;
        for (const Atom& i2 : c.incidences)
            if (c.attach(i2) == e2)
                targets.push_back(i2);
        if (targets.empty())
            continue;
        const Atom& i2 = rng.pick(targets);
        const auto* pre = b.preimages(c.port(i2));
        if (!pre)
            continue;
        Atom n = Atom::leaf("j" + std::to_string(inames.size()));
        inames.push_back(n);
        idata.emplace(n, std::make_pair(rng.pick(*pre), e));
        iimg.emplace(n, i2);
    }

    FinSet E{std::move(enames)};
    FinSet I{std::move(inames)};
    FinFunction port = FinFunction::tabulate(I, b.dv,
                                             [&](const Atom& n) { return idata.at(n).first; });
    FinFunction attach = FinFunction::tabulate(
        I, E, [&](const Atom& n) { return idata.at(n).second; });
    GraphObject dom(IncidenceHypergraph{b.dv, E, I, std::move(port), std::move(attach)});
    FinFunction fe = FinFunction::tabulate(E, c.edges,
                                           [&](const Atom& n) { return eimg.at(n); });
    FinFunction fi = FinFunction::tabulate(I, c.incidences,
                                           [&](const Atom& n) { return iimg.at(n); });
    return Morphism::make(MorKind::IncHyp, std::move(dom), cod, *b.fv, std::move(fe),
                          std::move(fi));
}

Morphism backward_istr(Rng& rng, const GraphObject& cod, const GenBounds& bounds) {
    BackwardBuilder b{rng, bounds, cod};
    b.build_vertices();
    const IncidenceStructure& c = cod.istr();

    std::vector<Atom> enames;
    std::map<Atom, Atom> eimg;
    std::size_t ne = c.edges.empty() ? 0 : rng.below(bounds.edges + 1);
    for (std::size_t i = 0; i < ne; ++i) {
        Atom n = Atom::leaf("e" + std::to_string(enames.size()));
        enames.push_back(n);
        eimg.emplace(n, rng.pick(c.edges.elems()));
    }

    std::vector<Atom> inc;
    std::size_t attempts = (enames.empty() || c.incidences.empty())
                               ? 0
                               : rng.below(bounds.incidences + 1);
    for (std::size_t i = 0; i < attempts; ++i) {
        const Atom& e = rng.pick(enames);
        const Atom& e2 = eimg.at(e);
        std::vector<Atom> targets;
        for (const Atom& i2 : c.incidences)
            if (i2.parts()[1] == e2)
                targets.push_back(i2);
        if (targets.empty())
            continue;
        const Atom& i2 = rng.pick(targets);
        const auto* pre = b.preimages(i2.parts()[0]);
        if (!pre)
            continue;
        inc.push_back(Atom::pair(rng.pick(*pre), e));
    }

    FinSet E{std::move(enames)};
    GraphObject dom(IncidenceStructure{b.dv, E, FinSet(std::move(inc))});
    FinFunction fe = FinFunction::tabulate(E, c.edges,
                                           [&](const Atom& n) { return eimg.at(n); });
    return Morphism::make(MorKind::IStr, std::move(dom), cod, *b.fv, std::move(fe));
}

} // namespace

Morphism random_morphism_into(Rng& rng, MorKind kind, const GraphObject& cod,
                              std::optional<Predicate> dom_pred, const GenBounds& bounds) {
    if (cod.kind() != object_kind_of(kind))
        throw KindError("codomain kind does not fit the requested morphism kind");
    Morphism m = [&] {
        switch (kind) {
        case MorKind::Quiver: return backward_quiver(rng, cod, bounds);
        case MorKind::Digraph: return backward_digraph(rng, cod, dom_pred, bounds);
        case MorKind::StrictSsh:
        case MorKind::WeakSsh: return backward_ssh(rng, kind, cod, dom_pred, bounds);
        case MorKind::SSys: return backward_ssys(rng, cod, dom_pred, bounds);
        case MorKind::IncHyp: return backward_inc_hyp(rng, cod, bounds);
        case MorKind::IStr: return backward_istr(rng, cod, bounds);
        }
        throw KindError("unreachable morphism kind");
    }();
    assert_valid(m);
    assert_valid(m.dom(), dom_pred);
    return m;
}

Morphism random_morphism(Rng& rng, MorKind kind, std::optional<Predicate> pred,
                         const GenBounds& bounds) {
    GraphObject dom = random_object(rng, object_kind_of(kind), pred, bounds);
    return random_morphism_from(rng, kind, dom, pred, bounds);
}

std::pair<Morphism, Morphism> random_composable_pair(Rng& rng, MorKind kind,
                                                     std::optional<Predicate> pred,
                                                     const GenBounds& bounds) {
    Morphism f = random_morphism(rng, kind, pred, bounds);
    Morphism g = random_morphism_from(rng, kind, f.cod(), pred, bounds);
    return {std::move(f), std::move(g)};
}

} // namespace graphcat
