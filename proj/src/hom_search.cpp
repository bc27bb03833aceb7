#include "graphcat/hom_search.hpp"

#include <algorithm>
#include <limits>

#include "graphcat/errors.hpp"

namespace graphcat {

namespace {

void check_caps(const GraphObject& x, const Caps& caps, const char* side) {
    auto over = [&](const char* what, std::size_t n, std::size_t cap) {
        if (n > cap)
            throw CapError(std::string(side) + " has " + std::to_string(n) + " " + what +
                           ", cap is " + std::to_string(cap));
    };
    over("vertices", x.vertices().size(), caps.vertices);
    switch (x.kind()) {
    case StructureKind::Quiver: over("arcs", x.quiver().arcs.size(), caps.edges); break;
    case StructureKind::Digraph: over("arcs", x.digraph().arcs.size(), caps.edges); break;
    case StructureKind::Ssh: over("edges", x.ssh().edges.size(), caps.edges); break;
    case StructureKind::SSys: over("edges", x.ssys().edges.size(), caps.edges); break;
    case StructureKind::IncHyp:
        over("edges", x.inc_hyp().edges.size(), caps.edges);
        over("incidences", x.inc_hyp().incidences.size(), caps.incidences);
        break;
    case StructureKind::IStr:
        over("edges", x.istr().edges.size(), caps.edges);
        over("incidences", x.istr().incidences.size(), caps.incidences);
        break;
    }
}

// Backtracks over vertex images most-constrained-first, then fills the
// edge and incidence components slot by slot from exact candidate sets.
class Searcher {
public:
    Searcher(MorKind kind, const GraphObject& dom, const GraphObject& cod, const Caps& caps,
             const std::vector<Atom>* pin_vertices = nullptr)
        : kind_(kind), dom_(dom), cod_(cod) {
        StructureKind want = object_kind_of(kind);
        if (dom.kind() != want || cod.kind() != want)
            throw KindError(std::string("hom search over ") + mor_kind_name(kind) +
                            " morphisms needs two " + kind_name(want) + " objects");
        check_caps(dom, caps, "domain");
        check_caps(cod, caps, "codomain");
        if (pin_vertices) {
            if (pin_vertices->size() != dom.vertices().size())
                throw DomainError("pinned vertex row does not match the domain carrier");
            pin_ = *pin_vertices;
        }

        dv_ = dom.vertices().elems();
        cv_ = cod.vertices().elems();
        vimg_.assign(dv_.size(), Atom::leaf(""));
        groups_of_vertex_.assign(dv_.size(), {});

        build_structure();

        std::vector<std::size_t> degree(dv_.size(), 0);
        for (const Group& g : groups_)
            for (std::size_t v : g.verts)
                ++degree[v];
        for (const EdgeSlot& s : eslots_)
            for (std::size_t v : s.verts)
                ++degree[v];
        for (const IncSlot& s : islots_)
            ++degree[s.port];
        vorder_.resize(dv_.size());
        for (std::size_t i = 0; i < vorder_.size(); ++i)
            vorder_[i] = i;
        std::stable_sort(vorder_.begin(), vorder_.end(),
                         [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

        for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
            groups_[gi].remaining = groups_[gi].verts.size();
            for (std::size_t v : groups_[gi].verts)
                groups_of_vertex_[v].push_back(gi);
        }
    }

    void run(const std::function<bool(const RawHom&)>& visit) {
        if (!closed_groups_ok())
            return;
        std::uint64_t ignored = 0;
        vrec(0, &visit, ignored);
    }

    std::uint64_t count() {
        if (!closed_groups_ok())
            return 0;
        std::uint64_t total = 0;
        vrec(0, nullptr, total);
        return total;
    }

private:
    using Wide = unsigned __int128;

    // vertex indices an edge constrains, plus which dom element it is
    struct EdgeSlot {
        Atom elem = Atom::leaf("");
        std::vector<std::size_t> verts;  // distinct dom vertex indices
        std::vector<std::size_t> incs;   // IncHyp: incidence slot indices attached here
    };
    struct IncSlot {
        Atom elem = Atom::leaf("");
        std::size_t port = 0;
        std::size_t attach = 0;  // edge slot index
    };
    // vertex-stage constraint: once all verts are assigned the referenced
    // edge slot (or relation element) must still have a candidate image
    struct Group {
        std::vector<std::size_t> verts;
        std::size_t slot;  // index into eslots_, or kind-specific payload
        std::size_t remaining = 0;
    };

    std::size_t vindex(const Atom& v) const { return dom_.vertices().index_of(v); }

    void build_structure() {
        switch (kind_) {
        case MorKind::Digraph: {
            for (const Atom& a : dom_.digraph().arcs) {
                std::size_t s = vindex(a.parts()[0]), t = vindex(a.parts()[1]);
                Group g;
                g.verts = {s, t};
                if (s == t)
                    g.verts.pop_back();
                g.slot = darcs_.size();
                darcs_.push_back({s, t});
                groups_.push_back(std::move(g));
            }
            break;
        }
        case MorKind::SSys: {
            for (const Atom& e : dom_.ssys().edges) {
                Group g;
                for (const Atom& v : e.parts())
                    g.verts.push_back(vindex(v));
                g.slot = groups_.size();
                groups_.push_back(std::move(g));
            }
            break;
        }
        case MorKind::Quiver: {
            const Quiver& q = dom_.quiver();
            for (const Atom& a : q.arcs) {
                EdgeSlot s;
                s.elem = a;
                std::size_t u = vindex(q.src(a)), w = vindex(q.tgt(a));
                s.verts = {u, w};
                if (u == w)
                    s.verts.pop_back();
                eslots_.push_back(std::move(s));
            }
            const Quiver& c = cod_.quiver();
            for (const Atom& b : c.arcs)
                carcs_.push_back({b, c.src(b), c.tgt(b)});
            add_groups_for_eslots();
            break;
        }
        case MorKind::StrictSsh:
        case MorKind::WeakSsh: {
            const SetSystemHypergraph& h = dom_.ssh();
            for (const Atom& e : h.edges) {
                EdgeSlot s;
                s.elem = e;
                for (const Atom& v : h.eps(e).parts())
                    s.verts.push_back(vindex(v));
                eslots_.push_back(std::move(s));
            }
            const SetSystemHypergraph& c = cod_.ssh();
            for (const Atom& e : c.edges)
                cends_.push_back({e, c.eps(e), subset_members(c.eps(e))});
            add_groups_for_eslots();
            break;
        }
        case MorKind::IStr: {
            const IncidenceStructure& s = dom_.istr();
            for (const Atom& e : s.edges) {
                EdgeSlot slot;
                slot.elem = e;
                for (const Atom& i : s.incidences)
                    if (i.parts()[1] == e) {
                        std::size_t v = vindex(i.parts()[0]);
                        if (std::find(slot.verts.begin(), slot.verts.end(), v) ==
                            slot.verts.end())
                            slot.verts.push_back(v);
                    }
                eslots_.push_back(std::move(slot));
            }
            add_groups_for_eslots();
            break;
        }
        case MorKind::IncHyp: {
            const IncidenceHypergraph& r = dom_.inc_hyp();
            for (const Atom& e : r.edges) {
                EdgeSlot s;
                s.elem = e;
                eslots_.push_back(std::move(s));
            }
            for (const Atom& i : r.incidences) {
                IncSlot s;
                s.elem = i;
                s.port = vindex(r.port(i));
                s.attach = r.edges.index_of(r.attach(i));
                eslots_[s.attach].incs.push_back(islots_.size());
                islots_.push_back(std::move(s));
            }
            const IncidenceHypergraph& c = cod_.inc_hyp();
            for (const Atom& i : c.incidences)
                cincs_.push_back({i, c.port(i), c.attach(i)});
            break;
        }
        }
        eimg_.assign(eslots_.size(), Atom::leaf(""));
        iimg_.assign(islots_.size(), Atom::leaf(""));
    }

    void add_groups_for_eslots() {
        for (std::size_t ei = 0; ei < eslots_.size(); ++ei) {
            Group g;
            g.verts = eslots_[ei].verts;
            g.slot = ei;
            groups_.push_back(std::move(g));
        }
    }

    bool group_ok(const Group& g) const {
        switch (kind_) {
        case MorKind::Digraph: {
            const auto& [s, t] = darcs_[g.slot];
            return cod_.digraph().arcs.contains(Atom::pair(vimg_[s], vimg_[t]));
        }
        case MorKind::SSys: {
            std::vector<Atom> img;
            img.reserve(g.verts.size());
            for (std::size_t v : g.verts)
                img.push_back(vimg_[v]);
            return cod_.ssys().edges.contains(Atom::subset(std::move(img)));
        }
        default: return edge_has_candidate(g.slot);
        }
    }

    bool closed_groups_ok() const {
        for (const Group& g : groups_)
            if (g.verts.empty() && !group_ok(g))
                return false;
        return true;
    }

    bool edge_matches(std::size_t ei, std::size_t ci) const {
        const EdgeSlot& s = eslots_[ei];
        switch (kind_) {
        case MorKind::Quiver: {
            const auto& [b, bs, bt] = carcs_[ci];
            const Quiver& q = dom_.quiver();
            return bs == vimg_[vindex(q.src(s.elem))] && bt == vimg_[vindex(q.tgt(s.elem))];
        }
        case MorKind::StrictSsh: {
            std::vector<Atom> img;
            img.reserve(s.verts.size());
            for (std::size_t v : s.verts)
                img.push_back(vimg_[v]);
            return std::get<1>(cends_[ci]) == Atom::subset(std::move(img));
        }
        case MorKind::WeakSsh: {
            const FinSet& target = std::get<2>(cends_[ci]);
            for (std::size_t v : s.verts)
                if (!target.contains(vimg_[v]))
                    return false;
            return true;
        }
        case MorKind::IStr: {
            const Atom& e2 = cod_.istr().edges.elems()[ci];
            const IncidenceStructure& d = dom_.istr();
            for (const Atom& i : d.incidences)
                if (i.parts()[1] == s.elem &&
                    !cod_.istr().incidences.contains(
                        Atom::pair(vimg_[vindex(i.parts()[0])], e2)))
                    return false;
            return true;
        }
        case MorKind::IncHyp: {
            const Atom& e2 = cod_.inc_hyp().edges.elems()[ci];
            for (std::size_t ii : s.incs)
                if (inc_candidates(ii, e2) == 0)
                    return false;
            return true;
        }
        default: return false;
        }
    }

    std::size_t cod_edge_count() const {
        switch (kind_) {
        case MorKind::Quiver: return carcs_.size();
        case MorKind::StrictSsh:
        case MorKind::WeakSsh: return cends_.size();
        case MorKind::IStr: return cod_.istr().edges.size();
        case MorKind::IncHyp: return cod_.inc_hyp().edges.size();
        default: return 0;
        }
    }

    Atom cod_edge_elem(std::size_t ci) const {
        switch (kind_) {
        case MorKind::Quiver: return std::get<0>(carcs_[ci]);
        case MorKind::StrictSsh:
        case MorKind::WeakSsh: return std::get<0>(cends_[ci]);
        case MorKind::IStr: return cod_.istr().edges.elems()[ci];
        case MorKind::IncHyp: return cod_.inc_hyp().edges.elems()[ci];
        default: throw KindError("no edge component");
        }
    }

    bool edge_has_candidate(std::size_t ei) const {
        for (std::size_t ci = 0; ci < cod_edge_count(); ++ci)
            if (edge_matches(ei, ci))
                return true;
        return false;
    }

    // number of cod incidences on edge e2 matching incidence slot ii's port
    std::size_t inc_candidates(std::size_t ii, const Atom& e2) const {
        const Atom& want_port = vimg_[islots_[ii].port];
        std::size_t n = 0;
        for (const auto& [i2, p2, a2] : cincs_)
            if (a2 == e2 && p2 == want_port)
                ++n;
        return n;
    }

    bool vrec(std::size_t pos, const std::function<bool(const RawHom&)>* visit,
              std::uint64_t& total) {
        if (pos == vorder_.size()) {
            if (visit)
                return leaf_visit(*visit);
            return leaf_count(total);
        }
        std::size_t vi = vorder_[pos];
        const Atom* only = pin_.empty() ? nullptr : &pin_[vi];
        for (const Atom& target : cv_) {
            if (only && !(target == *only))
                continue;
            vimg_[vi] = target;
            bool ok = true;
            for (std::size_t gi : groups_of_vertex_[vi]) {
                if (--groups_[gi].remaining == 0 && !group_ok(groups_[gi]))
                    ok = false;
            }
            if (ok && !vrec(pos + 1, visit, total)) {
                for (std::size_t gi : groups_of_vertex_[vi])
                    ++groups_[gi].remaining;
                return false;
            }
            for (std::size_t gi : groups_of_vertex_[vi])
                ++groups_[gi].remaining;
        }
        return true;
    }

    bool leaf_visit(const std::function<bool(const RawHom&)>& visit) {
        return erec(0, visit);
    }

    bool erec(std::size_t ei, const std::function<bool(const RawHom&)>& visit) {
        if (ei == eslots_.size())
            return irec(0, visit);
        for (std::size_t ci = 0; ci < cod_edge_count(); ++ci) {
            if (!edge_matches(ei, ci))
                continue;
            eimg_[ei] = cod_edge_elem(ci);
            if (!erec(ei + 1, visit))
                return false;
        }
        return true;
    }

    bool irec(std::size_t ii, const std::function<bool(const RawHom&)>& visit) {
        if (ii == islots_.size()) {
            bool vertex_only = kind_ == MorKind::Digraph || kind_ == MorKind::SSys;
            RawHom raw{vimg_, vertex_only ? nullptr : &eimg_,
                       kind_ == MorKind::IncHyp ? &iimg_ : nullptr};
            return visit(raw);
        }
        const IncSlot& s = islots_[ii];
        const Atom& e2 = eimg_[s.attach];
        const Atom& want_port = vimg_[s.port];
        for (const auto& [i2, p2, a2] : cincs_) {
            if (!(a2 == e2) || !(p2 == want_port))
                continue;
            iimg_[ii] = i2;
            if (!irec(ii + 1, visit))
                return false;
        }
        return true;
    }

    bool leaf_count(std::uint64_t& total) {
        Wide here = 1;
        if (kind_ == MorKind::IncHyp) {
            for (const EdgeSlot& s : eslots_) {
                Wide edge_total = 0;
                for (std::size_t ci = 0; ci < cod_edge_count(); ++ci) {
                    Wide choice = 1;
                    const Atom e2 = cod_edge_elem(ci);
                    for (std::size_t ii : s.incs)
                        choice *= inc_candidates(ii, e2);
                    edge_total += choice;
                }
                here *= edge_total;
                if (here == 0)
                    break;
            }
        } else {
            for (std::size_t ei = 0; ei < eslots_.size(); ++ei) {
                std::size_t n = 0;
                for (std::size_t ci = 0; ci < cod_edge_count(); ++ci)
                    if (edge_matches(ei, ci))
                        ++n;
                here *= n;
                if (here == 0)
                    break;
            }
        }
        Wide sum = Wide(total) + here;
        if (sum > std::numeric_limits<std::uint64_t>::max())
            throw CapError("hom count exceeds the uint64 range");
        total = static_cast<std::uint64_t>(sum);
        return true;
    }

    MorKind kind_;
    const GraphObject& dom_;
    const GraphObject& cod_;
    std::vector<Atom> pin_;
    std::vector<Atom> dv_, cv_;
    std::vector<Atom> vimg_, eimg_, iimg_;
    std::vector<std::size_t> vorder_;
    std::vector<Group> groups_;
    std::vector<std::vector<std::size_t>> groups_of_vertex_;
    std::vector<EdgeSlot> eslots_;
    std::vector<IncSlot> islots_;
    std::vector<std::pair<std::size_t, std::size_t>> darcs_;          // digraph dom arcs
    std::vector<std::tuple<Atom, Atom, Atom>> carcs_;                 // cod arc, src, tgt
    std::vector<std::tuple<Atom, Atom, FinSet>> cends_;               // cod edge, eps, members
    std::vector<std::tuple<Atom, Atom, Atom>> cincs_;                 // cod inc, port, attach
};

const FinSet* edge_carrier(MorKind kind, const GraphObject& x) {
    switch (kind) {
    case MorKind::Quiver: return &x.quiver().arcs;
    case MorKind::StrictSsh:
    case MorKind::WeakSsh: return &x.ssh().edges;
    case MorKind::IStr: return &x.istr().edges;
    case MorKind::IncHyp: return &x.inc_hyp().edges;
    default: return nullptr;
    }
}

} // namespace

Morphism hom_from_raw(MorKind kind, const GraphObject& dom, const GraphObject& cod,
                      const RawHom& raw) {
    FinFunction vertex(dom.vertices(), cod.vertices(), raw.vertex);
    std::optional<FinFunction> edge, incidence;
    if (raw.edge)
        edge = FinFunction(*edge_carrier(kind, dom), *edge_carrier(kind, cod), *raw.edge);
    if (raw.incidence)
        incidence = FinFunction(dom.inc_hyp().incidences, cod.inc_hyp().incidences,
                                *raw.incidence);
    return Morphism::make(kind, dom, cod, std::move(vertex), std::move(edge),
                          std::move(incidence));
}

void for_each_hom(MorKind kind, const GraphObject& dom, const GraphObject& cod, const Caps& caps,
                  const std::function<bool(const RawHom&)>& visit) {
    Searcher(kind, dom, cod, caps).run(visit);
}

void for_each_hom_fixing_vertices(MorKind kind, const GraphObject& dom, const GraphObject& cod,
                                  const std::vector<Atom>& vertex_values, const Caps& caps,
                                  const std::function<bool(const RawHom&)>& visit) {
    Searcher(kind, dom, cod, caps, &vertex_values).run(visit);
}

std::vector<Morphism> enumerate_homs(MorKind kind, const GraphObject& dom, const GraphObject& cod,
                                     const Caps& caps) {
    std::vector<Morphism> out;
    for_each_hom(kind, dom, cod, caps, [&](const RawHom& raw) {
        out.push_back(hom_from_raw(kind, dom, cod, raw));
        return true;
    });
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        keys.emplace_back(canonical_encode(out[i]), i);
    std::sort(keys.begin(), keys.end());
    std::vector<Morphism> sorted;
    sorted.reserve(out.size());
    for (const auto& [key, i] : keys)
        sorted.push_back(std::move(out[i]));
    return sorted;
}

std::uint64_t count_homs(MorKind kind, const GraphObject& dom, const GraphObject& cod,
                         const Caps& caps) {
    return Searcher(kind, dom, cod, caps).count();
}

bool exists_hom(MorKind kind, const GraphObject& dom, const GraphObject& cod, const Caps& caps) {
    bool found = false;
    for_each_hom(kind, dom, cod, caps, [&](const RawHom&) {
        found = true;
        return false;
    });
    return found;
}

} // namespace graphcat
