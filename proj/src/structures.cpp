#include "graphcat/structures.hpp"

#include "graphcat/errors.hpp"

namespace graphcat {

const char* kind_name(StructureKind k) {
    switch (k) {
    case StructureKind::Quiver: return "quiver";
    case StructureKind::Digraph: return "digraph";
    case StructureKind::Ssh: return "ssh";
    case StructureKind::SSys: return "ssys";
    case StructureKind::IncHyp: return "inc-hyp";
    case StructureKind::IStr: return "istr";
    }
    return "?";
}

const char* predicate_name(Predicate p) {
    switch (p) {
    case Predicate::Multigraph: return "multigraph";
    case Predicate::SimpleGraph: return "simple-graph";
    case Predicate::Symmetric: return "symmetric";
    }
    return "?";
}

std::optional<StructureKind> kind_from_name(const std::string& name) {
    for (StructureKind k : {StructureKind::Quiver, StructureKind::Digraph, StructureKind::Ssh,
                            StructureKind::SSys, StructureKind::IncHyp, StructureKind::IStr})
        if (name == kind_name(k))
            return k;
    return std::nullopt;
}

std::optional<Predicate> predicate_from_name(const std::string& name) {
    for (Predicate p : {Predicate::Multigraph, Predicate::SimpleGraph, Predicate::Symmetric})
        if (name == predicate_name(p))
            return p;
    return std::nullopt;
}

StructureKind GraphObject::kind() const {
    return static_cast<StructureKind>(v_.index());
}

const FinSet& GraphObject::vertices() const {
    switch (kind()) {
    case StructureKind::Quiver: return quiver().vertices;
    case StructureKind::Digraph: return digraph().vertices;
    case StructureKind::Ssh: return ssh().vertices;
    case StructureKind::SSys: return ssys().vertices;
    case StructureKind::IncHyp: return inc_hyp().vertices;
    case StructureKind::IStr: return istr().vertices;
    }
    throw KindError("unreachable structure kind");
}

void GraphObject::throw_kind_mismatch(StructureKind wanted) const {
    throw KindError(std::string("expected ") + kind_name(wanted) + " object, got " +
                    kind_name(kind()));
}

namespace {

void check_assignment(std::vector<std::string>& out, const FinFunction& f, const FinSet& dom,
                      const FinSet& cod, const char* what) {
    if (f.domain() != dom)
        out.push_back(std::string(what) + ": domain is not the expected carrier");
    if (f.codomain() != cod)
        out.push_back(std::string(what) + ": codomain is not the expected carrier");
}

void check_endpoint_subsets(std::vector<std::string>& out, const FinFunction& eps,
                            const FinSet& vertices) {
    for (const Atom& e : eps.domain()) {
        const Atom& val = eps(e);
        if (!val.is(Atom::Kind::Subset)) {
            out.push_back("endpoints of " + e.show() + " are not a subset atom");
            continue;
        }
        for (const Atom& v : val.parts())
            if (!vertices.contains(v))
                out.push_back("endpoint " + v.show() + " of " + e.show() +
                              " is not a vertex");
    }
}

} // namespace

std::vector<std::string> validate(const GraphObject& x, std::optional<Predicate> pred) {
    std::vector<std::string> out;
    switch (x.kind()) {
    case StructureKind::Quiver: {
        const Quiver& q = x.quiver();
        check_assignment(out, q.src, q.arcs, q.vertices, "src");
        check_assignment(out, q.tgt, q.arcs, q.vertices, "tgt");
        break;
    }
    case StructureKind::Digraph: {
        const Digraph& d = x.digraph();
        for (const Atom& a : d.arcs) {
            if (!a.is(Atom::Kind::Pair)) {
                out.push_back("arc " + a.show() + " is not a pair atom");
                continue;
            }
            for (const Atom& v : a.parts())
                if (!d.vertices.contains(v))
                    out.push_back("arc endpoint " + v.show() + " is not a vertex");
        }
        break;
    }
    case StructureKind::Ssh: {
        const SetSystemHypergraph& h = x.ssh();
        if (h.eps.domain() != h.edges)
            out.push_back("eps: domain is not the edge carrier");
        if (h.eps.codomain() != FinSet(h.eps.values()))
            out.push_back("eps: codomain is not normalized to the endpoint sets in use");
        check_endpoint_subsets(out, h.eps, h.vertices);
        break;
    }
    case StructureKind::SSys: {
        const SetSystem& s = x.ssys();
        for (const Atom& e : s.edges) {
            if (!e.is(Atom::Kind::Subset)) {
                out.push_back("edge " + e.show() + " is not a subset atom");
                continue;
            }
            for (const Atom& v : e.parts())
                if (!s.vertices.contains(v))
                    out.push_back("edge member " + v.show() + " is not a vertex");
        }
        break;
    }
    case StructureKind::IncHyp: {
        const IncidenceHypergraph& r = x.inc_hyp();
        check_assignment(out, r.port, r.incidences, r.vertices, "port");
        check_assignment(out, r.attach, r.incidences, r.edges, "attach");
        break;
    }
    case StructureKind::IStr: {
        const IncidenceStructure& s = x.istr();
        for (const Atom& i : s.incidences) {
            if (!i.is(Atom::Kind::Pair)) {
                out.push_back("incidence " + i.show() + " is not a pair atom");
                continue;
            }
            if (!s.vertices.contains(i.parts()[0]))
                out.push_back("incidence port " + i.parts()[0].show() + " is not a vertex");
            if (!s.edges.contains(i.parts()[1]))
                out.push_back("incidence attachment " + i.parts()[1].show() +
                              " is not an edge");
        }
        break;
    }
    }
    if (!out.empty() || !pred)
        return out;

    switch (*pred) {
    case Predicate::Multigraph: {
        if (x.kind() != StructureKind::Ssh) {
            out.push_back("multigraph predicate applies to ssh objects only");
            break;
        }
        const SetSystemHypergraph& h = x.ssh();
        for (const Atom& e : h.edges) {
            std::size_t n = h.eps(e).parts().size();
            if (n < 1 || n > 2)
                out.push_back("edge " + e.show() + " has " + std::to_string(n) +
                              " endpoints, expected 1 or 2");
        }
        break;
    }
    case Predicate::SimpleGraph: {
        if (x.kind() != StructureKind::SSys) {
            out.push_back("simple-graph predicate applies to ssys objects only");
            break;
        }
        for (const Atom& e : x.ssys().edges) {
            std::size_t n = e.parts().size();
            if (n < 1 || n > 2)
                out.push_back("edge " + e.show() + " has " + std::to_string(n) +
                              " members, expected 1 or 2");
        }
        break;
    }
    case Predicate::Symmetric: {
        if (x.kind() != StructureKind::Digraph) {
            out.push_back("symmetric predicate applies to digraph objects only");
            break;
        }
        const Digraph& d = x.digraph();
        for (const Atom& a : d.arcs)
            if (!d.arcs.contains(Atom::pair(a.parts()[1], a.parts()[0])))
                out.push_back("arc " + a.show() + " has no reverse");
        break;
    }
    }
    return out;
}

bool satisfies(const GraphObject& x, Predicate pred) {
    return validate(x, pred).empty();
}

namespace {

/// Unambiguous flat text encoding.  Leaf names are length-prefixed so no
/// delimiter collision can merge distinct values.
void encode_atom(std::string& out, const Atom& a) {
    switch (a.kind()) {
    case Atom::Kind::Leaf:
        out += 'l';
        out += std::to_string(a.leaf_name().size());
        out += ':';
        out += a.leaf_name();
        break;
    case Atom::Kind::Pair:
        out += 'p';
        encode_atom(out, a.parts()[0]);
        encode_atom(out, a.parts()[1]);
        break;
    case Atom::Kind::Triple:
        out += 't';
        encode_atom(out, a.parts()[0]);
        encode_atom(out, a.parts()[1]);
        encode_atom(out, a.parts()[2]);
        break;
    case Atom::Kind::Subset:
        out += 's';
        out += std::to_string(a.parts().size());
        out += '(';
        for (const Atom& m : a.parts())
            encode_atom(out, m);
        out += ')';
        break;
    case Atom::Kind::Tag:
        out += 'g';
        out += std::to_string(a.tag_index());
        out += ':';
        encode_atom(out, a.parts()[0]);
        break;
    }
}

void encode_set(std::string& out, const FinSet& s) {
    out += '[';
    out += std::to_string(s.size());
    for (const Atom& a : s)
        encode_atom(out, a);
    out += ']';
}

void encode_fn(std::string& out, const FinFunction& f) {
    encode_set(out, f.domain());
    encode_set(out, f.codomain());
    out += '<';
    for (const Atom& v : f.values())
        encode_atom(out, v);
    out += '>';
}

} // namespace

std::string canonical_encode(const Atom& a) {
    std::string out;
    encode_atom(out, a);
    return out;
}

std::string canonical_encode(const GraphObject& x) {
    std::string out;
    out += kind_name(x.kind());
    out += '|';
    switch (x.kind()) {
    case StructureKind::Quiver:
        encode_set(out, x.quiver().vertices);
        encode_set(out, x.quiver().arcs);
        encode_fn(out, x.quiver().src);
        encode_fn(out, x.quiver().tgt);
        break;
    case StructureKind::Digraph:
        encode_set(out, x.digraph().vertices);
        encode_set(out, x.digraph().arcs);
        break;
    case StructureKind::Ssh:
        encode_set(out, x.ssh().vertices);
        encode_set(out, x.ssh().edges);
        encode_fn(out, x.ssh().eps);
        break;
    case StructureKind::SSys:
        encode_set(out, x.ssys().vertices);
        encode_set(out, x.ssys().edges);
        break;
    case StructureKind::IncHyp:
        encode_set(out, x.inc_hyp().vertices);
        encode_set(out, x.inc_hyp().edges);
        encode_set(out, x.inc_hyp().incidences);
        encode_fn(out, x.inc_hyp().port);
        encode_fn(out, x.inc_hyp().attach);
        break;
    case StructureKind::IStr:
        encode_set(out, x.istr().vertices);
        encode_set(out, x.istr().edges);
        encode_set(out, x.istr().incidences);
        break;
    }
    return out;
}

} // namespace graphcat
