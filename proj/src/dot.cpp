#include "graphcat/dot.hpp"

#include <sstream>

namespace graphcat {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

// Vertex and edge carriers may reuse atom spellings, so node ids carry a
// namespace prefix while labels show the bare atom.
std::string vnode(const Atom& a) { return quoted("v:" + a.show()); }
std::string enode(const Atom& a) { return quoted("e:" + a.show()); }

void vertex_decls(std::ostringstream& out, const FinSet& vertices) {
    for (const Atom& v : vertices)
        out << "  " << vnode(v) << " [label=" << quoted(v.show()) << "];\n";
}

void edge_box(std::ostringstream& out, const Atom& e) {
    out << "  " << enode(e) << " [label=" << quoted(e.show()) << ", shape=box];\n";
}

std::string undirected_edges(const FinSet& vertices, const FinSet& edges,
                             const FinFunction& eps) {
    std::ostringstream out;
    out << "graph {\n";
    vertex_decls(out, vertices);
    for (const Atom& e : edges) {
        const std::vector<Atom> ends = subset_members(eps(e)).elems();
        if (ends.size() == 2) {
            out << "  " << vnode(ends[0]) << " -- " << vnode(ends[1])
                << " [label=" << quoted(e.show()) << "];\n";
        } else if (ends.size() == 1) {
            out << "  " << vnode(ends[0]) << " -- " << vnode(ends[0])
                << " [label=" << quoted(e.show()) << "];\n";
        } else {
            edge_box(out, e);
            for (const Atom& v : ends)
                out << "  " << enode(e) << " -- " << vnode(v) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string bipartite(const FinSet& vertices, const FinSet& edges,
                      const std::vector<std::pair<Atom, Atom>>& links, bool labeled,
                      const FinSet* incidences = nullptr) {
    std::ostringstream out;
    out << "graph {\n";
    vertex_decls(out, vertices);
    for (const Atom& e : edges)
        edge_box(out, e);
    std::size_t i = 0;
    for (const auto& [v, e] : links) {
        out << "  " << vnode(v) << " -- " << enode(e);
        if (labeled)
            out << " [label=" << quoted(incidences->elems()[i].show()) << "]";
        out << ";\n";
        ++i;
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string to_dot(const GraphObject& x) {
    switch (x.kind()) {
    case StructureKind::Quiver: {
        const Quiver& q = x.quiver();
        std::ostringstream out;
        out << "digraph {\n";
        vertex_decls(out, q.vertices);
        for (const Atom& a : q.arcs)
            out << "  " << vnode(q.src(a)) << " -> " << vnode(q.tgt(a))
                << " [label=" << quoted(a.show()) << "];\n";
        out << "}\n";
        return out.str();
    }
    case StructureKind::Digraph: {
        const Digraph& d = x.digraph();
        std::ostringstream out;
        out << "digraph {\n";
        vertex_decls(out, d.vertices);
        for (const Atom& a : d.arcs)
            out << "  " << vnode(a.parts()[0]) << " -> " << vnode(a.parts()[1]) << ";\n";
        out << "}\n";
        return out.str();
    }
    case StructureKind::Ssh:
        return undirected_edges(x.ssh().vertices, x.ssh().edges, x.ssh().eps);
    case StructureKind::SSys: {
        const SetSystem& s = x.ssys();
        FinFunction eps = FinFunction::identity(s.edges);
        return undirected_edges(s.vertices, s.edges, eps);
    }
    case StructureKind::IncHyp: {
        const IncidenceHypergraph& h = x.inc_hyp();
        std::vector<std::pair<Atom, Atom>> links;
        for (const Atom& i : h.incidences)
            links.emplace_back(h.port(i), h.attach(i));
        return bipartite(h.vertices, h.edges, links, true, &h.incidences);
    }
    case StructureKind::IStr: {
        const IncidenceStructure& s = x.istr();
        std::vector<std::pair<Atom, Atom>> links;
        for (const Atom& i : s.incidences)
            links.emplace_back(i.parts()[0], i.parts()[1]);
        return bipartite(s.vertices, s.edges, links, false);
    }
    }
    return {};
}

} // namespace graphcat
