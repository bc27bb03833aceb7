#include "graphcat/fixtures.hpp"

namespace graphcat::fixtures {

namespace {

Atom L(const char* s) { return Atom::leaf(s); }

GraphObject ssh_of(std::vector<Atom> vertices, std::vector<std::pair<Atom, std::vector<Atom>>> edges) {
    FinSet vs(std::move(vertices));
    std::vector<Atom> names;
    names.reserve(edges.size());
    for (auto& [name, members] : edges)
        names.push_back(name);
    FinSet es(std::move(names));
    return make_ssh(vs, es, [&](const Atom& e) {
        for (auto& [name, members] : edges)
            if (name == e)
                return Atom::subset(members);
        return Atom::subset({});
    });
}

} // namespace

GraphObject one_three_edge() {
    return ssh_of({L("0"), L("1"), L("2")}, {{L("e"), {L("0"), L("1"), L("2")}}});
}

GraphObject one_two_edge() {
    return ssh_of({L("0"), L("1")}, {{L("f"), {L("0"), L("1")}}});
}

GraphObject two_edge_path() {
    return ssh_of({L("0"), L("1"), L("2")},
                  {{L("e"), {L("0"), L("1")}}, {L("f"), {L("1"), L("2")}}});
}

GraphObject single_edge() {
    return ssh_of({L("0"), L("1")}, {{L("g"), {L("0"), L("1")}}});
}

GraphObject shared_endpoint_pair() {
    return ssh_of({L("v"), L("w"), L("x")},
                  {{L("e"), {L("v"), L("x")}}, {L("f"), {L("w"), L("x")}}});
}

GraphObject parallel_two_edges() {
    return ssh_of({L("w"), L("x")},
                  {{L("e"), {L("w"), L("x")}}, {L("f"), {L("w"), L("x")}}});
}

GraphObject empty_endpoint_edge() {
    return ssh_of({L("x")}, {{L("e"), {}}});
}

GraphObject one_loop_edge() {
    return ssh_of({L("x")}, {{L("f"), {L("x")}}});
}

GraphObject parallel_arc_quiver() {
    FinSet vs{L("u"), L("w")};
    FinSet arcs{L("a1"), L("a2")};
    return Quiver{vs, arcs, FinFunction(arcs, vs, {L("u"), L("u")}),
                  FinFunction(arcs, vs, {L("w"), L("w")})};
}

GraphObject loop_quiver() {
    FinSet vs{L("u")};
    FinSet arcs{L("a")};
    return Quiver{vs, arcs, FinFunction(arcs, vs, {L("u")}), FinFunction(arcs, vs, {L("u")})};
}

GraphObject one_arc_digraph() {
    FinSet vs{L("u"), L("w")};
    return Digraph{vs, FinSet{Atom::pair(L("u"), L("w"))}};
}

} // namespace graphcat::fixtures
