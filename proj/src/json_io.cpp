#include "graphcat/json_io.hpp"

#include <map>

#include <json.hpp>

#include "graphcat/errors.hpp"

namespace graphcat {

namespace {

using nlohmann::json;

json atom_to_json(const Atom& a) {
    switch (a.kind()) {
    case Atom::Kind::Leaf: return a.leaf_name();
    case Atom::Kind::Pair:
        return json{{"pair", {atom_to_json(a.parts()[0]), atom_to_json(a.parts()[1])}}};
    case Atom::Kind::Triple:
        return json{{"triple",
                     {atom_to_json(a.parts()[0]), atom_to_json(a.parts()[1]),
                      atom_to_json(a.parts()[2])}}};
    case Atom::Kind::Subset: {
        json members = json::array();
        for (const Atom& m : a.parts())
            members.push_back(atom_to_json(m));
        return json{{"subset", std::move(members)}};
    }
    case Atom::Kind::Tag:
        return json{{"tag", {a.tag_index(), atom_to_json(a.parts()[0])}}};
    }
    throw ParseError("unreachable atom kind");
}

Atom atom_from_json(const json& j) {
    if (j.is_string())
        return Atom::leaf(j.get<std::string>());
    if (!j.is_object() || j.size() != 1)
        throw ParseError("an atom is a string or a one-key object, got " + j.dump());
    const auto& [key, body] = *j.items().begin();
    if (key == "pair") {
        if (!body.is_array() || body.size() != 2)
            throw ParseError("\"pair\" takes two atoms");
        return Atom::pair(atom_from_json(body[0]), atom_from_json(body[1]));
    }
    if (key == "triple") {
        if (!body.is_array() || body.size() != 3)
            throw ParseError("\"triple\" takes three atoms");
        return Atom::triple(atom_from_json(body[0]), atom_from_json(body[1]),
                            atom_from_json(body[2]));
    }
    if (key == "subset") {
        if (!body.is_array())
            throw ParseError("\"subset\" takes an array of atoms");
        std::vector<Atom> members;
        for (const json& m : body)
            members.push_back(atom_from_json(m));
        return Atom::subset(std::move(members));
    }
    if (key == "tag") {
        if (!body.is_array() || body.size() != 2 || !body[0].is_number_integer())
            throw ParseError("\"tag\" takes an integer and an atom");
        return Atom::tag(body[0].get<int>(), atom_from_json(body[1]));
    }
    throw ParseError("unknown atom constructor \"" + key + "\"");
}

json set_to_json(const FinSet& s) {
    json out = json::array();
    for (const Atom& a : s)
        out.push_back(atom_to_json(a));
    return out;
}

FinSet set_from_json(const json& j, const char* what) {
    if (!j.is_array())
        throw ParseError(std::string("\"") + what + "\" must be an array");
    std::vector<Atom> elems;
    for (const json& a : j)
        elems.push_back(atom_from_json(a));
    FinSet out(elems);
    if (out.size() != elems.size())
        throw ParseError(std::string("\"") + what + "\" lists an element twice");
    return out;
}

json fn_to_json(const FinFunction& f) {
    json out = json::array();
    const auto& dom = f.domain().elems();
    const auto& vals = f.values();
    for (std::size_t i = 0; i < dom.size(); ++i)
        out.push_back(json::array({atom_to_json(dom[i]), atom_to_json(vals[i])}));
    return out;
}

FinFunction fn_from_json(const json& j, const FinSet& dom, const FinSet& cod,
                         const char* what) {
    if (!j.is_array())
        throw ParseError(std::string("\"") + what + "\" must be an array of [key, value]");
    std::map<Atom, Atom> assign;
    for (const json& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw ParseError(std::string("\"") + what + "\" entries must be [key, value]");
        Atom key = atom_from_json(entry[0]);
        if (!dom.contains(key))
            throw ParseError(std::string("\"") + what + "\" assigns the undeclared element " +
                             key.show());
        if (!assign.emplace(key, atom_from_json(entry[1])).second)
            throw ParseError(std::string("\"") + what + "\" assigns " + key.show() + " twice");
    }
    if (assign.size() != dom.size())
        throw ParseError(std::string("\"") + what + "\" must cover the whole carrier");
    std::vector<Atom> values;
    values.reserve(dom.size());
    for (const Atom& a : dom) {
        const Atom& v = assign.at(a);
        if (!cod.contains(v))
            throw ParseError(std::string("\"") + what + "\" sends " + a.show() +
                             " to the undeclared element " + v.show());
        values.push_back(v);
    }
    return FinFunction(dom, cod, std::move(values));
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

json object_to_json(const GraphObject& x) {
    json out;
    out["kind"] = kind_name(x.kind());
    out["vertices"] = set_to_json(x.vertices());
    switch (x.kind()) {
    case StructureKind::Quiver:
        out["arcs"] = set_to_json(x.quiver().arcs);
        out["src"] = fn_to_json(x.quiver().src);
        out["tgt"] = fn_to_json(x.quiver().tgt);
        break;
    case StructureKind::Digraph:
        out["arcs"] = set_to_json(x.digraph().arcs);
        break;
    case StructureKind::Ssh:
        out["edges"] = set_to_json(x.ssh().edges);
        out["eps"] = fn_to_json(x.ssh().eps);
        break;
    case StructureKind::SSys:
        out["edges"] = set_to_json(x.ssys().edges);
        break;
    case StructureKind::IncHyp:
        out["edges"] = set_to_json(x.inc_hyp().edges);
        out["incidences"] = set_to_json(x.inc_hyp().incidences);
        out["port"] = fn_to_json(x.inc_hyp().port);
        out["attach"] = fn_to_json(x.inc_hyp().attach);
        break;
    case StructureKind::IStr:
        out["edges"] = set_to_json(x.istr().edges);
        out["incidences"] = set_to_json(x.istr().incidences);
        break;
    }
    return out;
}

GraphObject object_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("an object file must hold a JSON object");
    const json& kind_field = field(j, "kind");
    if (!kind_field.is_string())
        throw ParseError("\"kind\" must be a string");
    auto kind = kind_from_name(kind_field.get<std::string>());
    if (!kind)
        throw ParseError("unknown structure kind \"" + kind_field.get<std::string>() + "\"");
    FinSet vertices = set_from_json(field(j, "vertices"), "vertices");
    switch (*kind) {
    case StructureKind::Quiver: {
        FinSet arcs = set_from_json(field(j, "arcs"), "arcs");
        FinFunction src = fn_from_json(field(j, "src"), arcs, vertices, "src");
        FinFunction tgt = fn_from_json(field(j, "tgt"), arcs, vertices, "tgt");
        return GraphObject(Quiver{std::move(vertices), std::move(arcs), std::move(src),
                                  std::move(tgt)});
    }
    case StructureKind::Digraph:
        return GraphObject(Digraph{std::move(vertices), set_from_json(field(j, "arcs"), "arcs")});
    case StructureKind::Ssh: {
        FinSet edges = set_from_json(field(j, "edges"), "edges");
        std::map<Atom, Atom> eps;
        const json& body = field(j, "eps");
        if (!body.is_array())
            throw ParseError("\"eps\" must be an array of [edge, subset]");
        for (const json& entry : body) {
            if (!entry.is_array() || entry.size() != 2)
                throw ParseError("\"eps\" entries must be [edge, subset]");
            Atom key = atom_from_json(entry[0]);
            Atom value = atom_from_json(entry[1]);
            if (!edges.contains(key))
                throw ParseError("\"eps\" assigns the undeclared edge " + key.show());
            if (!value.is(Atom::Kind::Subset))
                throw ParseError("\"eps\" values must be subset atoms");
            if (!eps.emplace(key, value).second)
                throw ParseError("\"eps\" assigns " + key.show() + " twice");
        }
        if (eps.size() != edges.size())
            throw ParseError("\"eps\" must cover every edge");
        return GraphObject(make_ssh(std::move(vertices), edges, [&](const Atom& e) {
            auto it = eps.find(e);
            if (it == eps.end())
                throw ParseError("\"eps\" misses the edge " + e.show());
            return it->second;
        }));
    }
    case StructureKind::SSys:
        return GraphObject(
            SetSystem{std::move(vertices), set_from_json(field(j, "edges"), "edges")});
    case StructureKind::IncHyp: {
        FinSet edges = set_from_json(field(j, "edges"), "edges");
        FinSet incidences = set_from_json(field(j, "incidences"), "incidences");
        FinFunction port = fn_from_json(field(j, "port"), incidences, vertices, "port");
        FinFunction attach = fn_from_json(field(j, "attach"), incidences, edges, "attach");
        return GraphObject(IncidenceHypergraph{std::move(vertices), std::move(edges),
                                               std::move(incidences), std::move(port),
                                               std::move(attach)});
    }
    case StructureKind::IStr:
        return GraphObject(IncidenceStructure{std::move(vertices),
                                              set_from_json(field(j, "edges"), "edges"),
                                              set_from_json(field(j, "incidences"),
                                                            "incidences")});
    }
    throw ParseError("unreachable structure kind");
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("not valid JSON");
    return j;
}

} // namespace

std::string serialize(const GraphObject& x) { return object_to_json(x).dump(2) + "\n"; }

std::string serialize(const Morphism& m) {
    json out;
    out["kind"] = "morphism";
    out["mor_kind"] = mor_kind_name(m.kind());
    out["dom"] = object_to_json(m.dom());
    out["cod"] = object_to_json(m.cod());
    out["vertex_map"] = fn_to_json(m.vertex_map());
    if (m.has_edge_map())
        out["edge_map"] = fn_to_json(m.edge_map());
    if (m.has_incidence_map())
        out["incidence_map"] = fn_to_json(m.incidence_map());
    return out.dump(2) + "\n";
}

GraphObject parse_object(const std::string& text) { return object_from_json(parse_text(text)); }

Morphism parse_morphism(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object())
        throw ParseError("a morphism file must hold a JSON object");
    const json& kind_field = field(j, "kind");
    if (kind_field != "morphism")
        throw ParseError("a morphism file must declare \"kind\": \"morphism\"");
    const json& mk = field(j, "mor_kind");
    if (!mk.is_string())
        throw ParseError("\"mor_kind\" must be a string");
    auto kind = mor_kind_from_name(mk.get<std::string>());
    if (!kind)
        throw ParseError("unknown morphism kind \"" + mk.get<std::string>() + "\"");
    GraphObject dom = object_from_json(field(j, "dom"));
    GraphObject cod = object_from_json(field(j, "cod"));
    if (dom.kind() != object_kind_of(*kind) || cod.kind() != object_kind_of(*kind))
        throw ParseError(std::string("morphism kind ") + mor_kind_name(*kind) +
                         " does not connect the given objects");

    auto edge_carrier = [&](const GraphObject& x) -> const FinSet* {
        switch (*kind) {
        case MorKind::Quiver: return &x.quiver().arcs;
        case MorKind::StrictSsh:
        case MorKind::WeakSsh: return &x.ssh().edges;
        case MorKind::IncHyp: return &x.inc_hyp().edges;
        case MorKind::IStr: return &x.istr().edges;
        default: return nullptr;
        }
    };

    FinFunction vertex =
        fn_from_json(field(j, "vertex_map"), dom.vertices(), cod.vertices(), "vertex_map");
    std::optional<FinFunction> edge, incidence;
    if (const FinSet* ed = edge_carrier(dom))
        edge = fn_from_json(field(j, "edge_map"), *ed, *edge_carrier(cod), "edge_map");
    else if (j.contains("edge_map"))
        throw ParseError(std::string("morphism kind ") + mor_kind_name(*kind) +
                         " does not carry an edge component");
    if (*kind == MorKind::IncHyp)
        incidence = fn_from_json(field(j, "incidence_map"), dom.inc_hyp().incidences,
                                 cod.inc_hyp().incidences, "incidence_map");
    else if (j.contains("incidence_map"))
        throw ParseError(std::string("morphism kind ") + mor_kind_name(*kind) +
                         " does not carry an incidence component");
    try {
        return Morphism::make(*kind, std::move(dom), std::move(cod), std::move(vertex),
                              std::move(edge), std::move(incidence));
    } catch (const Error& e) {
        throw ParseError(std::string("morphism does not fit its carriers: ") + e.what());
    }
}

} // namespace graphcat
