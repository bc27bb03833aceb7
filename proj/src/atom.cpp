#include "graphcat/atom.hpp"

#include <algorithm>
#include <utility>

#include "graphcat/errors.hpp"

namespace graphcat {

namespace {

int rank_of(Atom::Kind k) {
    switch (k) {
    case Atom::Kind::Leaf: return 0;
    case Atom::Kind::Pair: return 1;
    case Atom::Kind::Triple: return 2;
    case Atom::Kind::Subset: return 3;
    case Atom::Kind::Tag: return 4;
    }
    return 5;
}

} // namespace

Atom Atom::leaf(std::string name) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Leaf;
    node->name = std::move(name);
    return Atom(std::move(node));
}

Atom Atom::pair(Atom a, Atom b) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Pair;
    node->kids = {std::move(a), std::move(b)};
    return Atom(std::move(node));
}

Atom Atom::triple(Atom a, Atom b, Atom c) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Triple;
    node->kids = {std::move(a), std::move(b), std::move(c)};
    return Atom(std::move(node));
}

Atom Atom::subset(std::vector<Atom> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto node = std::make_shared<Node>();
    node->kind = Kind::Subset;
    node->kids = std::move(members);
    return Atom(std::move(node));
}

Atom Atom::tag(int index, Atom inner) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Tag;
    node->index = index;
    node->kids = {std::move(inner)};
    return Atom(std::move(node));
}

const std::string& Atom::leaf_name() const {
    if (node_->kind != Kind::Leaf)
        throw KindError("leaf_name on non-leaf atom " + show());
    return node_->name;
}

const std::vector<Atom>& Atom::parts() const {
    if (node_->kind == Kind::Leaf)
        throw KindError("parts on leaf atom " + show());
    return node_->kids;
}

int Atom::tag_index() const {
    if (node_->kind != Kind::Tag)
        throw KindError("tag_index on non-tag atom " + show());
    return node_->index;
}

int Atom::compare(const Atom& a, const Atom& b) {
    if (a.node_ == b.node_)
        return 0;
    int ra = rank_of(a.kind()), rb = rank_of(b.kind());
    if (ra != rb)
        return ra < rb ? -1 : 1;
    if (a.kind() == Kind::Leaf)
        return a.node_->name.compare(b.node_->name) < 0   ? -1
               : a.node_->name.compare(b.node_->name) > 0 ? 1
                                                          : 0;
    if (a.kind() == Kind::Tag && a.node_->index != b.node_->index)
        return a.node_->index < b.node_->index ? -1 : 1;
    const auto& xs = a.node_->kids;
    const auto& ys = b.node_->kids;
    size_t n = std::min(xs.size(), ys.size());
    for (size_t i = 0; i < n; ++i) {
        int c = compare(xs[i], ys[i]);
        if (c != 0)
            return c;
    }
    if (xs.size() != ys.size())
        return xs.size() < ys.size() ? -1 : 1;
    return 0;
}

std::string Atom::show() const {
    switch (kind()) {
    case Kind::Leaf:
        return node_->name;
    case Kind::Pair:
        return "(" + node_->kids[0].show() + "," + node_->kids[1].show() + ")";
    case Kind::Triple:
        return "(" + node_->kids[0].show() + "," + node_->kids[1].show() + "," +
               node_->kids[2].show() + ")";
    case Kind::Subset: {
        std::string out = "{";
        for (size_t i = 0; i < node_->kids.size(); ++i) {
            if (i)
                out += ",";
            out += node_->kids[i].show();
        }
        return out + "}";
    }
    case Kind::Tag:
        return std::to_string(node_->index) + "#" + node_->kids[0].show();
    }
    return "?";
}

} // namespace graphcat
