#ifndef GRAPHCAT_ATOM_HPP
#define GRAPHCAT_ATOM_HPP

#include <memory>
#include <string>
#include <vector>

namespace graphcat {

/// Hereditarily finite element usable as a vertex, edge, arc, or incidence
/// name.  An atom is a named leaf or a finite combination of smaller atoms;
/// the nesting lets derived structures name their carriers after the data
/// they were built from (an arc by its endpoint pair, an edge by its
/// endpoint set, a disjoint-union member by side and original name).
///
/// Atoms are immutable values with a total order: first by constructor rank
/// (leaf < pair < triple < subset < tag), then lexicographically inside a
/// rank.  Subset members are kept sorted and duplicate-free, so two subsets
/// are equal exactly when they denote the same set.
class Atom {
public:
    enum class Kind { Leaf, Pair, Triple, Subset, Tag };

    /// Leaf named by an arbitrary string.
    static Atom leaf(std::string name);
    /// Ordered pair (a, b).
    static Atom pair(Atom a, Atom b);
    /// Ordered triple (a, b, c).
    static Atom triple(Atom a, Atom b, Atom c);
    /// Finite set of atoms; members are sorted and deduplicated.
    static Atom subset(std::vector<Atom> members);
    /// Atom marked with a small integer tag, e.g. a coproduct side.
    static Atom tag(int index, Atom inner);

    Kind kind() const { return node_->kind; }
    bool is(Kind k) const { return node_->kind == k; }

    /// Name of a leaf.  Throws on other kinds.
    const std::string& leaf_name() const;
    /// Children of a pair/triple/subset/tag (a tag has one child).
    const std::vector<Atom>& parts() const;
    /// Tag index of a tag atom.
    int tag_index() const;

    /// Compact human-readable rendering: a, (a,b), (a,b,c), {a,b}, 0#a.
    std::string show() const;

    /// Three-way comparison implementing the total order.
    static int compare(const Atom& a, const Atom& b);

    friend bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Atom& a, const Atom& b) { return compare(a, b) != 0; }
    friend bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Atom& a, const Atom& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Atom& a, const Atom& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Atom& a, const Atom& b) { return compare(a, b) >= 0; }

private:
    struct Node {
        Kind kind;
        std::string name;        // Leaf
        int index = 0;           // Tag
        std::vector<Atom> kids;  // Pair/Triple/Subset/Tag
    };

    explicit Atom(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

} // namespace graphcat

#endif
