#ifndef GRAPHCAT_DOT_HPP
#define GRAPHCAT_DOT_HPP

#include <string>

#include "graphcat/structures.hpp"

namespace graphcat {

/// Graphviz DOT text for an object.  Quivers and digraphs come out as
/// directed graphs; set-system kinds come out undirected, drawing two-point
/// edges as plain lines, one-point edges as loops, and every other arity as
/// a box node wired to its endpoints; incidence kinds come out as bipartite
/// drawings with box nodes for edges.  Output is deterministic: equal
/// objects yield byte-identical text.
std::string to_dot(const GraphObject& x);

} // namespace graphcat

#endif
