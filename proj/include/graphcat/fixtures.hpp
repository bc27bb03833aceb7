#ifndef GRAPHCAT_FIXTURES_HPP
#define GRAPHCAT_FIXTURES_HPP

#include "graphcat/morphism.hpp"
#include "graphcat/structures.hpp"

/// Small named objects used across tests and the counterexample runner.
namespace graphcat::fixtures {

/// Vertices 0,1,2 joined by a single 3-element edge e.
GraphObject one_three_edge();
/// Vertices 0,1 joined by a single 2-element edge f.
GraphObject one_two_edge();

/// Path of two edges: e on {0,1}, f on {1,2}.
GraphObject two_edge_path();
/// Single edge g on {0,1}.
GraphObject single_edge();

/// Vertices v,w,x with e on {v,x} and f on {w,x}.
GraphObject shared_endpoint_pair();
/// Vertices w,x with parallel edges e,f both on {w,x}.
GraphObject parallel_two_edges();

/// One vertex x and an edge e with no endpoints.
GraphObject empty_endpoint_edge();
/// One vertex x and a 1-edge f on {x}.
GraphObject one_loop_edge();

/// Two parallel arcs a1,a2 from u to w.
GraphObject parallel_arc_quiver();
/// One vertex with a single loop arc.
GraphObject loop_quiver();
/// Two vertices with the single arc (u,w).
GraphObject one_arc_digraph();

} // namespace graphcat::fixtures

#endif
