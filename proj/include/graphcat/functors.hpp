#ifndef GRAPHCAT_FUNCTORS_HPP
#define GRAPHCAT_FUNCTORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphcat/morphism.hpp"
#include "graphcat/structures.hpp"

namespace graphcat {

/// The structure maps of the library.  Most act on objects and morphisms;
/// gamma, linegraph, and classical_dual act on objects only, and the
/// counterexample runner demonstrates why no morphism action exists.
///
/// Names ending in a category tag follow the operation they perform:
/// simp_* collapse named structure onto plain relations, emb_* name
/// relational structure by its own data, incl_* are subcategory
/// inclusions, del_* discard edges outside a size bound.
enum class FunctorName {
    SimpQ,          // quiver -> digraph: keep the reachability pairs
    EmbQ,           // digraph -> quiver: arcs named by their vertex pairs
    SimpH,          // ssh -> ssys: keep the family of endpoint sets
    EmbH,           // ssys -> ssh: edges named by the subsets themselves
    DelM,           // ssh -> ssh: keep edges with 1 or 2 endpoints
    DelS,           // ssys -> ssys: keep subsets of size 1 or 2
    InclM,          // multigraphs into ssh
    InclGra,        // simple graphs into ssys
    UnderU,         // quiver -> multigraph: forget arc directions
    AssocD,         // multigraph -> quiver: orient each edge both ways
    SimpM,          // multigraph -> simple graph (composite)
    EmbM,           // simple graph -> multigraph (composite)
    SymClosure,     // digraph -> symmetric digraph: add reverses
    SymInterior,    // digraph -> symmetric digraph: keep mutual arcs
    InclSD,         // symmetric digraphs into digraphs
    ZGra,           // simple graph -> symmetric digraph
    ZGraInv,        // symmetric digraph -> simple graph
    EmbR,           // istr -> inc-hyp: incidences named by their pairs
    SimpR,          // inc-hyp -> istr: keep the incidence pairs
    WeakOf,         // ssh with weak maps -> istr (membership incidences)
    WeakFrom,       // istr -> ssh with weak maps (inverse of WeakOf)
    InclWeak,       // strict ssh maps into weak ssh maps
    SimplicialRepl, // ssh -> ssh: edges (e, A) for every A inside e's endpoints
    Gamma,          // ssh -> simple graph: 2-sections (objects only)
    LineGraph,      // ssh -> simple graph: edge intersections (objects only)
    ClassicalDual,  // ssh -> ssh: swap vertex and edge roles (objects only)
    AssocInc,       // quiver -> inc-hyp: two incidences per arc
    CliqueQuiver,   // inc-hyp -> quiver: arcs between co-attached incidences
    CliqueFactored, // ssh -> simple graph (composite through SimplicialRepl)
    SimplicialClosure, // simple graph -> ssh: all cliques as edges
    DualSharp,      // inc-hyp involution: swap ports and attachments
    DualTop,        // istr involution (composite through DualSharp)
    DualDdag,       // ssh-with-weak-maps involution (composite through DualTop)
    IntersectFactored // ssh -> simple graph (composite through DualDdag)
};

struct FunctorInfo {
    FunctorName id;
    const char* name;
    StructureKind dom_kind;
    std::optional<Predicate> dom_pred; // required of inputs
    StructureKind cod_kind;
    std::optional<Predicate> cod_pred; // guaranteed of outputs
    MorKind dom_mor;
    MorKind cod_mor;
    bool object_only;
};

const std::vector<FunctorInfo>& functor_table();
const FunctorInfo& functor_info(FunctorName f);
std::optional<FunctorName> functor_from_name(const std::string& name);

/// Applies the object action.  Throws KindError when the input kind or a
/// required predicate does not match, CapError when a power set blows the
/// configured bound.
GraphObject apply(FunctorName f, const GraphObject& x);

/// Applies the morphism action.  The input kind must equal the table's
/// domain morphism kind; object-only entries throw UnsupportedError.
/// Composite entries are evaluated by running their stages in sequence.
Morphism apply(FunctorName f, const Morphism& m);

/// Applies a pipeline of functors left to right.
GraphObject apply_pipeline(const std::vector<FunctorName>& fs, const GraphObject& x);

/// Checks stage-to-stage compatibility of a pipeline starting from the
/// given input kind; returns the failing stage index, or nullopt when the
/// pipeline type-checks.  Predicates not statically guaranteed by the
/// previous stage are deferred to runtime validation.
std::optional<std::size_t> pipeline_mismatch(const std::vector<FunctorName>& fs,
                                             StructureKind input);

/// Universal morphisms of the twelve adjunctions, one constructor each.
/// Units point from the argument into right-after-left; counits point from
/// left-after-right back into the argument.
Morphism unit_simp_q(const GraphObject& quiver);         // X -> emb_Q simp_Q X
Morphism unit_simp_h(const GraphObject& ssh);            // X -> emb_H simp_H X
Morphism counit_del_m(const GraphObject& ssh);           // incl_M del_M B -> B
Morphism counit_del_s(const GraphObject& ssys);          // incl_Gra del_S B -> B
Morphism counit_assoc_d(const GraphObject& multigraph);  // under_U assoc_D B -> B
Morphism unit_simp_m(const GraphObject& multigraph);     // X -> emb_M simp_M X
Morphism unit_sym_closure(const GraphObject& digraph);   // X -> incl_SD sym_closure X
Morphism counit_sym_interior(const GraphObject& digraph);// incl_SD sym_interior B -> B
Morphism unit_simp_r(const GraphObject& inc_hyp);        // X -> emb_R simp_R X
Morphism counit_simplicial_repl(const GraphObject& ssh); // incl_weak simplicial_repl B -> B
Morphism counit_clique_quiver(const GraphObject& inc_hyp);        // assoc_inc clique_quiver B -> B
Morphism counit_simplicial_closure(const GraphObject& simple_gra);// clique_factored simplicial_closure B -> B

} // namespace graphcat

#endif
