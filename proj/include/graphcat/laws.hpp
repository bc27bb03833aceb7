#ifndef GRAPHCAT_LAWS_HPP
#define GRAPHCAT_LAWS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphcat/functors.hpp"
#include "graphcat/hom_search.hpp"
#include "graphcat/morphism.hpp"

namespace graphcat {

/// Shared knobs for the executable laws.  `cases` bounds the random
/// instances per law; `caps` bounds generated inputs (searches over
/// constructed images get a wider internal allowance); the budget decides
/// when a hom-set is small enough to cross-check by full enumeration.
struct LawOptions {
    std::uint64_t seed = 0;
    std::size_t cases = 100;
    Caps caps{};
    std::uint64_t enumeration_budget = 2000;
};

struct CheckReport {
    std::string law;
    bool passed = true;
    std::size_t cases = 0;
    std::vector<std::string> notes;
    std::vector<std::string> failures;
};

/// One adjunction L -| R together with the data needed to state its
/// universal property: the two categories (object kind, refinement,
/// morphism kind per side) and whether the property is phrased through the
/// unit (maps X -> R B factor through L) or the counit (maps L X -> B
/// factor through R).
struct AdjunctionInfo {
    int id;
    const char* name;  // "left-|right" in registry spelling
    FunctorName left;
    FunctorName right;
    bool unit_based;
    StructureKind a_kind;
    std::optional<Predicate> a_pred;
    MorKind a_mor;
    StructureKind b_kind;
    std::optional<Predicate> b_pred;
    MorKind b_mor;
};

const std::vector<AdjunctionInfo>& adjunction_table();
const AdjunctionInfo& adjunction(int id);
const AdjunctionInfo* find_adjunction(const std::string& name);

/// Universal morphism at an object of the relevant side.
Morphism adjunction_unit(const AdjunctionInfo& a, const GraphObject& x);
Morphism adjunction_counit(const AdjunctionInfo& a, const GraphObject& b);

/// The factor morphism the universal property asserts to be unique.
/// Unit-based: m : X -> R(B) yields h : L(X) -> B with R(h) . unit = m.
/// Counit-based: m : L(X) -> B yields h : X -> R(B) with counit . L(h) = m.
Morphism adjunction_factor(const AdjunctionInfo& a, const GraphObject& x, const GraphObject& b,
                           const Morphism& m);

/// Individual checks.  Each runs a deterministic instance stream from
/// LawOptions and reports counterwitnesses instead of throwing.
CheckReport check_functor_laws(FunctorName f, const LawOptions& opt = {});
CheckReport check_adjunction_property(const AdjunctionInfo& a, const LawOptions& opt = {});
CheckReport check_adjunction_bijection(const AdjunctionInfo& a, const LawOptions& opt = {});
CheckReport check_adjunction(const AdjunctionInfo& a, const LawOptions& opt = {});
CheckReport check_equality(const std::string& law, const LawOptions& opt = {});
CheckReport check_natural_iso(const std::string& law, const LawOptions& opt = {});
CheckReport check_involution(const std::string& law, const LawOptions& opt = {});
CheckReport check_action_agreement(const std::string& law, const LawOptions& opt = {});
CheckReport check_lax_equivalence(const LawOptions& opt = {});
CheckReport run_counterexample(const std::string& law);

/// Name-driven surface used by the CLI: every law has a stable id
/// ("FUNC(simp_q)", "ADJ(under_u-|assoc_d)", "EQ3", "CX-GAMMA", ...).
std::vector<std::string> law_names();
bool is_law_name(const std::string& law);
CheckReport run_law(const std::string& law, const LawOptions& opt = {});

/// Named groups of laws; "all" covers the whole registry.
std::vector<std::string> suite_names();
std::vector<std::string> suite_laws(const std::string& suite);
std::vector<CheckReport> run_suite(const std::string& suite, const LawOptions& opt = {});

} // namespace graphcat

#endif
