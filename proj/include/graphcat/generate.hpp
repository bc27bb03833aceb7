#ifndef GRAPHCAT_GENERATE_HPP
#define GRAPHCAT_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "graphcat/morphism.hpp"

namespace graphcat {

/// Deterministic random source.  All draws go through below(), which uses
/// plain modulo so a given seed produces the same stream on every
/// platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(raw() % n); }

    bool coin() { return below(2) == 1; }

    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs[below(xs.size())];
    }

private:
    std::mt19937_64 engine_;
};

/// Size bounds for generated instances.
struct GenBounds {
    std::size_t vertices = 6;
    std::size_t edges = 6;
    std::size_t incidences = 12;
};

/// Random object of the given kind; when pred is set the result satisfies
/// it by construction.
GraphObject random_object(Rng& rng, StructureKind kind, std::optional<Predicate> pred = {},
                          const GenBounds& bounds = {});

/// Random valid morphism out of a fixed domain; the codomain is built
/// forward from the domain (image structure, optional merges, junk that
/// respects cod_pred).
Morphism random_morphism_from(Rng& rng, MorKind kind, const GraphObject& dom,
                              std::optional<Predicate> cod_pred = {},
                              const GenBounds& bounds = {});

/// Random valid morphism into a fixed codomain; the domain is built
/// backward by choosing preimages, and satisfies dom_pred when set.
Morphism random_morphism_into(Rng& rng, MorKind kind, const GraphObject& cod,
                              std::optional<Predicate> dom_pred = {},
                              const GenBounds& bounds = {});

/// Random valid morphism with both endpoints fresh.
Morphism random_morphism(Rng& rng, MorKind kind, std::optional<Predicate> pred = {},
                         const GenBounds& bounds = {});

/// f and then g, sharing the middle object exactly.
std::pair<Morphism, Morphism> random_composable_pair(Rng& rng, MorKind kind,
                                                     std::optional<Predicate> pred = {},
                                                     const GenBounds& bounds = {});

/// Arbitrary function between carriers; no structure preservation at all.
FinFunction random_function(Rng& rng, const FinSet& dom, const FinSet& cod);

} // namespace graphcat

#endif
