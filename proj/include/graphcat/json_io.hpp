#ifndef GRAPHCAT_JSON_IO_HPP
#define GRAPHCAT_JSON_IO_HPP

#include <string>

#include "graphcat/morphism.hpp"

namespace graphcat {

/// JSON text for an object.  The layout carries a "kind" discriminator,
/// carriers as arrays of atoms, and assignments (src/tgt/eps/port/attach)
/// as [[key, value], ...] pairs in sorted key order.  Atoms are strings
/// for leaves and {"pair":[...]}, {"triple":[...]}, {"subset":[...]} or
/// {"tag":[n, ...]} for structured names, so constructed elements
/// round-trip exactly.
std::string serialize(const GraphObject& x);

/// JSON text for a morphism: {"kind":"morphism", "mor_kind":..., "dom":...,
/// "cod":..., components as [[key, value], ...] in sorted key order}.
std::string serialize(const Morphism& m);

/// Inverse of serialize on objects.  Throws ParseError when the text is
/// not JSON or does not describe a well-shaped object.
GraphObject parse_object(const std::string& text);

/// Inverse of serialize on morphisms.
Morphism parse_morphism(const std::string& text);

} // namespace graphcat

#endif
