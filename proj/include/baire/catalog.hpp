#pragma once

#include <optional>
#include <string>

#include "baire/cantor.hpp"
#include "baire/nbhd.hpp"

namespace baire::catalog {

/// The fixed catalog of pointwise functions the CLI can reference by name.
/// Each carries its modulus witness.
PointwiseFn head();          // s(0), modulus 1
PointwiseFn sum2();          // s(0) + s(1), modulus 2
PointwiseFn constant(Nat k); // k, modulus 0
PointwiseFn index(Nat i);    // s(i), modulus i + 1

/// Named predicate rules for bar checks and fan bounds:
///   "true" | "false" | "len-ge-N" | "starts-with-V" | "contains-V" |
///   "contains1-or-len4"
/// Returns nullopt for unknown names.
std::optional<DetachablePredicate> predicate(const std::string& rule);

}  // namespace baire::catalog
