#pragma once

#include "baire/seq.hpp"

namespace baire::config {

inline constexpr Nat kDefaultDepthCap = 64;

/// Construction-time bound on tree depth. Guards deserialized input; never
/// binding for desk-scale objects.
Nat depth_cap();
void set_depth_cap(Nat cap);

}  // namespace baire::config
