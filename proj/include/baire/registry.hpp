#pragma once

#include <array>

namespace baire::registry {

/// One CLI verb per wire-reachable operation. The CLI asserts at startup
/// that every registered verb exists as a subcommand; tests check the
/// mapping is one-to-one and that the recorded golden invocations cover
/// every verb.
struct VerbBinding {
  const char* verb;
  const char* operation;
};

inline constexpr std::array<VerbBinding, 11> kVerbs{{
    {"eval", "tree.eval"},
    {"eval-k1", "nbhd.eval_k1"},
    {"convert", "cantor.tree_from_uniform"},
    {"check-k0", "nbhd.check_k0"},
    {"is-bar", "bars.is_bar"},
    {"fan", "cantor.fan_bound"},
    {"trim", "tree.trim"},
    {"saturate", "nbhd.saturate"},
    {"synthesize", "bars.tree_from_cbar"},
    {"demo-llpo", "bars.llpo_gadget"},
    {"roundtrip", "wire.canonicalize"},
}};

}  // namespace baire::registry
