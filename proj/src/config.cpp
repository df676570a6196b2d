#include "baire/config.hpp"

#include <atomic>

namespace baire::config {

namespace {
std::atomic<Nat> g_depth_cap{kDefaultDepthCap};
}

Nat depth_cap() { return g_depth_cap.load(std::memory_order_relaxed); }

void set_depth_cap(Nat cap) { g_depth_cap.store(cap, std::memory_order_relaxed); }

}  // namespace baire::config
