#pragma once

#include <cstdint>

namespace shiftlab {

/// Process-wide resource caps. Operations take explicit caps where it
/// matters; these are the defaults they fall back to, and the knob the
/// CLI --budget flag / SHIFTLAB_BUDGET variable turns.
struct ResourceCaps {
    std::size_t lattice_cap = 200000;      // lcm-lattice elements
    std::uint64_t search_nodes = 1000000;  // linear-quotients backtracking nodes
    std::size_t component_cap = 100000;    // irreducible components
};

inline ResourceCaps& resource_caps() {
    static ResourceCaps caps;
    return caps;
}

} // namespace shiftlab
