#pragma once

/// Enumeration of centralizer subsystems ("standard pseudo-Levis") by
/// iterated Borel-de Siebenthal steps: starting from the full system,
/// extend the base of each subsystem by the lowest root of every component
/// and close arbitrary subsets of the extended base, recursing on anything
/// new. Results are deduplicated by member set. Every subsystem produced
/// arises as the centralizer of a multiplicative torus element; the family
/// is complete up to Weyl conjugacy.

#include <string>
#include <vector>

#include "jcl/root_system.hpp"

namespace jcl::rootcore {

struct PseudoLevi {
    Subsystem sub;
    std::string type_decomposition;
    bool rationally_closed = false;
};

/// Rank capped at 8.
std::vector<PseudoLevi> pseudo_levis(const RootSystem& rs);

} // namespace jcl::rootcore
