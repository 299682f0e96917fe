#pragma once

/// Full Weyl group enumeration as permutations of the root indices,
/// generated by the simple reflections. Gated to rank <= 4 (used by the
/// exhaustive base-search oracles); the table is memoized per Cartan matrix
/// behind a lock, so concurrent callers share one copy.

#include <memory>
#include <vector>

#include "jcl/root_system.hpp"

namespace jcl::rootcore {

using WeylPerm = std::vector<int>; // perm[i] = image root index of roots[i]

std::shared_ptr<const std::vector<WeylPerm>> weyl_elements(const RootSystem& rs);

/// Applies a Weyl permutation to a set of root indices.
std::vector<int> apply_weyl(const WeylPerm& w, const std::vector<int>& idx);

} // namespace jcl::rootcore
