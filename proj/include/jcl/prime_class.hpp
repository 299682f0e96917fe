#pragma once

/// Good / very good / torsion / bad verdicts for a prime relative to a root
/// system, combined over the irreducible components. The torsion flag is
/// root-system-level unless the caller supplies the order of the fundamental
/// group, in which case primes dividing that order are torsion as well.

#include <optional>

#include "jcl/root_system.hpp"

namespace jcl::rootcore {

struct PrimeVerdict {
    long p = 0;
    bool good = false;
    bool very_good = false;
    bool torsion = false;
    bool bad = false;
    std::optional<long> fundamental_group_order;
};

PrimeVerdict classify_prime(const RootSystem& rs, long p,
                            std::optional<long> fundamental_group_order = std::nullopt);

bool is_prime(long p);

} // namespace jcl::rootcore
