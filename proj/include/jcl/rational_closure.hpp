#pragma once

/// Rational closure of root subsystems: span_Q(Psi) intersected with the
/// ambient roots. A subsystem equals its rational closure exactly when it
/// is the root system of a Levi subgroup (it then admits a base that is
/// conjugate into the simple roots).

#include "jcl/root_system.hpp"

namespace jcl::rootcore {

Subsystem rational_closure(const Subsystem& psi);
bool is_rationally_closed(const Subsystem& psi);

} // namespace jcl::rootcore
