#pragma once

/// Semisimple torus elements in exact coordinates dual to the simple roots.
///
/// Multiplicative mode: theta in (Q/Z)^rank where theta_i is the "angle" of
/// alpha_i(s), so a root alpha = sum c_i alpha_i satisfies alpha(s) = 1 iff
/// sum c_i theta_i is an integer. Denominators must be coprime to p, which
/// is exactly the condition for such an element to exist over an
/// algebraically closed field of characteristic p.
///
/// Additive mode: x in Q^rank with alpha_i(x) = x_i; a root vanishes at x
/// iff sum c_i x_i = 0, computed mod p when p > 0.

#include <vector>

#include "jcl/field.hpp"
#include "jcl/root_system.hpp"

namespace jcl::rootcore {

enum class TorusMode { additive, multiplicative };

struct TorusElement {
    TorusMode mode;
    std::vector<exactnum::Rat> coords;
    long p = 0;

    TorusElement(TorusMode mode, std::vector<exactnum::Rat> coords, long p);
};

/// The subsystem of roots annihilated by s (the roots of the connected
/// centralizer). Always negation-closed and additively closed.
Subsystem centralizer_subsystem(const RootSystem& rs, const TorusElement& s);

} // namespace jcl::rootcore
