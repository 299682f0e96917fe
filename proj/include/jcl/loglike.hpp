#pragma once

/// Equivariant group-to-Lie-algebra maps for the three matrix groups the
/// library models, with their exact compatibility checks.
///
///   GLShift       GL_n -> gl_n,  g |-> g - I            (any characteristic)
///   SLTraceShift  SL_n -> sl_n,  g |-> g - (tr g / n) I (requires p not dividing n)
///   Sp4Cayley     Sp_4 -> sp_4,  g |-> (g - g^{-1}) / 2 (requires p != 2)
///
/// The Sp_4 map is the projection of the natural representation onto sp_4
/// along the complement of J-self-adjoint matrices, evaluated in closed
/// form via g^T J g = J.
///
/// For SLTraceShift the fibre over x in sl_n is {x + tI : q_x(t) = 1} with
/// q_x(t) = det(x + t I); the map restricts to an (n:1) covering exactly on
/// the locus where the resultant of p_x = q_x - 1 and its derivative is
/// nonzero, which is what the certificate records.

#include <string>
#include <vector>

#include "jcl/jordan.hpp"
#include "jcl/class_calc.hpp"
#include "jcl/root_system.hpp"
#include "jcl/rational_closure.hpp"
#include "jcl/torus.hpp"

namespace jcl::loglike {

using exactnum::Fp;
using exactnum::Rat;
using exactnum::Matrix;

enum class MapKind { GLShift, SLTraceShift, Sp4Cayley };

std::string map_kind_name(MapKind k);

struct LogLikeMap {
    MapKind kind;
    int n;
    long p; // characteristic, 0 or prime
};

/// Validates the characteristic constraints of each kind.
LogLikeMap make_map(MapKind kind, int n, long p);

namespace detail {
template <class K>
void check_field(const LogLikeMap& map, const Matrix<K>& g) {
    if (static_cast<int>(g.dim()) != map.n)
        throw std::invalid_argument("loglike: matrix dimension does not match the map");
    if (exactnum::characteristic(g.at(0, 0).is_zero() ? g.one_elem() : g.at(0, 0)) != map.p)
        throw std::invalid_argument("loglike: matrix characteristic does not match the map");
}
} // namespace detail

/// Applies the map; validates group membership of g and the Lie algebra
/// membership of the image.
template <class K>
Matrix<K> apply(const LogLikeMap& map, const Matrix<K>& g) {
    detail::check_field(map, g);
    const K one = g.one_elem();
    const Matrix<K> id = Matrix<K>::identity(g.dim(), one);
    switch (map.kind) {
        case MapKind::GLShift: {
            if (g.det().is_zero()) throw std::invalid_argument("GLShift: matrix not invertible");
            return g - id;
        }
        case MapKind::SLTraceShift: {
            if (!(g.det() == one)) throw std::invalid_argument("SLTraceShift: determinant must be 1");
            const K shift = g.trace() / exactnum::from_int_like(one, map.n);
            Matrix<K> x = g - id.scaled(shift);
            if (!x.trace().is_zero()) throw std::logic_error("SLTraceShift: image has nonzero trace");
            return x;
        }
        case MapKind::Sp4Cayley: {
            if (!exactnum::in_symplectic_group(g))
                throw std::invalid_argument("Sp4Cayley: matrix not in Sp_4");
            const auto gi = exactnum::inverse(g);
            const K half = exactnum::from_int_like(one, 2).inv();
            Matrix<K> x = (g - *gi).scaled(half);
            if (!exactnum::in_symplectic_algebra(x))
                throw std::logic_error("Sp4Cayley: image not in sp_4");
            return x;
        }
    }
    throw std::logic_error("apply: unknown map kind");
}

template <class K>
struct EtaleCertificate {
    Matrix<K> x;
    K resultant_value;
    bool in_locus = false;
    int fiber_size = 0; // number of distinct roots of p_x over the closure
};

/// Certificate for the SLTraceShift covering at a trace-zero x.
template <class K>
EtaleCertificate<K> etale_certificate(int n, long p, const Matrix<K>& x) {
    const LogLikeMap map = make_map(MapKind::SLTraceShift, n, p);
    detail::check_field(map, x);
    if (!x.trace().is_zero())
        throw std::invalid_argument("etale_certificate: x must have trace zero");
    // p_x(t) = det(x + tI) - 1 = char_poly(-x)(t) - 1
    using P = exactnum::Poly<K>;
    P px = exactnum::char_poly(-x) - P::constant(x.one_elem());
    const K res = exactnum::resultant(px, px.derivative());
    const int fiber = exactnum::distinct_root_count(px);
    EtaleCertificate<K> cert{x, res, !res.is_zero(), fiber};
    if (cert.in_locus != (cert.fiber_size == n))
        throw std::logic_error("etale_certificate: resultant and fibre size disagree");
    return cert;
}

template <class K>
struct JordanCompatReport {
    exactnum::JordanData<K> source;
    exactnum::JordanData<K> image;
    bool semisimple_parts_match = false;
};

/// Checks that the image of the semisimple part is the semisimple part of
/// the image, exactly. Group and algebra Jordan data are reported.
template <class K>
JordanCompatReport<K> check_jordan_compat(const LogLikeMap& map, const Matrix<K>& g) {
    const Matrix<K> s = exactnum::semisimple_part(g);
    const Matrix<K> x = apply(map, g);
    const Matrix<K> xs = exactnum::semisimple_part(x);
    JordanCompatReport<K> rep{exactnum::jordan_data(g), exactnum::jordan_data(x),
                              apply(map, s) == xs};
    return rep;
}

/// For two given elements: if they have the same Jordan pattern, do their
/// images? (Vacuously true when the source patterns differ.)
template <class K>
bool check_stratification(const LogLikeMap& map, const Matrix<K>& g1, const Matrix<K>& g2) {
    if (map.kind == MapKind::SLTraceShift) {
        for (const Matrix<K>* g : {&g1, &g2}) {
            const Matrix<K> x = apply(map, *g);
            if (!etale_certificate<K>(map.n, map.p, x).in_locus)
                throw std::invalid_argument("check_stratification: image outside the covering locus");
        }
    } else if (map.kind == MapKind::Sp4Cayley) {
        throw std::invalid_argument("check_stratification: locus not modeled for the Sp_4 map");
    }
    const auto p1 = jclass::pattern_of(exactnum::jordan_data(g1), jclass::Mode::group);
    const auto p2 = jclass::pattern_of(exactnum::jordan_data(g2), jclass::Mode::group);
    if (!(p1 == p2)) return true;
    const auto q1 = jclass::pattern_of(exactnum::jordan_data(apply(map, g1)), jclass::Mode::liealg);
    const auto q2 = jclass::pattern_of(exactnum::jordan_data(apply(map, g2)), jclass::Mode::liealg);
    return q1 == q2;
}

/// Induction compatibility for GLShift: inducing the unipotent Jordan types
/// equals inducing the Jordan types of their images under the map. The
/// image types are computed concretely from shifted unipotent blocks.
bool check_induction_compat(const jclass::LeviShape& ls, long p = 101);

struct Sp4Report {
    long p = 0;
    bool lambda_s_zero = false;
    int centralizer_dim = 0;     // of s = diag(1,-1,1,-1) in sp_4
    int orbit_dim = 0;           // 10 - centralizer_dim
    int image_orbit_dim = 0;     // orbit dimension of lambda(s)
    std::string phi_s_type;
    bool phi_s_rationally_closed = false;
    std::string closure_type;    // type of the rational closure of Phi_s
    bool closure_is_full = false;
};

/// The isolated semisimple class of Sp_4 at s = diag(1,-1,1,-1): the map
/// collapses its orbit to the origin while the orbit itself is
/// 4-dimensional, and Phi_s is the long A1+A1, whose minimal Levi closure
/// is all of C2. p must be an odd prime or 0.
Sp4Report sp4_isolated_report(long p);

struct ProbeVerdict {
    bool equal = false;
    std::vector<int> image_subsystem;   // Phi at the image point
    std::vector<int> closure_subsystem; // rational closure of Phi_s
};

/// Is the centralizer subsystem at the image the minimal Levi subsystem
/// containing the centralizer subsystem at s? Evidence gathering only.
ProbeVerdict minimal_levi_probe(const rootcore::RootSystem& rs, const rootcore::TorusElement& s,
                                const rootcore::Subsystem& lambda_image_subsystem);

struct Sp4ProbeSample {
    long a = 0, b = 0; // torus coordinates in F_p
    std::string phi_s_type;
    std::string closure_type;
    std::string image_type;
    bool equal = false;
};

struct Sp4ProbeBatch {
    long p = 0;
    int samples = 0;
    int agreements = 0;
    std::vector<Sp4ProbeSample> records;
};

/// Exhausts the diagonal torus of Sp_4(F_p) (all (a, b) in (F_p^x)^2,
/// realizable angle denominators divide p - 1) and compares the matrix-level
/// centralizer subsystem of lambda(s) with the rational closure of Phi_s.
Sp4ProbeBatch sp4_minimal_levi_batch(long p);

struct Sl2Char2Report {
    bool all_ad_nilpotent_f2 = false;
    bool all_ad_nilpotent_f4 = false;
    int elements_checked_f4 = 0;
    bool centre_is_scalars = false;
    bool g0_equals_centre = false;
    bool level_set_dims_are_0_2 = false;
    std::vector<int> lower_central_series_dims;
    std::string conclusion;
};

/// Exhaustive checks in sl_2 over F_2 and F_4 (the latter from a hardcoded
/// four-element field table): every ad x is nilpotent, the centre is the
/// scalar matrices, and the orbit-dimension level sets are exactly {0, 2}
/// with the zero level set equal to the centre.
Sl2Char2Report sl2_char2_report();

} // namespace jcl::loglike
