#include "jcl/loglike.hpp"

#include <algorithm>

namespace jcl::loglike {

using exactnum::Ambient;
using exactnum::matrix_centralizer_dim;
using jclass::Partition;

std::string map_kind_name(MapKind k) {
    switch (k) {
        case MapKind::GLShift: return "gl-shift";
        case MapKind::SLTraceShift: return "sl-trace-shift";
        case MapKind::Sp4Cayley: return "sp4-cayley";
    }
    return "?";
}

LogLikeMap make_map(MapKind kind, int n, long p) {
    if (n < 1) throw std::invalid_argument("make_map: dimension must be positive");
    if (p < 0 || (p > 0 && !rootcore::is_prime(p)))
        throw std::invalid_argument("make_map: characteristic must be 0 or prime");
    if (kind == MapKind::SLTraceShift && p > 0 && n % p == 0)
        throw std::invalid_argument("make_map: the trace shift needs p not dividing n");
    if (kind == MapKind::Sp4Cayley && (n != 4 || p == 2))
        throw std::invalid_argument("make_map: the Sp_4 map needs n = 4 and p != 2");
    return LogLikeMap{kind, n, p};
}

bool check_induction_compat(const jclass::LeviShape& ls, long p) {
    if (p <= 0 || !rootcore::is_prime(p))
        throw std::invalid_argument("check_induction_compat: p must be prime");
    const std::uint32_t pp = static_cast<std::uint32_t>(p);
    std::vector<Partition> image_parts;
    for (std::size_t i = 0; i < ls.blocks.size(); ++i) {
        // unipotent with Jordan type ls.parts[i], as a concrete matrix
        exactnum::JordanData<Fp> jd;
        jd.n = static_cast<std::size_t>(ls.blocks[i]);
        jd.blocks = {{Fp::one(pp), ls.parts[i].parts()}};
        const auto u = exactnum::matrix_from_jordan(jd, Fp::zero(pp));
        const LogLikeMap m = make_map(MapKind::GLShift, ls.blocks[i], p);
        const auto x = apply(m, u);
        const auto xjd = exactnum::jordan_data(x);
        if (xjd.blocks.size() != 1 || !xjd.blocks[0].first.is_zero())
            throw std::logic_error("check_induction_compat: image of a unipotent is not nilpotent");
        image_parts.emplace_back(xjd.blocks[0].second);
    }
    const Partition lhs = jclass::induce(ls);
    const Partition rhs = jclass::induce(jclass::LeviShape(ls.blocks, image_parts));
    return lhs == rhs;
}

namespace {

template <class K>
Sp4Report sp4_report_impl(long p, const K& one) {
    Sp4Report rep;
    rep.p = p;
    const K zero = zero_like(one);
    Matrix<K> s(4, zero);
    s.at(0, 0) = one;
    s.at(1, 1) = zero - one;
    s.at(2, 2) = one;
    s.at(3, 3) = zero - one;
    const LogLikeMap map = make_map(MapKind::Sp4Cayley, 4, p);
    const Matrix<K> x = apply(map, s);
    rep.lambda_s_zero = x.is_zero();
    rep.centralizer_dim = matrix_centralizer_dim(s, Ambient::sp);
    rep.orbit_dim = 10 - rep.centralizer_dim;
    rep.image_orbit_dim = 10 - matrix_centralizer_dim(x, Ambient::sp);
    const rootcore::RootSystem c2 = rootcore::build_root_system('C', 2);
    // diag(1,-1,1,-1) has alpha_1(s) = -1, alpha_2(s) = 1: angles (1/2, 0)
    const rootcore::TorusElement theta(rootcore::TorusMode::multiplicative,
                                       {Rat(1, 2), Rat(0)}, p);
    const rootcore::Subsystem phi_s = rootcore::centralizer_subsystem(c2, theta);
    rep.phi_s_type = rootcore::subsystem_type(phi_s);
    rep.phi_s_rationally_closed = rootcore::is_rationally_closed(phi_s);
    const rootcore::Subsystem closure = rootcore::rational_closure(phi_s);
    rep.closure_type = rootcore::subsystem_type(closure);
    rep.closure_is_full = closure.members.size() == c2.size();
    return rep;
}

} // namespace

Sp4Report sp4_isolated_report(long p) {
    if (p == 2) throw std::invalid_argument("sp4_isolated_report: p must differ from 2");
    if (p == 0) return sp4_report_impl<Rat>(0, Rat(1));
    if (!rootcore::is_prime(p)) throw std::invalid_argument("sp4_isolated_report: p must be prime");
    return sp4_report_impl<Fp>(p, Fp::one(static_cast<std::uint32_t>(p)));
}

ProbeVerdict minimal_levi_probe(const rootcore::RootSystem& rs, const rootcore::TorusElement& s,
                                const rootcore::Subsystem& lambda_image_subsystem) {
    ProbeVerdict v;
    const rootcore::Subsystem closure =
        rootcore::rational_closure(rootcore::centralizer_subsystem(rs, s));
    v.image_subsystem = lambda_image_subsystem.members;
    v.closure_subsystem = closure.members;
    v.equal = v.image_subsystem == v.closure_subsystem;
    return v;
}

namespace {

long discrete_log(long g, long a, long p) {
    long x = 1;
    for (long k = 0; k < p - 1; ++k) {
        if (x == a) return k;
        x = x * g % p;
    }
    throw std::logic_error("discrete_log: generator did not generate");
}

long primitive_root(long p) {
    for (long g = 2; g < p; ++g) {
        long x = g;
        bool ok = true;
        for (long k = 1; k < p - 2; ++k) {
            x = x * g % p;
            if (x == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

} // namespace

Sp4ProbeBatch sp4_minimal_levi_batch(long p) {
    if (p == 2 || !rootcore::is_prime(p))
        throw std::invalid_argument("sp4_minimal_levi_batch: p must be an odd prime");
    Sp4ProbeBatch batch;
    batch.p = p;
    const std::uint32_t pp = static_cast<std::uint32_t>(p);
    const rootcore::RootSystem c2 = rootcore::build_root_system('C', 2);
    const LogLikeMap map = make_map(MapKind::Sp4Cayley, 4, p);
    const long g = p == 3 ? 2 : primitive_root(p);
    // epsilon-coordinates of each root: c1 alpha_1 + c2 alpha_2 = (c1, 2 c2 - c1)
    std::vector<std::pair<long, long>> eps;
    for (const auto& r : c2.roots) eps.emplace_back(r[0], 2L * r[1] - r[0]);
    for (long a = 1; a < p; ++a)
        for (long b = 1; b < p; ++b) {
            Sp4ProbeSample rec;
            rec.a = a;
            rec.b = b;
            const Fp fa(a, pp), fb(b, pp);
            Matrix<Fp> s(4, Fp::zero(pp));
            s.at(0, 0) = fa;
            s.at(1, 1) = fb;
            s.at(2, 2) = fa.inv();
            s.at(3, 3) = fb.inv();
            const Matrix<Fp> x = apply(map, s);
            // matrix-level Phi_s and Phi_{lambda(s)}
            std::vector<int> phi_s_idx, phi_x_idx;
            auto powz = [&](const Fp& base, long e) {
                return e >= 0 ? base.pow(static_cast<std::uint64_t>(e))
                              : base.inv().pow(static_cast<std::uint64_t>(-e));
            };
            for (std::size_t i = 0; i < c2.size(); ++i) {
                const auto [u, v] = eps[i];
                if (powz(fa, u) * powz(fb, v) == Fp::one(pp))
                    phi_s_idx.push_back(static_cast<int>(i));
                const Fp dval = exactnum::from_int_like(Fp::zero(pp), u) * x.at(0, 0) +
                                exactnum::from_int_like(Fp::zero(pp), v) * x.at(1, 1);
                if (dval.is_zero()) phi_x_idx.push_back(static_cast<int>(i));
            }
            const rootcore::Subsystem phi_s(c2, phi_s_idx);
            const rootcore::Subsystem phi_x(c2, phi_x_idx);
            // cross-check the multiplicative subsystem against the abstract
            // torus coordinates (angles k/(p-1))
            const long ka = discrete_log(g, a, p), kb = discrete_log(g, b, p);
            const rootcore::TorusElement theta(
                rootcore::TorusMode::multiplicative,
                {Rat(ka - kb, p - 1), Rat(2 * kb, p - 1)}, p);
            if (!(rootcore::centralizer_subsystem(c2, theta).members == phi_s.members))
                throw std::logic_error("sp4_minimal_levi_batch: matrix and torus subsystems differ");
            // cross-check |Phi_{lambda(s)}| against the sp_4 commutant kernel
            if (matrix_centralizer_dim(x, Ambient::sp) != 2 + static_cast<int>(phi_x_idx.size()))
                throw std::logic_error("sp4_minimal_levi_batch: kernel dimension mismatch");
            const ProbeVerdict v = minimal_levi_probe(c2, theta, phi_x);
            rec.phi_s_type = rootcore::subsystem_type(phi_s);
            rec.closure_type = rootcore::subsystem_type(rootcore::Subsystem(c2, v.closure_subsystem));
            rec.image_type = rootcore::subsystem_type(phi_x);
            rec.equal = v.equal;
            batch.records.push_back(std::move(rec));
            ++batch.samples;
            if (batch.records.back().equal) ++batch.agreements;
        }
    return batch;
}

// ---------------------------------------------------------------------------
// sl_2 in characteristic 2, over F_2 and a hardcoded F_4 table.

namespace {

// elements 0, 1, w, w+1 encoded as 0..3; addition is xor
struct F4 {
    unsigned v = 0;
    friend F4 operator+(F4 x, F4 y) { return F4{x.v ^ y.v}; }
    friend F4 operator*(F4 x, F4 y) {
        static const unsigned tab[4][4] = {
            {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
        return F4{tab[x.v][y.v]};
    }
    bool operator==(const F4& o) const { return v == o.v; }
    bool is_zero() const { return v == 0; }
};

struct M2 {
    F4 a, b, c, d; // [[a, b], [c, d]]
    friend M2 operator*(const M2& x, const M2& y) {
        return M2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                  x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend M2 operator+(const M2& x, const M2& y) {
        return M2{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    bool operator==(const M2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    M2 bracket(const M2& y) const { return *this * y + y * *this; } // char 2
};

std::vector<M2> sl2_elements(unsigned field_size) {
    std::vector<M2> out;
    for (unsigned a = 0; a < field_size; ++a)
        for (unsigned b = 0; b < field_size; ++b)
            for (unsigned c = 0; c < field_size; ++c)
                out.push_back(M2{F4{a}, F4{b}, F4{c}, F4{a}}); // trace 2a = 0
    return out;
}

// coordinates of a trace-zero matrix in the basis (E12, E21, I)
std::array<F4, 3> coords(const M2& m) { return {m.b, m.c, m.a}; }

int span_dim(std::vector<std::array<F4, 3>> vecs) {
    int rank = 0;
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < vecs.size() && vecs[piv][col].is_zero()) ++piv;
        if (piv >= vecs.size()) continue;
        std::swap(vecs[piv], vecs[static_cast<std::size_t>(rank)]);
        // scale pivot row to 1 (field inverse via the multiplication table)
        F4 pv = vecs[static_cast<std::size_t>(rank)][col];
        F4 inv{0};
        for (unsigned k = 1; k < 4; ++k)
            if ((pv * F4{k}).v == 1) inv = F4{k};
        for (auto& x : vecs[static_cast<std::size_t>(rank)]) x = x * inv;
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || vecs[i][col].is_zero()) continue;
            const F4 f = vecs[i][col];
            for (std::size_t k = 0; k < 3; ++k)
                vecs[i][k] = vecs[i][k] + f * vecs[static_cast<std::size_t>(rank)][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace

Sl2Char2Report sl2_char2_report() {
    Sl2Char2Report rep;
    for (unsigned field_size : {2u, 4u}) {
        const auto elems = sl2_elements(field_size);
        // group elements of SL_2 over the same field
        std::vector<M2> group;
        for (unsigned a = 0; a < field_size; ++a)
            for (unsigned b = 0; b < field_size; ++b)
                for (unsigned c = 0; c < field_size; ++c)
                    for (unsigned d = 0; d < field_size; ++d) {
                        const M2 g{F4{a}, F4{b}, F4{c}, F4{d}};
                        if ((g.a * g.d + g.b * g.c).v == 1) group.push_back(g); // det = 1 (char 2)
                    }
        bool all_nilpotent = true;
        bool centre_ok = true, g0_ok = true, levels_ok = true;
        for (const M2& x : elems) {
            // ad x in the basis (E12, E21, I): ad x (E12) = c I, ad x (E21) = b I
            // so (ad x)^2 = 0; verify by brute force anyway
            bool nil = true;
            for (const M2& y : elems) {
                const M2 one_step = x.bracket(y);
                const M2 two_step = x.bracket(one_step);
                const M2 three_step = x.bracket(two_step);
                if (!three_step.is_zero()) nil = false;
            }
            all_nilpotent = all_nilpotent && nil;
            const bool central_form = x.b.is_zero() && x.c.is_zero(); // scalar matrix
            bool commutes_with_all = true;
            for (const M2& y : elems)
                if (!x.bracket(y).is_zero()) commutes_with_all = false;
            if (commutes_with_all != central_form) centre_ok = false;
            // group centralizer order determines the orbit dimension:
            // the full group (dim 3) for central x, a one-parameter unipotent
            // (|F| points, dim 1) for the rest
            std::size_t stab = 0;
            for (const M2& g : group)
                if (g * x == x * g) ++stab;
            const int orbit_dim = central_form ? 0 : 2;
            if (central_form && stab != group.size()) levels_ok = false;
            if (!central_form && stab != field_size) levels_ok = false;
            if ((orbit_dim == 0) != central_form) g0_ok = false;
        }
        if (field_size == 2) {
            rep.all_ad_nilpotent_f2 = all_nilpotent;
        } else {
            rep.all_ad_nilpotent_f4 = all_nilpotent;
            rep.elements_checked_f4 = static_cast<int>(elems.size());
            rep.centre_is_scalars = centre_ok;
            rep.g0_equals_centre = g0_ok;
            rep.level_set_dims_are_0_2 = levels_ok;
            // lower central series dimensions over F_4
            std::vector<std::array<F4, 3>> layer;
            for (const M2& x : elems)
                for (const M2& y : elems) layer.push_back(coords(x.bracket(y)));
            rep.lower_central_series_dims = {3, span_dim(layer)};
            std::vector<std::array<F4, 3>> next;
            for (const M2& x : elems)
                for (const M2& y : elems) {
                    const M2 z = x.bracket(y);
                    for (const M2& w : elems) next.push_back(coords(w.bracket(z)));
                }
            rep.lower_central_series_dims.push_back(span_dim(next));
        }
    }
    rep.conclusion =
        "sl_2 in characteristic 2 is a nilpotent Lie algebra whose orbit level sets "
        "(the scalar line and its complement) are smooth, while the closure of the "
        "regular unipotent class of SL_2 is the unipotent variety, singular at the "
        "identity; no equivariant map of the kind modeled here exists for SL_2 when p = 2.";
    return rep;
}

} // namespace jcl::loglike
