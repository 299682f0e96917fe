#pragma once

/// Univariate polynomials over an exact field, plus the handful of exact
/// algorithms the rest of the library is built on: gcd, resultants via
/// fraction-free Sylvester determinants, distinct-root counts over the
/// algebraic closure (with the inseparable case handled exactly), root
/// extraction over F_p and over Q, and characteristic polynomials.
///
/// Resultant convention: Res(f, g) = det S(f, g) where S is the
/// (deg f + deg g) square Sylvester matrix whose first deg g rows carry the
/// coefficients of f in descending order and whose last deg f rows carry
/// those of g. If f or g is the zero polynomial the resultant is 0; two
/// nonzero constants give 1 (empty determinant), and Res(c, g) = c^{deg g}.

#include <vector>
#include <random>
#include <algorithm>
#include <stdexcept>
#include <string>

#include "jcl/field.hpp"
#include "jcl/matrix.hpp"

namespace jcl::exactnum {

struct NonSplitSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class K>
class Poly {
public:
    /// Zero polynomial in the field of `sample`.
    static Poly zero(const K& sample) { return Poly(zero_like(sample)); }
    static Poly constant(const K& c) {
        Poly p(zero_like(c));
        p.coeffs_ = {c};
        p.trim();
        return p;
    }
    /// c0 + c1 t + ... (ascending).
    Poly(std::vector<K> coeffs, const K& sample) : zero_(zero_like(sample)), coeffs_(std::move(coeffs)) {
        trim();
    }
    /// Monomial c * t^k.
    static Poly monomial(const K& c, std::size_t k) {
        Poly p(zero_like(c));
        p.coeffs_.assign(k + 1, zero_like(c));
        p.coeffs_[k] = c;
        p.trim();
        return p;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const K& field_zero() const { return zero_; }
    K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_; }
    const K& leading() const {
        if (is_zero()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    const std::vector<K>& coeffs() const { return coeffs_; }
    bool is_monic() const { return !is_zero() && leading() == one_like(zero_); }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        Poly r(zero_);
        r.coeffs_.assign(std::max(coeffs_.size(), o.coeffs_.size()), zero_);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) + o.coeff(i);
        r.trim();
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r(zero_);
        r.coeffs_.assign(std::max(coeffs_.size(), o.coeffs_.size()), zero_);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) - o.coeff(i);
        r.trim();
        return r;
    }
    Poly operator-() const { return Poly::zero(zero_) - *this; }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly::zero(zero_);
        Poly r(zero_);
        r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, zero_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
        }
        r.trim();
        return r;
    }
    Poly scaled(const K& c) const {
        Poly r = *this;
        for (auto& x : r.coeffs_) x = x * c;
        r.trim();
        return r;
    }

    /// Euclidean division over the coefficient field.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly q = Poly::zero(zero_), r = *this;
        const K lead_inv = d.leading().inv();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            const K c = r.leading() * lead_inv;
            q = q + Poly::monomial(c, shift);
            r = r - d * Poly::monomial(c, shift);
        }
        return {q, r};
    }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly derivative() const {
        if (degree() < 1) return Poly::zero(zero_);
        Poly r(zero_);
        r.coeffs_.assign(coeffs_.size() - 1, zero_);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            r.coeffs_[i - 1] = coeffs_[i] * from_int_like(zero_, static_cast<std::int64_t>(i));
        r.trim();
        return r;
    }

    K eval(const K& x) const {
        K acc = zero_;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(leading().inv());
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += coeffs_[i].str();
            if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }

private:
    explicit Poly(K zero) : zero_(std::move(zero)) {}
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    K zero_;
    std::vector<K> coeffs_;
};

template <class K>
Poly<K> zero_like(const Poly<K>& p) { return Poly<K>::zero(p.field_zero()); }
template <class K>
Poly<K> one_like(const Poly<K>& p) { return Poly<K>::constant(one_like(p.field_zero())); }

/// Exact division in K[t]; throws if the division leaves a remainder.
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::logic_error("Poly: exact_div has remainder");
    return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
Poly<K> poly_mulmod(const Poly<K>& a, const Poly<K>& b, const Poly<K>& m) {
    return (a * b) % m;
}

template <class K>
Poly<K> poly_powmod(Poly<K> base, mpz_class e, const Poly<K>& m) {
    Poly<K> r = Poly<K>::constant(one_like(m.field_zero())) % m;
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mulmod(r, base, m);
        e >>= 1;
        if (e > 0) base = poly_mulmod(base, base, m);
    }
    return r;
}

/// Inverse of a modulo m in K[t]; throws when gcd(a, m) != 1.
template <class K>
Poly<K> poly_mod_inverse(const Poly<K>& a, const Poly<K>& m) {
    Poly<K> r0 = m, r1 = a % m;
    Poly<K> t0 = Poly<K>::zero(m.field_zero());
    Poly<K> t1 = Poly<K>::constant(one_like(m.field_zero()));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Poly<K> t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw std::domain_error("poly_mod_inverse: arguments not coprime");
    return (t0.scaled(r0.leading().inv())) % m;
}

/// Sylvester-matrix resultant, evaluated by fraction-free elimination.
template <class K>
K resultant(const Poly<K>& f, const Poly<K>& g) {
    const K zero = zero_like(f.field_zero());
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("resultant: both polynomials are zero");
    if (f.is_zero() || g.is_zero()) return zero;
    const int m = f.degree(), n = g.degree();
    if (m + n == 0) return one_like(zero); // two nonzero constants, empty determinant
    Matrix<K> s(static_cast<std::size_t>(m + n), zero);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k)
            s.at(i, i + k) = f.coeff(static_cast<std::size_t>(m - k));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            s.at(n + i, i + k) = g.coeff(static_cast<std::size_t>(n - k));
    return s.det();
}

namespace detail {
/// For f with f' = 0 in characteristic p, rewrites f(t) = h(t^p) and
/// returns h.
template <class K>
Poly<K> frobenius_deflate(const Poly<K>& f, long p) {
    std::vector<K> h;
    for (int i = 0; i <= f.degree(); ++i) {
        const K c = f.coeff(static_cast<std::size_t>(i));
        if (i % p == 0) h.push_back(c);
        else if (!c.is_zero()) throw std::logic_error("frobenius_deflate: derivative was not zero");
    }
    return Poly<K>(std::move(h), f.field_zero());
}
} // namespace detail

/// Number of distinct roots of f in the algebraic closure, exact in every
/// characteristic (multiplicities divisible by p are peeled off through
/// f(t) = h(t^p), under which t -> t^p is a bijection on roots).
template <class K>
int distinct_root_count(Poly<K> f) {
    if (f.is_zero()) throw std::invalid_argument("distinct_root_count: zero polynomial");
    f = f.monic();
    if (f.degree() == 0) return 0;
    const long p = characteristic(f.field_zero());
    Poly<K> df = f.derivative();
    if (df.is_zero()) return distinct_root_count(detail::frobenius_deflate(f, p));
    Poly<K> d = gcd(f, df);
    Poly<K> w = exact_div(f, d); // each root of multiplicity prime to p, exactly once
    Poly<K> z = d;
    for (;;) {
        Poly<K> shared = gcd(z, w);
        if (shared.degree() <= 0) break;
        z = exact_div(z, shared);
    }
    if (z.degree() > 0) return w.degree() + distinct_root_count(z);
    return w.degree();
}

template <class K>
struct RootExtraction {
    std::vector<std::pair<K, int>> roots; // (root, multiplicity), canonically sorted
    Poly<K> nonsplit;                     // monic factor without roots in the field
    bool split() const { return nonsplit.degree() == 0; }
};

namespace detail {
template <class K>
int deflate_root(Poly<K>& f, const K& r) {
    const Poly<K> lin({zero_like(r) - r, one_like(r)}, r);
    int mult = 0;
    for (;;) {
        auto [q, rem] = f.divmod(lin);
        if (!rem.is_zero()) break;
        f = q;
        ++mult;
    }
    return mult;
}

inline void cz_split_linear(const Poly<Fp>& w, std::vector<Fp>& out, std::mt19937_64& rng) {
    if (w.degree() <= 0) return;
    const std::uint32_t p = w.field_zero().modulus();
    if (w.degree() == 1) {
        out.push_back((zero_like(w.field_zero()) - w.coeff(0)) / w.coeff(1));
        return;
    }
    const mpz_class half((static_cast<unsigned long>(p) - 1) / 2);
    for (;;) {
        const Fp a(static_cast<std::int64_t>(rng() % p), p);
        Poly<Fp> shifted({a, Fp::one(p)}, Fp::zero(p));
        Poly<Fp> h = poly_powmod(shifted, half, w) - Poly<Fp>::constant(Fp::one(p));
        Poly<Fp> g = gcd(h, w);
        if (g.degree() > 0 && g.degree() < w.degree()) {
            cz_split_linear(g, out, rng);
            cz_split_linear(exact_div(w, g), out, rng);
            return;
        }
    }
}
} // namespace detail

/// All roots of f lying in F_p, with multiplicities; exhaustive search for
/// small p, gcd splitting against t^p - t for large p.
inline RootExtraction<Fp> extract_roots(Poly<Fp> f) {
    if (f.is_zero()) throw std::invalid_argument("extract_roots: zero polynomial");
    f = f.monic();
    const std::uint32_t p = f.field_zero().modulus();
    RootExtraction<Fp> res{{}, f};
    std::vector<Fp> found;
    if (p <= 100000) {
        for (std::uint32_t a = 0; a < p && f.degree() > 0; ++a) {
            const Fp x(a, p);
            if (f.eval(x).is_zero()) found.push_back(x);
        }
    } else {
        // roots in F_p are the roots of gcd(f, t^p - t)
        const Poly<Fp> t = Poly<Fp>::monomial(Fp::one(p), 1);
        Poly<Fp> tp = poly_powmod(t, mpz_class(static_cast<unsigned long>(p)), f);
        Poly<Fp> w = gcd(tp - t, f);
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (std::uint64_t(p) << 20) ^ std::uint64_t(f.degree()));
        detail::cz_split_linear(w, found, rng);
    }
    std::sort(found.begin(), found.end(),
              [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
    for (const Fp& r : found) {
        const int mult = detail::deflate_root(f, r);
        if (mult > 0) res.roots.emplace_back(r, mult);
    }
    res.nonsplit = f;
    return res;
}

namespace detail {
void factor_integer(const mpz_class& n, std::vector<std::pair<mpz_class, int>>& out);
std::vector<mpz_class> divisors(const mpz_class& n);
} // namespace detail

/// All rational roots of f, with multiplicities (rational root theorem on
/// the primitive integer form, repeated after each deflation).
inline RootExtraction<Rat> extract_roots(Poly<Rat> f) {
    if (f.is_zero()) throw std::invalid_argument("extract_roots: zero polynomial");
    RootExtraction<Rat> res{{}, f};
    std::vector<std::pair<Rat, int>> found;
    // peel off roots at zero first
    if (f.degree() > 0 && f.coeff(0).is_zero()) {
        const int mult = detail::deflate_root(f, Rat(0));
        found.emplace_back(Rat(0), mult);
    }
    bool progress = true;
    while (progress && f.degree() > 0) {
        progress = false;
        // scale to a primitive integer polynomial
        mpz_class denlcm(1);
        for (int i = 0; i <= f.degree(); ++i)
            mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), f.coeff(i).den().get_mpz_t());
        std::vector<mpz_class> c(static_cast<std::size_t>(f.degree()) + 1);
        for (int i = 0; i <= f.degree(); ++i) {
            Rat scaled = f.coeff(static_cast<std::size_t>(i)) * Rat(denlcm, mpz_class(1));
            c[static_cast<std::size_t>(i)] = scaled.num();
        }
        const auto nums = detail::divisors(abs(c.front()));
        const auto dens = detail::divisors(abs(c.back()));
        for (const auto& u : nums) {
            for (const auto& v : dens) {
                for (int sign : {1, -1}) {
                    const Rat cand(sign * u, v);
                    if (!f.eval(cand).is_zero()) continue;
                    const int mult = detail::deflate_root(f, cand);
                    found.emplace_back(cand, mult);
                    progress = true;
                    goto next_round;
                }
            }
        }
    next_round:;
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    res.roots = std::move(found);
    res.nonsplit = f.monic();
    return res;
}

/// Monic characteristic polynomial det(tI - m), computed by fraction-free
/// elimination over K[t].
template <class K>
Poly<K> char_poly(const Matrix<K>& m) {
    using P = Poly<K>;
    const K zero = m.zero_elem(), one = m.one_elem();
    Matrix<P> tm(m.dim(), P::zero(zero));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            std::vector<K> coeffs{zero - m.at(i, j)};
            if (i == j) coeffs.push_back(one);
            tm.at(i, j) = P(std::move(coeffs), zero);
        }
    P d = tm.det();
    if (d.degree() != static_cast<int>(m.dim()) || !d.is_monic())
        throw std::logic_error("char_poly: elimination produced a non-monic result");
    return d;
}

} // namespace jcl::exactnum
