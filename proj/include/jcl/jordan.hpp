#pragma once

/// Jordan decomposition certificates for matrices with split spectrum.
/// The partition attached to an eigenvalue a is recovered from the rank
/// profile of powers of (m - aI): the number of Jordan blocks of size >= k
/// equals rank((m-aI)^{k-1}) - rank((m-aI)^k).

#include <vector>
#include <utility>
#include <algorithm>

#include "jcl/field.hpp"
#include "jcl/matrix.hpp"
#include "jcl/poly.hpp"

namespace jcl::exactnum {

inline bool canonical_less(const Fp& a, const Fp& b) { return a.value() < b.value(); }
inline bool canonical_less(const Rat& a, const Rat& b) { return a < b; }

template <class K>
struct JordanData {
    std::size_t n = 0;
    // (eigenvalue, weakly decreasing partition of its algebraic multiplicity),
    // eigenvalues pairwise distinct, canonically ordered
    std::vector<std::pair<K, std::vector<int>>> blocks;

    bool operator==(const JordanData& o) const { return n == o.n && blocks == o.blocks; }
};

/// Conjugate (transpose) of a partition given as a weakly decreasing list.
inline std::vector<int> conjugate_partition(const std::vector<int>& parts) {
    std::vector<int> out;
    if (parts.empty()) return out;
    for (int j = 1; j <= parts[0]; ++j) {
        int count = 0;
        for (int p : parts)
            if (p >= j) ++count;
        out.push_back(count);
    }
    return out;
}

/// Full Jordan certificate of m; throws NonSplitSpectrum when the
/// characteristic polynomial does not split over the coefficient field.
template <class K>
JordanData<K> jordan_data(const Matrix<K>& m) {
    const std::size_t n = m.dim();
    const Poly<K> cp = char_poly(m);
    RootExtraction<K> ext = extract_roots(cp);
    if (!ext.split())
        throw NonSplitSpectrum("jordan_data: characteristic polynomial does not split; "
                               "remaining factor " + ext.nonsplit.str());
    JordanData<K> jd;
    jd.n = n;
    const Matrix<K> id = Matrix<K>::identity(n, m.one_elem());
    for (const auto& [a, mult] : ext.roots) {
        const Matrix<K> shifted = m - id.scaled(a);
        std::vector<int> drops; // drops[k-1] = rank(shifted^{k-1}) - rank(shifted^k)
        std::size_t prev_rank = n;
        Matrix<K> power = shifted;
        for (std::size_t k = 0;; ++k) {
            if (k > n) throw std::logic_error("jordan_data: rank profile failed to stabilize");
            const std::size_t r = power.rank();
            drops.push_back(static_cast<int>(prev_rank - r));
            prev_rank = r;
            if (r == n - static_cast<std::size_t>(mult)) break;
            power = power * shifted;
        }
        std::vector<int> partition = conjugate_partition(drops);
        jd.blocks.emplace_back(a, std::move(partition));
    }
    std::sort(jd.blocks.begin(), jd.blocks.end(),
              [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    return jd;
}

/// Block-diagonal matrix ("Jordan normal form") realizing a certificate.
template <class K>
Matrix<K> matrix_from_jordan(const JordanData<K>& jd, const K& sample) {
    Matrix<K> m(jd.n, zero_like(sample));
    std::size_t pos = 0;
    for (const auto& [a, parts] : jd.blocks) {
        for (int size : parts) {
            for (int i = 0; i < size; ++i) {
                m.at(pos + i, pos + i) = a;
                if (i + 1 < size) m.at(pos + i, pos + i + 1) = one_like(sample);
            }
            pos += static_cast<std::size_t>(size);
        }
    }
    return m;
}

/// Semisimple part of m, as the interpolation polynomial f(m) where
/// f = a_i mod (t - a_i)^{k_i} (Chinese remainder in K[t]).
template <class K>
Matrix<K> semisimple_part(const Matrix<K>& m) {
    const JordanData<K> jd = jordan_data(m);
    const K zero = m.zero_elem(), one = m.one_elem();
    using P = Poly<K>;
    std::vector<P> moduli;
    for (const auto& [a, parts] : jd.blocks) {
        const P lin({zero - a, one}, zero);
        P mi = P::constant(one);
        for (int k = 0; k < parts.front(); ++k) mi = mi * lin;
        moduli.push_back(mi);
    }
    P total = P::constant(one);
    for (const auto& mi : moduli) total = total * mi;
    P f = P::zero(zero);
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        const P bi = exact_div(total, moduli[i]);
        const P ei = (bi * poly_mod_inverse(bi, moduli[i])) % total;
        f = f + ei.scaled(jd.blocks[i].first);
    }
    // Horner evaluation of f at m
    Matrix<K> s(m.dim(), zero);
    for (int d = f.degree(); d >= 0; --d) {
        s = s * m;
        const K c = f.coeff(static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < m.dim(); ++i) s.at(i, i) = s.at(i, i) + c;
    }
    if (!(s * m == m * s)) throw std::logic_error("semisimple_part: result does not commute");
    if (!(m - s).pow(static_cast<unsigned>(m.dim())).is_zero())
        throw std::logic_error("semisimple_part: difference is not nilpotent");
    return s;
}

template <class K>
Matrix<K> nilpotent_part(const Matrix<K>& m) { return m - semisimple_part(m); }

enum class Ambient { gl, sl, sp };

/// Standard symplectic form J = [[0, I], [-I, 0]] (even dimension).
template <class K>
Matrix<K> symplectic_form(std::size_t n, const K& one) {
    if (n % 2 != 0) throw std::invalid_argument("symplectic_form: dimension must be even");
    Matrix<K> j(n, zero_like(one));
    for (std::size_t i = 0; i < n / 2; ++i) {
        j.at(i, n / 2 + i) = one;
        j.at(n / 2 + i, i) = zero_like(one) - one;
    }
    return j;
}

template <class K>
bool in_symplectic_group(const Matrix<K>& g) {
    const Matrix<K> j = symplectic_form(g.dim(), g.one_elem());
    return g.transpose() * j * g == j;
}

template <class K>
bool in_symplectic_algebra(const Matrix<K>& x) {
    const Matrix<K> j = symplectic_form(x.dim(), x.one_elem());
    return (x.transpose() * j + j * x).is_zero();
}

/// Dimension of the commutant {y in ambient : ym = my}, by exact rank of
/// the linear constraint system. For the sp ambient, m itself must lie in
/// Sp (group) or sp (algebra).
template <class K>
int matrix_centralizer_dim(const Matrix<K>& m, Ambient ambient) {
    const std::size_t n = m.dim();
    const K zero = m.zero_elem(), one = m.one_elem();
    if (ambient == Ambient::sp && !in_symplectic_group(m) && !in_symplectic_algebra(m))
        throw std::invalid_argument("matrix_centralizer_dim: matrix not compatible with sp ambient");
    std::vector<std::vector<K>> rows;
    auto idx = [n](std::size_t a, std::size_t b) { return a * n + b; };
    // [y, m] = 0
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<K> row(n * n, zero);
            for (std::size_t k = 0; k < n; ++k) {
                row[idx(i, k)] = row[idx(i, k)] + m.at(k, j);
                row[idx(k, j)] = row[idx(k, j)] - m.at(i, k);
            }
            rows.push_back(std::move(row));
        }
    if (ambient == Ambient::sl) {
        std::vector<K> tr(n * n, zero);
        for (std::size_t i = 0; i < n; ++i) tr[idx(i, i)] = one;
        rows.push_back(std::move(tr));
    } else if (ambient == Ambient::sp) {
        const Matrix<K> j = symplectic_form(n, one);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<K> row(n * n, zero);
                // (y^T J + J y)_{rc}
                for (std::size_t a = 0; a < n; ++a) {
                    row[idx(a, r)] = row[idx(a, r)] + j.at(a, c);
                    row[idx(a, c)] = row[idx(a, c)] + j.at(r, a);
                }
                rows.push_back(std::move(row));
            }
    }
    const std::size_t rank = rref(rows).size();
    return static_cast<int>(n * n - rank);
}

} // namespace jcl::exactnum
