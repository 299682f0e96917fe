// Integer factorization support for rational root extraction: trial
// division for small factors, Brent's variant of Pollard rho above that.
// Inputs are constant terms and leading coefficients of desk-scale
// polynomials, so this never has to work hard.

#include "jcl/poly.hpp"

#include <map>

namespace jcl::exactnum::detail {

namespace {

mpz_class pollard_rho(const mpz_class& n, unsigned long seed) {
    // Brent cycle detection on x -> x^2 + c mod n
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    for (;;) {
        mpz_class y = rng.get_z_range(n - 3) + 2;
        mpz_class c = rng.get_z_range(n - 2) + 1;
        mpz_class x = y, d(1), q(1), ys(0);
        unsigned long r = 1;
        const unsigned long m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                const unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            do {
                ys = (ys * ys + c) % n;
                mpz_class diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(mpz_class n, std::map<mpz_class, int>& acc) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
        ++acc[n];
        return;
    }
    mpz_class d = pollard_rho(n, 0x5deece66dUL + static_cast<unsigned long>(mpz_fdiv_ui(n.get_mpz_t(), 1000003UL)));
    factor_rec(d, acc);
    factor_rec(n / d, acc);
}

} // namespace

void factor_integer(const mpz_class& n_in, std::vector<std::pair<mpz_class, int>>& out) {
    mpz_class n = abs(n_in);
    out.clear();
    if (n <= 1) return;
    std::map<mpz_class, int> acc;
    for (unsigned long p : {2UL, 3UL, 5UL}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++acc[mpz_class(p)];
            n /= static_cast<long>(p);
        }
    }
    unsigned long d = 7;
    while (n > 1 && mpz_class(d) * d <= n && d < 1000000UL) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            ++acc[mpz_class(d)];
            n /= static_cast<long>(d);
        }
        d += 2;
    }
    if (n > 1) factor_rec(n, acc);
    out.assign(acc.begin(), acc.end());
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<std::pair<mpz_class, int>> fac;
    factor_integer(n, fac);
    std::vector<mpz_class> divs{mpz_class(1)};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        mpz_class pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 2000000) throw std::invalid_argument("divisors: too many divisors");
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace jcl::exactnum::detail
