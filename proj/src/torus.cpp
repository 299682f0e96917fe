#include "jcl/torus.hpp"

namespace jcl::rootcore {

using exactnum::Rat;

TorusElement::TorusElement(TorusMode m, std::vector<Rat> c, long pp)
    : mode(m), coords(std::move(c)), p(pp) {
    if (p < 0) throw std::invalid_argument("TorusElement: negative characteristic");
    if (p > 0)
        for (const Rat& x : coords)
            if (mpz_divisible_ui_p(x.den().get_mpz_t(), static_cast<unsigned long>(p)))
                throw std::invalid_argument(
                    "TorusElement: coordinate denominator divisible by the characteristic");
    if (mode == TorusMode::multiplicative)
        for (Rat& x : coords) {
            // reduce mod 1, keeping the result in [0, 1)
            mpz_class n = x.num(), d = x.den(), r;
            mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
            x = Rat(r, d);
        }
}

Subsystem centralizer_subsystem(const RootSystem& rs, const TorusElement& s) {
    if (static_cast<int>(s.coords.size()) != rs.rank)
        throw std::invalid_argument("centralizer_subsystem: coordinate length mismatch");
    std::vector<int> members;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        Rat val(0);
        const RootVec& r = rs.roots[i];
        for (int j = 0; j < rs.rank; ++j)
            if (r[static_cast<std::size_t>(j)] != 0)
                val += s.coords[static_cast<std::size_t>(j)] *
                       Rat(r[static_cast<std::size_t>(j)]);
        bool killed;
        if (s.mode == TorusMode::multiplicative) {
            killed = val.is_integer();
        } else if (s.p == 0) {
            killed = val.is_zero();
        } else {
            // denominator is coprime to p, so val = 0 mod p iff p | numerator
            killed = mpz_divisible_ui_p(val.num().get_mpz_t(),
                                        static_cast<unsigned long>(s.p)) != 0;
        }
        if (killed) members.push_back(static_cast<int>(i));
    }
    return Subsystem(rs, std::move(members));
}

} // namespace jcl::rootcore
