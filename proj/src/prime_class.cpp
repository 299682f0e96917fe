#include "jcl/prime_class.hpp"

namespace jcl::rootcore {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

bool bad_component(char t, int r, long p) {
    if (p == 2) return t != 'A';
    if (p == 3) return t == 'E' || t == 'F' || t == 'G'; // not classical
    if (p == 5) return t == 'E' && r == 8;
    return false;
}

bool torsion_component(char t, int r, long p) {
    if (p == 2) return t != 'A' && t != 'C';
    if (p == 3) return t == 'E' || t == 'F'; // exceptional, not G2
    if (p == 5) return t == 'E' && r == 8;
    return false;
}

} // namespace

PrimeVerdict classify_prime(const RootSystem& rs, long p,
                            std::optional<long> fundamental_group_order) {
    if (!is_prime(p)) throw std::invalid_argument("classify_prime: p must be prime");
    PrimeVerdict v;
    v.p = p;
    v.fundamental_group_order = fundamental_group_order;
    v.good = true;
    v.very_good = true;
    v.torsion = false;
    for (std::size_t c = 0; c < rs.component_letters.size(); ++c) {
        const char t = rs.component_letters[c];
        const int r = rs.component_ranks[c];
        if (bad_component(t, r, p)) v.good = false;
        if (torsion_component(t, r, p)) v.torsion = true;
        if (bad_component(t, r, p) || (t == 'A' && (r + 1) % p == 0)) v.very_good = false;
    }
    if (!v.good) v.very_good = false;
    v.bad = !v.good;
    if (fundamental_group_order && *fundamental_group_order % p == 0) v.torsion = true;
    return v;
}

} // namespace jcl::rootcore
