#include "jcl/rational_closure.hpp"

#include "jcl/field.hpp"
#include "jcl/matrix.hpp"

namespace jcl::rootcore {

using exactnum::Rat;

namespace {

std::vector<std::vector<Rat>> span_echelon(const Subsystem& psi) {
    const RootSystem& rs = *psi.parent;
    std::vector<std::vector<Rat>> rows;
    for (int m : psi.members) {
        std::vector<Rat> row;
        for (int x : rs.roots[static_cast<std::size_t>(m)]) row.emplace_back(x);
        rows.push_back(std::move(row));
    }
    const auto pivots = exactnum::rref(rows);
    rows.resize(pivots.size(), std::vector<Rat>{});
    return rows;
}

bool in_span(const std::vector<std::vector<Rat>>& echelon, const RootVec& v) {
    std::vector<Rat> w;
    for (int x : v) w.emplace_back(x);
    for (const auto& row : echelon) {
        std::size_t piv = 0;
        while (piv < row.size() && row[piv].is_zero()) ++piv;
        if (piv == row.size()) continue;
        if (!w[piv].is_zero()) {
            const Rat f = w[piv];
            for (std::size_t j = piv; j < w.size(); ++j) w[j] -= f * row[j];
        }
    }
    for (const Rat& x : w)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace

Subsystem rational_closure(const Subsystem& psi) {
    const RootSystem& rs = *psi.parent;
    const auto echelon = span_echelon(psi);
    std::vector<int> members;
    for (std::size_t i = 0; i < rs.size(); ++i)
        if (in_span(echelon, rs.roots[i])) members.push_back(static_cast<int>(i));
    return Subsystem(rs, std::move(members));
}

bool is_rationally_closed(const Subsystem& psi) {
    return rational_closure(psi).members == psi.members;
}

} // namespace jcl::rootcore
