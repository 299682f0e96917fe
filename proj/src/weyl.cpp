#include "jcl/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace jcl::rootcore {

namespace {

std::string cartan_key(const RootSystem& rs) {
    std::ostringstream os;
    os << rs.rank;
    for (const auto& row : rs.cartan)
        for (int x : row) os << ',' << x;
    return os.str();
}

std::vector<WeylPerm> enumerate(const RootSystem& rs) {
    const std::size_t nroots = rs.size();
    std::vector<WeylPerm> gens;
    for (int i = 0; i < rs.rank; ++i) {
        WeylPerm g(nroots);
        for (std::size_t r = 0; r < nroots; ++r) {
            RootVec v = rs.roots[r];
            long pair = 0;
            for (int j = 0; j < rs.rank; ++j)
                pair += static_cast<long>(rs.cartan[i][j]) * v[static_cast<std::size_t>(j)];
            v[static_cast<std::size_t>(i)] -= static_cast<int>(pair);
            const int img = rs.root_index(v);
            if (img < 0) throw std::logic_error("weyl: reflection left the root set");
            g[r] = img;
        }
        gens.push_back(std::move(g));
    }
    std::set<WeylPerm> seen;
    WeylPerm id(nroots);
    for (std::size_t r = 0; r < nroots; ++r) id[r] = static_cast<int>(r);
    seen.insert(id);
    std::vector<WeylPerm> queue{id};
    while (!queue.empty()) {
        WeylPerm w = std::move(queue.back());
        queue.pop_back();
        for (const WeylPerm& g : gens) {
            WeylPerm gw(nroots);
            for (std::size_t r = 0; r < nroots; ++r) gw[r] = g[static_cast<std::size_t>(w[r])];
            if (seen.insert(gw).second) {
                if (seen.size() > 20000) throw std::logic_error("weyl: group unexpectedly large");
                queue.push_back(std::move(gw));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

std::shared_ptr<const std::vector<WeylPerm>> weyl_elements(const RootSystem& rs) {
    if (rs.rank > 4)
        throw std::invalid_argument("weyl_elements: full enumeration is gated to rank <= 4");
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const std::vector<WeylPerm>>> cache;
    const std::string key = cartan_key(rs);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto table = std::make_shared<const std::vector<WeylPerm>>(enumerate(rs));
    cache[key] = table;
    return table;
}

std::vector<int> apply_weyl(const WeylPerm& w, const std::vector<int>& idx) {
    std::vector<int> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(w[static_cast<std::size_t>(i)]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace jcl::rootcore
