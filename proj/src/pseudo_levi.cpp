#include "jcl/pseudo_levi.hpp"

#include <algorithm>
#include <set>

#include "jcl/rational_closure.hpp"

namespace jcl::rootcore {

std::vector<PseudoLevi> pseudo_levis(const RootSystem& rs) {
    if (rs.rank > 8) throw std::invalid_argument("pseudo_levis: rank capped at 8");
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> full(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) full[i] = static_cast<int>(i);
    seen.insert(full);
    queue.push_back(full);
    while (!queue.empty()) {
        std::vector<int> members = std::move(queue.back());
        queue.pop_back();
        const Subsystem sub(rs, members, false);
        std::vector<int> base = subsystem_base(sub);
        std::vector<int> nodes = base;
        for (const auto& comp : subsystem_components(sub)) {
            std::vector<int> comp_base;
            for (int b : base)
                if (std::binary_search(comp.begin(), comp.end(), b)) comp_base.push_back(b);
            if (comp_base.empty()) continue;
            nodes.push_back(rs.negate(component_highest_root(rs, comp, comp_base)));
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        const std::size_t k = nodes.size();
        if (k > 20) throw std::logic_error("pseudo_levis: extended base too large");
        for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
            std::vector<int> seed;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t(1) << b)) seed.push_back(nodes[b]);
            std::vector<int> child = additive_closure(rs, seed);
            if (seen.insert(child).second) queue.push_back(std::move(child));
        }
    }
    std::vector<PseudoLevi> out;
    for (const auto& members : seen) {
        PseudoLevi pl;
        pl.sub = Subsystem(rs, members);
        pl.type_decomposition = subsystem_type(pl.sub);
        pl.rationally_closed = is_rationally_closed(pl.sub);
        out.push_back(std::move(pl));
    }
    std::sort(out.begin(), out.end(), [](const PseudoLevi& a, const PseudoLevi& b) {
        if (a.sub.members.size() != b.sub.members.size())
            return a.sub.members.size() > b.sub.members.size();
        return a.sub.members < b.sub.members;
    });
    return out;
}

} // namespace jcl::rootcore
