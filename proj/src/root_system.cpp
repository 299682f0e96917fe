#include "jcl/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <cctype>

namespace jcl::rootcore {

namespace {

long expected_root_count(char t, int r) {
    switch (t) {
        case 'A': return static_cast<long>(r) * (r + 1);
        case 'B':
        case 'C': return 2L * r * r;
        case 'D': return 2L * r * (r - 1);
        case 'E': return r == 6 ? 72 : r == 7 ? 126 : 240;
        case 'F': return 48;
        case 'G': return 12;
        default: return -1;
    }
}

std::vector<std::vector<int>> cartan_matrix(char t, int r) {
    std::vector<std::vector<int>> c(static_cast<std::size_t>(r),
                                    std::vector<int>(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) c[i][i] = 2;
    auto link = [&](int i, int j, int cij = -1, int cji = -1) {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    switch (t) {
        case 'A':
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            break;
        case 'B': // last simple root short
            for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
            link(r - 2, r - 1, -1, -2);
            break;
        case 'C': // last simple root long
            for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
            link(r - 2, r - 1, -2, -1);
            break;
        case 'D':
            for (int i = 0; i + 3 < r; ++i) link(i, i + 1);
            link(r - 3, r - 2);
            link(r - 3, r - 1);
            break;
        case 'E': // Bourbaki numbering: the branch node is alpha_4
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
            break;
        case 'F': // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            link(0, 1);
            link(1, 2, -1, -2);
            link(2, 3);
            break;
        case 'G': // alpha_1 long, alpha_2 short
            link(0, 1, -1, -3);
            break;
        default:
            throw std::invalid_argument("cartan_matrix: unknown type");
    }
    return c;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

/// Relative half-norms d_i = (alpha_i, alpha_i)/2, integral per component,
/// recovered from the Cartan matrix via d_i C[i][j] = d_j C[j][i].
std::vector<long> half_norms(const std::vector<std::vector<int>>& cartan,
                             const std::vector<std::vector<int>>& components) {
    const int r = static_cast<int>(cartan.size());
    std::vector<long> num(static_cast<std::size_t>(r), 0), den(static_cast<std::size_t>(r), 1);
    for (const auto& comp : components) {
        num[static_cast<std::size_t>(comp[0])] = 1;
        std::vector<int> stack{comp[0]};
        while (!stack.empty()) {
            const int i = stack.back();
            stack.pop_back();
            for (int j : comp) {
                if (num[static_cast<std::size_t>(j)] != 0 || cartan[i][j] == 0 || i == j) continue;
                // d_j = d_i * C[i][j] / C[j][i]
                long n = num[static_cast<std::size_t>(i)] * cartan[i][j];
                long d = den[static_cast<std::size_t>(i)] * cartan[j][i];
                if (d < 0) { n = -n; d = -d; }
                const long g = std::gcd(std::abs(n), d);
                num[static_cast<std::size_t>(j)] = n / g;
                den[static_cast<std::size_t>(j)] = d / g;
                stack.push_back(j);
            }
        }
        long scale = 1;
        for (int i : comp) scale = lcm_long(scale, den[static_cast<std::size_t>(i)]);
        long g = 0;
        for (int i : comp) {
            num[static_cast<std::size_t>(i)] *= scale / den[static_cast<std::size_t>(i)];
            den[static_cast<std::size_t>(i)] = 1;
            g = std::gcd(g, num[static_cast<std::size_t>(i)]);
        }
        for (int i : comp) num[static_cast<std::size_t>(i)] /= g;
    }
    return num;
}

/// Generates the full root set from the Cartan matrix by closing the simple
/// roots under all simple reflections, then fills in every derived field.
void assemble(RootSystem& rs) {
    const int r = rs.rank;
    std::set<RootVec> seen;
    std::vector<RootVec> queue;
    for (int i = 0; i < r; ++i) {
        RootVec e(static_cast<std::size_t>(r), 0);
        e[static_cast<std::size_t>(i)] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        RootVec b = queue.back();
        queue.pop_back();
        for (int i = 0; i < r; ++i) {
            long pair = 0;
            for (int j = 0; j < r; ++j) pair += static_cast<long>(rs.cartan[i][j]) * b[static_cast<std::size_t>(j)];
            RootVec nb = b;
            nb[static_cast<std::size_t>(i)] -= static_cast<int>(pair);
            if (seen.insert(nb).second) queue.push_back(nb);
        }
    }
    std::vector<RootVec> positives;
    for (const RootVec& v : seen) {
        bool nonneg = true, nonpos = true;
        for (int x : v) {
            nonneg = nonneg && x >= 0;
            nonpos = nonpos && x <= 0;
        }
        if (!nonneg && !nonpos)
            throw std::logic_error("assemble: root with mixed signs");
        if (nonneg) positives.push_back(v);
    }
    auto height = [](const RootVec& v) { return std::accumulate(v.begin(), v.end(), 0); };
    std::sort(positives.begin(), positives.end(), [&](const RootVec& a, const RootVec& b) {
        const int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs.roots = positives;
    for (const RootVec& v : positives) {
        RootVec n = v;
        for (int& x : n) x = -x;
        rs.roots.push_back(n);
    }
    rs.simple_indices.clear();
    for (int i = 0; i < r; ++i) {
        RootVec e(static_cast<std::size_t>(r), 0);
        e[static_cast<std::size_t>(i)] = 1;
        const auto it = std::find(positives.begin(), positives.end(), e);
        rs.simple_indices.push_back(static_cast<int>(it - positives.begin()));
    }
    const std::vector<long> d = half_norms(rs.cartan, rs.component_simples);
    rs.form.assign(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            rs.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<long>(rs.cartan[i][j]) * d[static_cast<std::size_t>(i)];
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (rs.form[i][j] != rs.form[j][i])
                throw std::logic_error("assemble: bilinear form not symmetric");
    rs.finalize();
}

} // namespace

void RootSystem::finalize() {
    index_.clear();
    for (std::size_t i = 0; i < roots.size(); ++i) index_[roots[i]] = static_cast<int>(i);
}

int RootSystem::parent_component_of_root(int idx) const {
    const RootVec& v = roots[static_cast<std::size_t>(idx)];
    for (std::size_t c = 0; c < component_simples.size(); ++c)
        for (int s : component_simples[c])
            if (v[static_cast<std::size_t>(s)] != 0) return static_cast<int>(c);
    throw std::logic_error("parent_component_of_root: zero vector");
}

RootSystem build_root_system(char type, int rank) {
    const bool ok = (type == 'A' && rank >= 1) || ((type == 'B' || type == 'C') && rank >= 2) ||
                    (type == 'D' && rank >= 4) || (type == 'E' && rank >= 6 && rank <= 8) ||
                    (type == 'F' && rank == 4) || (type == 'G' && rank == 2);
    if (!ok) throw std::invalid_argument("build_root_system: invalid type/rank pair");
    RootSystem rs;
    rs.type_label = std::string(1, type) + std::to_string(rank);
    rs.rank = rank;
    rs.cartan = cartan_matrix(type, rank);
    std::vector<int> all(static_cast<std::size_t>(rank));
    std::iota(all.begin(), all.end(), 0);
    rs.component_simples = {all};
    rs.component_letters = {type};
    rs.component_ranks = {rank};
    assemble(rs);
    if (static_cast<long>(rs.roots.size()) != expected_root_count(type, rank))
        throw std::logic_error("build_root_system: root count mismatch for " + rs.type_label);
    return rs;
}

RootSystem product(const RootSystem& a, const RootSystem& b) {
    RootSystem rs;
    rs.type_label = a.type_label + "+" + b.type_label;
    rs.rank = a.rank + b.rank;
    rs.cartan.assign(static_cast<std::size_t>(rs.rank),
                     std::vector<int>(static_cast<std::size_t>(rs.rank), 0));
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) rs.cartan[i][j] = a.cartan[i][j];
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) rs.cartan[a.rank + i][a.rank + j] = b.cartan[i][j];
    rs.component_simples = a.component_simples;
    for (const auto& comp : b.component_simples) {
        std::vector<int> shifted;
        for (int s : comp) shifted.push_back(s + a.rank);
        rs.component_simples.push_back(shifted);
    }
    rs.component_letters = a.component_letters;
    rs.component_letters.insert(rs.component_letters.end(), b.component_letters.begin(),
                                b.component_letters.end());
    rs.component_ranks = a.component_ranks;
    rs.component_ranks.insert(rs.component_ranks.end(), b.component_ranks.begin(),
                              b.component_ranks.end());
    assemble(rs);
    if (rs.roots.size() != a.roots.size() + b.roots.size())
        throw std::logic_error("product: root count mismatch");
    return rs;
}

RootSystem parse_root_system(const std::string& label) {
    std::vector<RootSystem> parts;
    std::size_t pos = 0;
    while (pos < label.size()) {
        std::size_t end = label.find('+', pos);
        if (end == std::string::npos) end = label.size();
        const std::string tok = label.substr(pos, end - pos);
        if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
            throw std::invalid_argument("parse_root_system: bad token '" + tok + "'");
        const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
        const int r = std::stoi(tok.substr(1));
        parts.push_back(build_root_system(t, r));
        pos = end + 1;
    }
    if (parts.empty()) throw std::invalid_argument("parse_root_system: empty label");
    RootSystem rs = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) rs = product(rs, parts[i]);
    return rs;
}

Subsystem::Subsystem(const RootSystem& rs, std::vector<int> idx, bool validate)
    : parent(&rs), members(std::move(idx)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int m : members)
        if (m < 0 || m >= static_cast<int>(rs.size()))
            throw std::invalid_argument("Subsystem: root index out of range");
    if (validate) {
        for (int m : members)
            if (!contains(rs.negate(m)))
                throw std::invalid_argument("Subsystem: not closed under negation");
        for (int x : members)
            for (int y : members) {
                const int s = rs.add_indices(x, y);
                if (s >= 0 && !contains(s))
                    throw std::invalid_argument("Subsystem: not additively closed");
            }
    }
}

bool Subsystem::contains(int idx) const {
    return std::binary_search(members.begin(), members.end(), idx);
}

std::vector<std::vector<int>> subsystem_components(const Subsystem& s) {
    const RootSystem& rs = *s.parent;
    std::vector<std::vector<int>> comps;
    std::vector<bool> used(s.members.size(), false);
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> stack{i};
        used[i] = true;
        std::vector<int> comp;
        while (!stack.empty()) {
            const std::size_t k = stack.back();
            stack.pop_back();
            comp.push_back(s.members[k]);
            for (std::size_t j = 0; j < s.members.size(); ++j) {
                if (used[j]) continue;
                if (rs.pairing(rs.roots[static_cast<std::size_t>(s.members[k])],
                               rs.roots[static_cast<std::size_t>(s.members[j])]) != 0) {
                    used[j] = true;
                    stack.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> subsystem_base(const Subsystem& s) {
    const RootSystem& rs = *s.parent;
    std::vector<int> pos;
    for (int m : s.members)
        if (rs.is_positive(m)) pos.push_back(m);
    std::set<int> sums;
    for (int x : pos)
        for (int y : pos) {
            const int k = rs.add_indices(x, y);
            if (k >= 0) sums.insert(k);
        }
    std::vector<int> base;
    for (int m : pos)
        if (!sums.count(m)) base.push_back(m);
    return base;
}

int component_highest_root(const RootSystem& rs, const std::vector<int>& comp_members,
                           const std::vector<int>& comp_base) {
    int cur = -1;
    for (int m : comp_members)
        if (rs.is_positive(m)) { cur = m; break; }
    if (cur < 0) throw std::logic_error("component_highest_root: no positive member");
    bool moved = true;
    while (moved) {
        moved = false;
        for (int b : comp_base) {
            const int k = rs.add_indices(cur, b);
            if (k >= 0 && std::binary_search(comp_members.begin(), comp_members.end(), k)) {
                cur = k;
                moved = true;
                break;
            }
        }
    }
    return cur;
}

std::vector<int> additive_closure(const RootSystem& rs, std::vector<int> seed) {
    std::vector<bool> in(rs.size(), false);
    std::vector<int> work;
    auto push = [&](int k) {
        if (!in[static_cast<std::size_t>(k)]) {
            in[static_cast<std::size_t>(k)] = true;
            work.push_back(k);
        }
    };
    for (int m : seed) {
        push(m);
        push(rs.negate(m));
    }
    std::vector<int> all = work;
    while (!work.empty()) {
        const int x = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < all.size(); ++i) {
            const int k = rs.add_indices(x, all[i]);
            if (k >= 0 && !in[static_cast<std::size_t>(k)]) {
                in[static_cast<std::size_t>(k)] = true;
                work.push_back(k);
                all.push_back(k);
            }
        }
    }
    std::sort(all.begin(), all.end());
    return all;
}

namespace {

struct ComponentType {
    char letter;
    int rank;
    bool short_roots;
    std::string str() const {
        return std::string(1, letter) + std::to_string(rank) + (short_roots ? "~" : "");
    }
};

ComponentType classify_component(const RootSystem& rs, const std::vector<int>& members,
                                 const Subsystem& whole) {
    Subsystem comp(rs, members, false);
    std::vector<int> base = subsystem_base(comp);
    const int r = static_cast<int>(base.size());
    if (r == 0) throw std::logic_error("classify_component: empty base");
    // component Cartan entries c[a][b] = 2(beta_a, beta_b)/(beta_b, beta_b)
    std::vector<std::vector<long>> c(base.size(), std::vector<long>(base.size(), 0));
    for (std::size_t a = 0; a < base.size(); ++a)
        for (std::size_t b = 0; b < base.size(); ++b) {
            const long num = 2 * rs.pairing(rs.roots[static_cast<std::size_t>(base[a])],
                                            rs.roots[static_cast<std::size_t>(base[b])]);
            const long den = rs.norm2(base[b]);
            if (num % den != 0) throw std::logic_error("classify_component: non-integral Cartan entry");
            c[a][b] = num / den;
        }
    // shortness relative to the parent component
    const int pc = rs.parent_component_of_root(members[0]);
    long parent_max = 0, comp_max = 0;
    bool parent_two_lengths = false;
    {
        long pmin = 0;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs.parent_component_of_root(static_cast<int>(i)) != pc) continue;
            const long n2 = rs.norm2(static_cast<int>(i));
            parent_max = std::max(parent_max, n2);
            pmin = pmin == 0 ? n2 : std::min(pmin, n2);
        }
        parent_two_lengths = parent_max != pmin;
        for (int m : members) comp_max = std::max(comp_max, rs.norm2(m));
    }
    const bool short_roots = parent_two_lengths && comp_max < parent_max;
    auto expect = [&](char letter) {
        if (static_cast<long>(members.size()) != expected_root_count(letter, r))
            throw std::logic_error("classify_component: root count mismatch");
        return ComponentType{letter, r, short_roots};
    };
    if (r == 1) return expect('A');
    long max_mult = 0;
    for (std::size_t a = 0; a < base.size(); ++a)
        for (std::size_t b = a + 1; b < base.size(); ++b)
            max_mult = std::max(max_mult, c[a][b] * c[b][a]);
    if (max_mult == 3) return expect('G');
    if (max_mult == 2) {
        if (r == 2) return expect('B'); // B2 = C2; canonical label B2
        int longs = 0, shorts = 0;
        long maxn = 0;
        for (int b : base) maxn = std::max(maxn, rs.norm2(b));
        for (int b : base) (rs.norm2(b) == maxn ? longs : shorts)++;
        if (longs == 2 && shorts == 2 && r == 4) return expect('F');
        if (shorts == 1) return expect('B');
        if (longs == 1) return expect('C');
        throw std::logic_error("classify_component: unrecognized doubly-laced diagram");
    }
    // simply laced
    std::vector<int> degree(base.size(), 0);
    int branch = -1;
    for (std::size_t a = 0; a < base.size(); ++a) {
        for (std::size_t b = 0; b < base.size(); ++b)
            if (a != b && c[a][b] != 0) ++degree[a];
        if (degree[a] == 3) branch = static_cast<int>(a);
        if (degree[a] > 3) throw std::logic_error("classify_component: node of degree > 3");
    }
    if (branch < 0) return expect('A');
    // branch lengths from the degree-3 node
    std::vector<int> lens;
    for (std::size_t b = 0; b < base.size(); ++b) {
        if (static_cast<int>(b) == branch || c[static_cast<std::size_t>(branch)][b] == 0) continue;
        int len = 1;
        std::size_t prev = static_cast<std::size_t>(branch), cur = b;
        for (;;) {
            std::size_t next = base.size();
            for (std::size_t k = 0; k < base.size(); ++k)
                if (k != prev && k != cur && c[cur][k] != 0) next = k;
            if (next == base.size()) break;
            prev = cur;
            cur = next;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    if (lens.size() != 3) throw std::logic_error("classify_component: bad branch structure");
    if (lens[0] == 1 && lens[1] == 1) return expect('D');
    if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4) return expect('E');
    throw std::logic_error("classify_component: unrecognized simply-laced diagram");
    (void)whole;
}

} // namespace

std::string subsystem_type(const Subsystem& s) {
    if (s.members.empty()) return "0";
    std::vector<ComponentType> types;
    for (const auto& comp : subsystem_components(s))
        types.push_back(classify_component(*s.parent, comp, s));
    std::sort(types.begin(), types.end(), [](const ComponentType& a, const ComponentType& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        if (a.letter != b.letter) return a.letter < b.letter;
        return a.short_roots < b.short_roots;
    });
    std::string out;
    for (const auto& t : types) {
        if (!out.empty()) out += "+";
        out += t.str();
    }
    return out;
}

} // namespace jcl::rootcore
