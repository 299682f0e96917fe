#include "jcl/class_calc.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace jcl::jclass {

ClassDatum::ClassDatum(int n_in, Mode mode_in, std::vector<Slot> slots_in)
    : n(n_in), mode(mode_in), slots(std::move(slots_in)) {
    int total = 0;
    for (const Slot& s : slots) {
        if (s.mu.size() != s.m)
            throw std::invalid_argument("ClassDatum: slot partition does not match multiplicity");
        total += s.m;
    }
    if (total != n) throw std::invalid_argument("ClassDatum: slot multiplicities do not sum to n");
    std::sort(slots.begin(), slots.end());
}

bool ClassDatum::operator<(const ClassDatum& o) const {
    if (n != o.n) return n < o.n;
    if (mode != o.mode) return mode < o.mode;
    if (slots.size() != o.slots.size()) return slots.size() < o.slots.size();
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i] == o.slots[i]) continue;
        return slots[i] < o.slots[i];
    }
    return false;
}

std::string ClassDatum::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < slots.size(); ++i) s += (i ? "," : "") + slots[i].str();
    return s + "}";
}

LeviShape::LeviShape(std::vector<int> blocks_in, std::vector<Partition> parts_in)
    : blocks(std::move(blocks_in)), parts(std::move(parts_in)) {
    if (blocks.empty()) throw std::invalid_argument("LeviShape: empty block list");
    if (!parts.empty() && parts.size() != blocks.size())
        throw std::invalid_argument("LeviShape: need one partition per block");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i] <= 0) throw std::invalid_argument("LeviShape: blocks must be positive");
        if (!parts.empty() && parts[i].size() != blocks[i])
            throw std::invalid_argument("LeviShape: partition does not match block size");
    }
    if (parts.empty())
        for (int b : blocks) parts.push_back(Partition::trivial(b));
}

int LeviShape::n() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }

namespace {

std::vector<Slot> all_slots_upto(int n) {
    std::vector<Slot> out;
    for (int m = n; m >= 1; --m)
        for (const Partition& mu : partitions_of(m)) out.push_back(Slot{m, mu});
    std::sort(out.begin(), out.end());
    return out;
}

void enumerate_rec(int remaining, std::size_t min_slot, const std::vector<Slot>& menu,
                   std::vector<Slot>& acc, int n, Mode mode, std::vector<ClassDatum>& out) {
    if (remaining == 0) {
        out.emplace_back(n, mode, acc);
        return;
    }
    for (std::size_t i = min_slot; i < menu.size(); ++i) {
        if (menu[i].m > remaining) continue;
        acc.push_back(menu[i]);
        enumerate_rec(remaining - menu[i].m, i, menu, acc, n, mode, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<ClassDatum> enumerate_classes(int n, Mode mode) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumerate_classes: n capped at 8");
    const std::vector<Slot> menu = all_slots_upto(n);
    std::vector<ClassDatum> out;
    std::vector<Slot> acc;
    enumerate_rec(n, 0, menu, acc, n, mode, out);
    std::sort(out.begin(), out.end());
    return out;
}

int dim_orbit(const PointPattern& pp) {
    int dim = pp.n * pp.n;
    for (const Slot& s : pp.slots) {
        const Partition t = s.mu.transpose();
        for (int j = 0; j < t.length(); ++j) dim -= t.part(j) * t.part(j);
    }
    return dim;
}

int dim_class(const ClassDatum& j) { return dim_orbit(j) + j.num_slots(); }

Partition induce(const LeviShape& ls) { return sum_padded(ls.parts); }

namespace {

/// Enumerates mass-preserving surjections of j-slots onto p-slots; for each
/// one that passes `accept` on every target block, calls `emit`. Targets
/// with equal data are still distinct (they are concrete blocks of the
/// centralizer at the point).
template <class Accept, class Emit>
void for_each_valid_assignment(const ClassDatum& j, const PointPattern& p, Accept accept,
                               Emit emit) {
    const std::size_t nj = j.slots.size(), np = p.slots.size();
    std::vector<int> remaining(np);
    for (std::size_t a = 0; a < np; ++a) remaining[a] = p.slots[a].m;
    std::vector<int> assign(nj, -1);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == nj) {
            for (int r : remaining)
                if (r != 0) return;
            // per-target dominance / equality test
            for (std::size_t a = 0; a < np; ++a) {
                std::vector<Partition> mus;
                for (std::size_t k = 0; k < nj; ++k)
                    if (assign[k] == static_cast<int>(a)) mus.push_back(j.slots[k].mu);
                if (!accept(sum_padded(mus), p.slots[a].mu)) return;
            }
            emit(assign);
            return;
        }
        for (std::size_t a = 0; a < np; ++a) {
            if (remaining[a] < j.slots[i].m) continue;
            remaining[a] -= j.slots[i].m;
            assign[i] = static_cast<int>(a);
            self(self, i + 1);
            assign[i] = -1;
            remaining[a] += j.slots[i].m;
        }
    };
    rec(rec, 0);
}

void require_compatible(const ClassDatum& j, const PointPattern& p, const char* who) {
    if (j.n != p.n) throw std::invalid_argument(std::string(who) + ": different n");
    if (j.mode != p.mode) throw std::invalid_argument(std::string(who) + ": different mode");
}

} // namespace

bool closure_contains(const ClassDatum& j, const PointPattern& p) {
    require_compatible(j, p, "closure_contains");
    bool found = false;
    for_each_valid_assignment(
        j, p, [](const Partition& ind, const Partition& nu) { return ind.dominates(nu); },
        [&](const std::vector<int>&) { found = true; });
    return found;
}

bool regular_closure_contains(const ClassDatum& j, const PointPattern& p) {
    require_compatible(j, p, "regular_closure_contains");
    bool found = false;
    for_each_valid_assignment(
        j, p, [](const Partition& ind, const Partition& nu) { return ind == nu; },
        [&](const std::vector<int>&) { found = true; });
    return found;
}

bool LocalDatum::operator<(const LocalDatum& o) const {
    if (per_block.size() != o.per_block.size()) return per_block.size() < o.per_block.size();
    for (std::size_t a = 0; a < per_block.size(); ++a) {
        const auto& x = per_block[a];
        const auto& y = o.per_block[a];
        if (x.size() != y.size()) return x.size() < y.size();
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k] == y[k]) continue;
            return x[k] < y[k];
        }
    }
    return false;
}

std::vector<LocalDatum> local_data(const ClassDatum& j, const PointPattern& p) {
    require_compatible(j, p, "local_data");
    std::set<LocalDatum> families;
    for_each_valid_assignment(
        j, p, [](const Partition& ind, const Partition& nu) { return ind.dominates(nu); },
        [&](const std::vector<int>& assign) {
            LocalDatum fam;
            fam.per_block.assign(p.slots.size(), {});
            for (std::size_t k = 0; k < j.slots.size(); ++k)
                fam.per_block[static_cast<std::size_t>(assign[k])].push_back(j.slots[k]);
            for (auto& block : fam.per_block) std::sort(block.begin(), block.end());
            families.insert(std::move(fam));
        });
    if (families.empty())
        throw std::invalid_argument("local_data: pattern not contained in the class closure");
    return {families.begin(), families.end()};
}

ClassPoset class_poset(int n, Mode mode) {
    if (n < 1 || n > 6) throw std::invalid_argument("class_poset: n capped at 6");
    ClassPoset ps;
    ps.classes = enumerate_classes(n, mode);
    const std::size_t k = ps.classes.size();
    ps.closure_le.assign(k, std::vector<bool>(k, false));
    ps.regular_le.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t jj = 0; jj < k; ++jj) {
            ps.closure_le[i][jj] = closure_contains(ps.classes[jj], ps.classes[i]);
            ps.regular_le[i][jj] = regular_closure_contains(ps.classes[jj], ps.classes[i]);
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t jj = 0; jj < k; ++jj)
            if (i != jj && ps.closure_le[i][jj] && ps.closure_le[jj][i])
                throw std::logic_error("class_poset: closure order not antisymmetric");
    auto hasse = [&](const std::vector<std::vector<bool>>& le) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t jj = 0; jj < k; ++jj) {
                if (i == jj || !le[i][jj]) continue;
                bool covered = true;
                for (std::size_t m = 0; m < k && covered; ++m)
                    if (m != i && m != jj && le[i][m] && le[m][jj]) covered = false;
                if (covered) edges.emplace_back(static_cast<int>(i), static_cast<int>(jj));
            }
        return edges;
    };
    ps.closure_hasse = hasse(ps.closure_le);
    ps.regular_hasse = hasse(ps.regular_le);
    return ps;
}

std::vector<ClassDatum> sheets(int n, Mode mode) {
    const ClassPoset ps = class_poset(n, mode);
    std::vector<ClassDatum> out;
    for (std::size_t i = 0; i < ps.classes.size(); ++i) {
        bool maximal = true;
        for (std::size_t jj = 0; jj < ps.classes.size() && maximal; ++jj)
            if (i != jj && ps.regular_le[i][jj]) maximal = false;
        if (maximal) out.push_back(ps.classes[i]);
    }
    return out;
}

bool is_closure_normal_gl(const ClassDatum& j) {
    if (j.mode != Mode::group)
        throw std::invalid_argument("is_closure_normal_gl: group mode required");
    for (const Slot& s : j.slots)
        if (!(s == j.slots.front())) return false;
    return true;
}

} // namespace jcl::jclass
