#pragma once

/// Crystallographic root systems with integer root vectors in the simple
/// root basis. Roots are stored positives first (sorted by height, then
/// lexicographically), then the matching negatives, so index arithmetic
/// gives negation. The Cartan matrix follows the convention
/// cartan[i][j] = <alpha_j, alpha_i^vee>, so the simple reflection acts by
/// s_i(beta) = beta - (sum_j cartan[i][j] beta_j) alpha_i.

#include <map>
#include <string>
#include <vector>
#include <stdexcept>

namespace jcl::rootcore {

using RootVec = std::vector<int>;

struct RootSystem {
    std::string type_label;
    int rank = 0;
    std::vector<RootVec> roots;
    std::vector<std::vector<int>> cartan;
    std::vector<int> simple_indices;
    // integer symmetric bilinear form on the simple basis ((alpha_i, alpha_j),
    // scaled per irreducible component so entries stay integral)
    std::vector<std::vector<long>> form;
    std::vector<std::vector<int>> component_simples; // groups of simple indices 0..rank-1
    std::vector<char> component_letters;
    std::vector<int> component_ranks;

    int num_positive() const { return static_cast<int>(roots.size()) / 2; }
    bool is_positive(int idx) const { return idx < num_positive(); }
    int negate(int idx) const {
        const int np = num_positive();
        return idx < np ? idx + np : idx - np;
    }
    std::size_t size() const { return roots.size(); }

    /// Index of a coefficient vector among the roots, -1 when absent.
    int root_index(const RootVec& v) const {
        auto it = index_.find(v);
        return it == index_.end() ? -1 : it->second;
    }
    /// Index of roots[i] + roots[j], -1 when the sum is not a root.
    int add_indices(int i, int j) const {
        RootVec s = roots[static_cast<std::size_t>(i)];
        const RootVec& b = roots[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += b[k];
        return root_index(s);
    }

    long pairing(const RootVec& a, const RootVec& b) const {
        long acc = 0;
        for (int i = 0; i < rank; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < rank; ++j)
                acc += static_cast<long>(a[static_cast<std::size_t>(i)]) *
                       b[static_cast<std::size_t>(j)] *
                       form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return acc;
    }
    long norm2(int idx) const {
        const RootVec& r = roots[static_cast<std::size_t>(idx)];
        return pairing(r, r);
    }

    /// Irreducible parent component (index into component_simples) a root
    /// belongs to, determined by the support of its coefficient vector.
    int parent_component_of_root(int idx) const;

    void finalize(); // builds the lookup index; called by the constructors

private:
    std::map<RootVec, int> index_;
};

/// Builder for the irreducible types. Valid inputs: A (rank >= 1),
/// B, C (rank >= 2), D (rank >= 4), E (6..8), F (4), G (2).
RootSystem build_root_system(char type, int rank);

/// Disjoint union, with block-diagonal Cartan matrix.
RootSystem product(const RootSystem& a, const RootSystem& b);

/// Parses labels like "C2" or "A2+A1+B2" into a (possibly reducible) system.
RootSystem parse_root_system(const std::string& label);

/// Subset of the roots of a fixed parent system, closed under negation and
/// closed under addition within the parent (validated on construction).
struct Subsystem {
    const RootSystem* parent = nullptr;
    std::vector<int> members; // sorted root indices

    Subsystem() = default;
    Subsystem(const RootSystem& rs, std::vector<int> idx, bool validate = true);

    bool contains(int idx) const;
    bool operator==(const Subsystem& o) const { return members == o.members; }
};

/// Connected components under non-orthogonality; each is a sorted list of
/// member root indices.
std::vector<std::vector<int>> subsystem_components(const Subsystem& s);

/// Simple system of the subsystem with respect to the parent's positivity:
/// the positive members that are not sums of two positive members.
std::vector<int> subsystem_base(const Subsystem& s);

/// Highest root of one irreducible component (members must form a single
/// component, base restricted accordingly).
int component_highest_root(const RootSystem& rs, const std::vector<int>& comp_members,
                           const std::vector<int>& comp_base);

/// Additive-and-negation closure of a set of root indices within the parent.
std::vector<int> additive_closure(const RootSystem& rs, std::vector<int> seed);

/// Type decomposition like "A2", "A1+A1~", "0" for the empty subsystem.
/// A trailing '~' marks a component consisting of short roots of a parent
/// component with two root lengths.
std::string subsystem_type(const Subsystem& s);

} // namespace jcl::rootcore
