#pragma once

/// The combinatorial calculus of Jordan classes of GL_n (group mode) and
/// decomposition classes of gl_n (Lie algebra mode).
///
/// A class is a multiset of slots (m_i, mu_i) with mu_i a partition of m_i
/// and sum m_i = n: the slots record the eigenvalue multiplicities of the
/// semisimple part (equivalently the block sizes of the Levi centralizer
/// Prod GL_{m_i}) and the Jordan types of the unipotent/nilpotent part per
/// block. Eigenvalue values range freely inside a class, so the same data
/// also describes the "pattern" of a single concrete element; PointPattern
/// is that reading of the type.
///
/// Closure tests merge slots: a pattern lies in the closure of a class
/// exactly when some mass-preserving surjection of slots exists for which
/// each target partition is dominated by the induced (componentwise sum)
/// partition of its preimage; the regular closure requires equality.

#include <string>
#include <utility>
#include <vector>

#include "jcl/partition.hpp"
#include "jcl/jordan.hpp"

namespace jcl::jclass {

enum class Mode { group, liealg };

inline std::string mode_name(Mode m) { return m == Mode::group ? "group" : "liealg"; }

struct Slot {
    int m = 0;
    Partition mu;
    bool operator==(const Slot& o) const { return m == o.m && mu == o.mu; }
    /// Canonical slot order: m descending, then mu lexicographically
    /// descending, so structural equality of class data is multiset equality.
    bool operator<(const Slot& o) const {
        if (m != o.m) return m > o.m;
        return o.mu < mu;
    }
    std::string str() const { return "(" + std::to_string(m) + "," + mu.str() + ")"; }
};

struct ClassDatum {
    int n = 0;
    Mode mode = Mode::liealg;
    std::vector<Slot> slots;

    ClassDatum() = default;
    ClassDatum(int n, Mode mode, std::vector<Slot> slots);

    int num_slots() const { return static_cast<int>(slots.size()); }
    bool operator==(const ClassDatum& o) const {
        return n == o.n && mode == o.mode && slots == o.slots;
    }
    bool operator<(const ClassDatum& o) const; // deterministic total order
    std::string str() const;
};

/// The Jordan pattern of one concrete element: same data, read as the
/// eigenvalue-collision pattern plus Jordan types of a point.
using PointPattern = ClassDatum;

struct LeviShape {
    std::vector<int> blocks;
    std::vector<Partition> parts; // parts[i] is a partition of blocks[i]
    LeviShape(std::vector<int> blocks, std::vector<Partition> parts);
    int n() const;
};

/// All class data for gl_n / GL_n; n capped at 8.
std::vector<ClassDatum> enumerate_classes(int n, Mode mode);

/// Adjoint/conjugacy orbit dimension of a pattern:
/// n^2 - sum_i sum_j ((mu_i^T)_j)^2.
int dim_orbit(const PointPattern& pp);

/// Class dimension: orbit dimension of a generic point plus the number of
/// slots (the dimension of the centre of the Levi centralizer).
int dim_class(const ClassDatum& j);

/// Induced nilpotent orbit of a Levi shape: componentwise sum of the padded
/// partitions (type A induction rule; from trivial orbits this is the
/// Richardson orbit).
Partition induce(const LeviShape& ls);

bool closure_contains(const ClassDatum& j, const PointPattern& p);
bool regular_closure_contains(const ClassDatum& j, const PointPattern& p);

/// One element of the local index set at a point of pattern p in the
/// closure of j: for every slot of p (a block of the centralizer at the
/// point), the multiset of j-slots that merged into it.
struct LocalDatum {
    std::vector<std::vector<Slot>> per_block;
    bool operator==(const LocalDatum& o) const { return per_block == o.per_block; }
    bool operator<(const LocalDatum& o) const;
};

/// All distinct merge families; requires closure_contains(j, p).
std::vector<LocalDatum> local_data(const ClassDatum& j, const PointPattern& p);

struct ClassPoset {
    std::vector<ClassDatum> classes;
    // le[i][j] == true iff class i is contained in the (regular) closure of
    // class j
    std::vector<std::vector<bool>> closure_le;
    std::vector<std::vector<bool>> regular_le;
    std::vector<std::pair<int, int>> closure_hasse; // covering pairs (lower, upper)
    std::vector<std::pair<int, int>> regular_hasse;
};

/// Both partial orders on enumerate_classes(n, mode); n capped at 6.
ClassPoset class_poset(int n, Mode mode);

/// Maximal classes in the regular-closure order; their regular closures are
/// the sheets. n capped at 6.
std::vector<ClassDatum> sheets(int n, Mode mode);

/// Normality of the class closure in GL_n: true exactly when all slots are
/// equal as (multiplicity, partition) pairs.
bool is_closure_normal_gl(const ClassDatum& j);

/// Bridge from a concrete Jordan certificate: forget eigenvalues, keep the
/// (multiplicity, partition) multiset.
template <class K>
PointPattern pattern_of(const exactnum::JordanData<K>& jd, Mode mode) {
    std::vector<Slot> slots;
    for (const auto& [eig, parts] : jd.blocks) {
        Partition mu{parts};
        slots.push_back(Slot{mu.size(), mu});
    }
    return ClassDatum(static_cast<int>(jd.n), mode, std::move(slots));
}

} // namespace jcl::jclass
