#pragma once

/// Integer partitions with the operations the class combinatorics runs on:
/// transpose, dominance order, componentwise (padded) sums.

#include <string>
#include <vector>

namespace jcl::jclass {

class Partition {
public:
    Partition() = default; // empty partition of 0
    explicit Partition(std::vector<int> parts);
    static Partition trivial(int m); // (1^m)
    static Partition row(int m);     // (m)

    int size() const;                 // sum of the parts
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    Partition transpose() const;
    /// Dominance: this >= other, i.e. prefix sums of this are >= those of
    /// other. Requires equal sizes.
    bool dominates(const Partition& other) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    /// Lexicographic on the part lists (a convenient total order, not the
    /// dominance order).
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
};

/// All partitions of n, ordered lexicographically descending, so the first
/// entry is (n) and the last is (1^n).
std::vector<Partition> partitions_of(int n);

/// Componentwise sum with zero padding: (sum)_j = sum_i mu_i[j].
Partition sum_padded(const std::vector<Partition>& mus);

} // namespace jcl::jclass
