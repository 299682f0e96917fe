#include "jcl/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jcl::jclass {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::trivial(int m) { return Partition(std::vector<int>(static_cast<std::size_t>(m), 1)); }

Partition Partition::row(int m) {
    if (m == 0) return Partition();
    return Partition(std::vector<int>{m});
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
    std::vector<int> out;
    if (!parts_.empty()) {
        for (int j = 1; j <= parts_[0]; ++j) {
            int count = 0;
            for (int p : parts_)
                if (p >= j) ++count;
            out.push_back(count);
        }
    }
    return Partition(std::move(out));
}

bool Partition::dominates(const Partition& other) const {
    if (size() != other.size())
        throw std::invalid_argument("Partition::dominates: sizes differ");
    int a = 0, b = 0;
    const int len = std::max(length(), other.length());
    for (int i = 0; i < len; ++i) {
        a += part(i);
        b += other.part(i);
        if (a < b) return false;
    }
    return true;
}

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i)
        s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + "]";
}

namespace {
void gen(int remaining, int maxpart, std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        acc.push_back(p);
        gen(remaining - p, p, acc, out);
        acc.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen(n, n, acc, out);
    if (n == 0) out = {Partition()};
    return out;
}

Partition sum_padded(const std::vector<Partition>& mus) {
    int len = 0;
    for (const auto& mu : mus) len = std::max(len, mu.length());
    std::vector<int> out(static_cast<std::size_t>(len), 0);
    for (const auto& mu : mus)
        for (int j = 0; j < mu.length(); ++j) out[static_cast<std::size_t>(j)] += mu.part(j);
    return Partition(std::move(out));
}

} // namespace jcl::jclass
