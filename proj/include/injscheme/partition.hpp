#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "injscheme/bigint.hpp"

namespace injscheme {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (weight 0) is a valid value. Trailing zeros are never stored; contexts
/// that need them (zero-length paths) carry an explicit pad count instead.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition single_row(int n);  // (n), or empty when n == 0

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }

    Partition transpose() const;

    /// Row-wise containment: other_i <= this_i for all i.
    bool contains(const Partition& inner) const;

    /// Multiplicity of a given part size.
    int count_part(int value) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    /// Canonical total order: by weight, then lexicographically descending
    /// on parts, so (n) comes first and (1^n) last among partitions of n.
    static bool canonical_less(const Partition& a, const Partition& b);

    /// "3,1" or "2^2,1"; "-" for the empty partition.
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n (optionally with at most max_parts parts), in the
/// canonical order above. n = 0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_parts = std::nullopt);

/// Skew shape outer/inner. Construction requires row-wise containment.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.weight() - inner_.weight(); }

    /// Skew cells as (row, col), row-major.
    std::vector<std::pair<int, int>> cells() const;

    /// No two skew cells in the same column.
    bool is_horizontal_strip() const;

private:
    Partition outer_, inner_;
};

/// Number of standard Young tableaux of the given shape, by the hook
/// length formula: f^shape = n! / prod(hooks).
Int syt_count(const Partition& shape);

/// True iff inner fits in outer row-wise and outer/inner has no two cells
/// in the same column, i.e. outer_{i+1} <= inner_i <= outer_i for all i.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

/// All pairs (mu of k, lambda of n) with lambda/mu a horizontal strip,
/// ordered by mu then lambda in canonical partition order. These pairs
/// index both the irreducibles and the associate classes of the scheme.
std::vector<std::pair<Partition, Partition>> strip_pairs(int k, int n);

}  // namespace injscheme
