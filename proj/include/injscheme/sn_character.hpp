#pragma once

#include <map>
#include <vector>

#include "injscheme/partition.hpp"

namespace injscheme {

/// Irreducible characters of S_n by the Murnaghan-Nakayama border-strip
/// recursion, memoized across calls. Values are exact integers.
class SnCharacters {
public:
    explicit SnCharacters(int n);

    int n() const { return n_; }
    const std::vector<Partition>& classes() const { return classes_; }
    int class_index(const Partition& cls) const;

    /// Conjugacy class size: n! / prod_i i^{m_i} m_i!.
    Int class_size(const Partition& cls) const;

    /// chi_lambda evaluated on the class of the given cycle type.
    Int chi(const Partition& lambda, const Partition& cls) const;

private:
    int n_;
    std::vector<Partition> classes_;
    std::map<std::vector<int>, int> class_lookup_;
    mutable std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo_;

    Int chi_rec(const std::vector<int>& lambda, const std::vector<int>& cls) const;
};

/// One-off evaluation; prefer a shared SnCharacters instance in loops.
Int sn_character(const Partition& lambda, const Partition& cls);

/// Cycle type of a permutation in one-line form (word[i-1] = image of i).
Partition cycle_type(const std::vector<int>& word);

}  // namespace injscheme
