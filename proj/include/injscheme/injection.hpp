#pragma once

#include <functional>
#include <vector>

#include "injscheme/bigint.hpp"

namespace injscheme {

/// Injection from [k] to [n]: a word of k pairwise-distinct values in 1..n.
class Injection {
public:
    Injection(std::vector<int> word, int n);

    static Injection identity(int k, int n);

    int k() const { return static_cast<int>(word_.size()); }
    int n() const { return n_; }
    const std::vector<int>& word() const { return word_; }
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }  // 1-based

    /// Group action of (tau, pi) in S_k x S_n: sigma -> pi o sigma o tau^{-1}.
    /// tau and pi are one-line words of lengths k and n.
    Injection acted_by(const std::vector<int>& tau, const std::vector<int>& pi) const;

    bool operator==(const Injection& o) const { return n_ == o.n_ && word_ == o.word_; }
    bool operator<(const Injection& o) const { return word_ < o.word_; }

private:
    std::vector<int> word_;
    int n_;
};

/// Positions where the words disagree. Requires matching (k, n).
int hamming_distance(const Injection& a, const Injection& b);

/// All of S_{k,n} in lexicographic word order. Size n!/(n-k)!; intended for
/// brute-force validators and the table sweep, capped by callers.
std::vector<Injection> enumerate_injections(int k, int n);

/// Visitor form of the above, avoiding materialization.
void for_each_injection(int k, int n, const std::function<void(const std::vector<int>&)>& fn);

inline Int injection_count(int k, int n) { return falling_factorial(n, k); }

}  // namespace injscheme
