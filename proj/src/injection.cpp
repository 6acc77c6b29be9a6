#include "injscheme/injection.hpp"

#include <stdexcept>

namespace injscheme {

Injection::Injection(std::vector<int> word, int n) : word_(std::move(word)), n_(n) {
    if (static_cast<int>(word_.size()) > n_) throw std::invalid_argument("Injection: k exceeds n");
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Injection: values must be distinct and in 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Injection Injection::identity(int k, int n) {
    std::vector<int> w(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return {std::move(w), n};
}

Injection Injection::acted_by(const std::vector<int>& tau, const std::vector<int>& pi) const {
    if (static_cast<int>(tau.size()) != k() || static_cast<int>(pi.size()) != n_)
        throw std::invalid_argument("acted_by: permutation sizes must be (k, n)");
    // (pi o sigma o tau^{-1})(i): position tau(j) receives pi(sigma(j)).
    std::vector<int> w(word_.size());
    for (int j = 1; j <= k(); ++j) {
        int pos = tau[static_cast<std::size_t>(j - 1)];
        w[static_cast<std::size_t>(pos - 1)] = pi[static_cast<std::size_t>(word_[static_cast<std::size_t>(j - 1)] - 1)];
    }
    return {std::move(w), n_};
}

int hamming_distance(const Injection& a, const Injection& b) {
    if (a.k() != b.k() || a.n() != b.n())
        throw std::invalid_argument("hamming_distance: mismatched (k, n)");
    int d = 0;
    for (std::size_t i = 0; i < a.word().size(); ++i)
        if (a.word()[i] != b.word()[i]) ++d;
    return d;
}

void for_each_injection(int k, int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) throw std::invalid_argument("for_each_injection: need 0 <= k <= n");
    std::vector<int> word(static_cast<std::size_t>(k), 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    int pos = 0;
    if (k == 0) {
        fn(word);
        return;
    }
    while (pos >= 0) {
        int v = word[static_cast<std::size_t>(pos)];
        if (v) used[static_cast<std::size_t>(v)] = 0;
        ++v;
        while (v <= n && used[static_cast<std::size_t>(v)]) ++v;
        if (v > n) {
            word[static_cast<std::size_t>(pos)] = 0;
            --pos;
            continue;
        }
        word[static_cast<std::size_t>(pos)] = v;
        used[static_cast<std::size_t>(v)] = 1;
        if (pos == k - 1) {
            fn(word);
        } else {
            ++pos;
        }
    }
}

std::vector<Injection> enumerate_injections(int k, int n) {
    std::vector<Injection> out;
    for_each_injection(k, n, [&](const std::vector<int>& w) { out.emplace_back(w, n); });
    return out;
}

}  // namespace injscheme
