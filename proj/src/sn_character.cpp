#include "injscheme/sn_character.hpp"

#include <algorithm>
#include <stdexcept>

namespace injscheme {

SnCharacters::SnCharacters(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("SnCharacters: negative n");
    classes_ = enumerate_partitions(n);
    for (std::size_t i = 0; i < classes_.size(); ++i)
        class_lookup_[classes_[i].parts()] = static_cast<int>(i);
}

int SnCharacters::class_index(const Partition& cls) const {
    auto it = class_lookup_.find(cls.parts());
    if (it == class_lookup_.end()) throw std::invalid_argument("class_index: not a class of S_n");
    return it->second;
}

Int SnCharacters::class_size(const Partition& cls) const {
    if (cls.weight() != n_) throw std::invalid_argument("class_size: cycle type must sum to n");
    Int z = 1;
    for (int i = 1; i <= n_; ++i) {
        int m = cls.count_part(i);
        if (m == 0) continue;
        Int p_i;
        mpz_ui_pow_ui(p_i.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
        z *= p_i * factorial(m);
    }
    return exact_div(factorial(n_), z, "class_size");
}

// Border strips via beta-numbers: removing a strip of size m moves one
// beta-number down by m onto a free slot; the sign is (-1)^{slots jumped}.
Int SnCharacters::chi_rec(const std::vector<int>& lambda, const std::vector<int>& cls) const {
    if (cls.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, cls);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int m = cls.front();
    std::vector<int> rest(cls.begin() + 1, cls.end());
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

    Int total = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[static_cast<std::size_t>(i)];
        if (b < m) continue;
        int target = b - m;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            int bj = beta[static_cast<std::size_t>(j)];
            if (bj == target) occupied = true;
            if (bj > target && bj < b) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> sub;
        for (int j = 0; j < len; ++j) {
            int part = nb[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0) sub.push_back(part);
        }
        Int term = chi_rec(sub, rest);
        total += (jumped % 2 == 0) ? term : -term;
    }
    memo_[std::move(key)] = total;
    return total;
}

Int SnCharacters::chi(const Partition& lambda, const Partition& cls) const {
    if (lambda.weight() != n_ || cls.weight() != n_)
        throw std::invalid_argument("chi: both partitions must have weight n");
    return chi_rec(lambda.parts(), cls.parts());
}

Int sn_character(const Partition& lambda, const Partition& cls) {
    SnCharacters table(lambda.weight());
    return table.chi(lambda, cls);
}

Partition cycle_type(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            ++len;
            j = word[static_cast<std::size_t>(j - 1)];
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition{std::move(parts)};
}

}  // namespace injscheme
