#include "injscheme/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace injscheme {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::single_row(int n) {
    if (n < 0) throw std::invalid_argument("Partition::single_row: negative");
    return n == 0 ? Partition{} : Partition{{n}};
}

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> t(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++t[static_cast<std::size_t>(c)];
    return Partition{std::move(t)};
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.parts_.size(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

int Partition::count_part(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

bool Partition::canonical_less(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                        a.parts_.begin(), a.parts_.end());
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string s;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!s.empty()) s += ",";
        s += std::to_string(parts_[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

namespace {

void emit_partitions(int remaining, int max_part, int parts_left,
                     std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (parts_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        emit_partitions(remaining - p, p, parts_left - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_parts) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    int cap = max_parts.value_or(n);
    if (cap < 0) throw std::invalid_argument("enumerate_partitions: negative max_parts");
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_partitions(n, std::max(n, 1), std::min(cap, n), acc, out);
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("SkewShape: inner must fit inside outer row-wise");
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < outer_.length(); ++r)
        for (int c = inner_.part(r); c < outer_.part(r); ++c) out.emplace_back(r, c);
    return out;
}

bool SkewShape::is_horizontal_strip() const {
    return injscheme::is_horizontal_strip(outer_, inner_);
}

Int syt_count(const Partition& shape) {
    const auto& rows = shape.parts();
    Partition t = shape.transpose();
    Int hooks = 1;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < rows[r]; ++c) {
            int arm = rows[r] - c - 1;
            int leg = t.parts()[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
            hooks *= arm + leg + 1;
        }
    return exact_div(factorial(shape.weight()), hooks, "syt_count");
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    for (int i = 0; i < outer.length(); ++i)
        if (outer.part(i + 1) > inner.part(i)) return false;
    return true;
}

std::vector<std::pair<Partition, Partition>> strip_pairs(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("strip_pairs: need 0 <= k <= n");
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& mu : enumerate_partitions(k))
        for (const auto& lambda : enumerate_partitions(n))
            if (is_horizontal_strip(lambda, mu)) out.emplace_back(mu, lambda);
    return out;
}

}  // namespace injscheme
