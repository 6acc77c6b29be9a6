#include "injscheme/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace injscheme {

std::pair<StandardYoungTableau, StandardYoungTableau> canonical_pair(const Partition& mu,
                                                                     const Partition& lambda) {
    if (!is_horizontal_strip(lambda, mu))
        throw std::invalid_argument("canonical_pair: lambda/mu is not a horizontal strip");
    const int k = mu.weight();
    StandardYoungTableau s = row_reading_tableau(mu);

    std::vector<std::pair<int, int>> strip;  // (col, row), one cell per column
    for (const auto& [r, c] : SkewShape(lambda, mu).cells()) strip.emplace_back(c, r);
    std::sort(strip.begin(), strip.end());

    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
    for (int r = 0; r < mu.length(); ++r)
        rows[static_cast<std::size_t>(r)] = s.rows()[static_cast<std::size_t>(r)];
    int label = k;
    for (const auto& [c, r] : strip) {
        (void)c;
        rows[static_cast<std::size_t>(r)].push_back(++label);
    }
    // Within a row the strip cells are consecutive rightmost cells in column
    // order, so after sorting each row the labels sit in their strip cells.
    for (auto& row : rows) std::sort(row.begin(), row.end());
    return {std::move(s), StandardYoungTableau{lambda, std::move(rows)}};
}

CoverKernel::CoverKernel(const StandardYoungTableau& s, const StandardYoungTableau& t)
    : k_(s.size()), n_(t.size()) {
    if (!is_horizontal_strip(t.shape(), s.shape()))
        throw std::invalid_argument("CoverKernel: shapes are not a horizontal-strip pair");
    Partition cols = t.shape().transpose();
    num_cols_ = cols.length();
    col_offset_.resize(static_cast<std::size_t>(num_cols_));
    col_height_.resize(static_cast<std::size_t>(num_cols_));
    int off = 0;
    for (int c = 0; c < num_cols_; ++c) {
        if (cols.part(c) >= 32) throw std::invalid_argument("CoverKernel: column height limit is 31");
        col_offset_[static_cast<std::size_t>(c)] = off;
        col_height_[static_cast<std::size_t>(c)] = cols.part(c);
        off += cols.part(c);
    }
    slot_of_value_.assign(static_cast<std::size_t>(n_) + 1, -1);
    for (int v = 1; v <= n_; ++v)
        slot_of_value_[static_cast<std::size_t>(v)] =
            col_offset_[static_cast<std::size_t>(t.col_of(v))] + t.row_of(v);
    srow_of_domain_.resize(static_cast<std::size_t>(k_));
    for (int i = 1; i <= k_; ++i) srow_of_domain_[static_cast<std::size_t>(i - 1)] = s.row_of(i);
    forced_.assign(static_cast<std::size_t>(n_), -1);
    perm_.assign(static_cast<std::size_t>(n_) + 1, 0);
}

int signed_cover_count(const Injection& sigma, const StandardYoungTableau& s,
                       const StandardYoungTableau& t) {
    if (s.size() != sigma.k() || t.size() != sigma.n())
        throw std::invalid_argument("signed_cover_count: sizes do not match sigma");
    CoverKernel kernel(s, t);
    return kernel.signed_count(sigma.word().data());
}

}  // namespace injscheme
