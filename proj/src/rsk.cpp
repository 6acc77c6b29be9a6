#include "injscheme/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace injscheme {

namespace {

// Inserts x by strict row bumping; returns the row where a new cell appeared.
int row_insert(std::vector<std::vector<int>>& rows, int x) {
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            return static_cast<int>(r);
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return static_cast<int>(r);
        }
        std::swap(*it, x);
    }
}

Partition shape_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition{std::move(parts)};
}

}  // namespace

RskPair rsk(const Injection& sigma) {
    const int k = sigma.k(), n = sigma.n();
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (int v : sigma.word()) used[static_cast<std::size_t>(v)] = 1;

    std::vector<std::vector<int>> p_rows, q_labels;
    auto record = [&](int row, int label) {
        if (row == static_cast<int>(q_labels.size())) q_labels.emplace_back();
        q_labels[static_cast<std::size_t>(row)].push_back(label);
    };
    for (int i = 1; i <= k; ++i) record(row_insert(p_rows, sigma(i)), i);
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)]) record(row_insert(p_rows, v), k + 1);

    std::vector<std::vector<int>> q_rows;
    for (const auto& row : q_labels) {
        std::vector<int> kept;
        for (int label : row)
            if (label <= k) kept.push_back(label);
        if (!kept.empty()) q_rows.push_back(std::move(kept));
    }
    return {StandardYoungTableau{shape_of(p_rows), std::move(p_rows)},
            StandardYoungTableau{shape_of(q_rows), std::move(q_rows)}};
}

Injection rsk_inverse(const StandardYoungTableau& p, const StandardYoungTableau& q) {
    const int n = p.size(), k = q.size();
    if (!is_horizontal_strip(p.shape(), q.shape()))
        throw std::invalid_argument("rsk_inverse: shapes are not a horizontal-strip pair");

    std::vector<std::vector<int>> rows = p.rows();
    auto remove_at = [&](int r, int c) {
        if (r < 0 || r >= static_cast<int>(rows.size()) ||
            c != static_cast<int>(rows[static_cast<std::size_t>(r)].size()) - 1 ||
            (r + 1 < static_cast<int>(rows.size()) &&
             static_cast<int>(rows[static_cast<std::size_t>(r + 1)].size()) > c))
            throw std::invalid_argument("rsk_inverse: removal cell is not a corner");
        int value = rows[static_cast<std::size_t>(r)].back();
        rows[static_cast<std::size_t>(r)].pop_back();
        if (rows[static_cast<std::size_t>(r)].empty()) rows.pop_back();
        for (int rr = r - 1; rr >= 0; --rr) {
            auto& row = rows[static_cast<std::size_t>(rr)];
            auto it = std::lower_bound(row.begin(), row.end(), value);
            if (it == row.begin()) throw std::invalid_argument("rsk_inverse: reverse bump failed");
            --it;
            std::swap(*it, value);
        }
        return value;
    };

    // Strip cells leave in reverse creation order: by column, descending.
    std::vector<std::pair<int, int>> strip;  // (col, row)
    for (int r = 0; r < p.shape().length(); ++r)
        for (int c = q.shape().part(r); c < p.shape().part(r); ++c) strip.emplace_back(c, r);
    std::sort(strip.rbegin(), strip.rend());
    for (const auto& [c, r] : strip) remove_at(r, c);

    std::vector<int> word(static_cast<std::size_t>(k), 0);
    for (int label = k; label >= 1; --label)
        word[static_cast<std::size_t>(label - 1)] = remove_at(q.row_of(label), q.col_of(label));
    return {std::move(word), n};
}

}  // namespace injscheme
