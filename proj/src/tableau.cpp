#include "injscheme/tableau.hpp"

#include <stdexcept>

namespace injscheme {

StandardYoungTableau::StandardYoungTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    int n = shape_.weight();
    if (static_cast<int>(rows_.size()) != shape_.length())
        throw std::invalid_argument("SYT: row count does not match shape");
    row_of_.assign(static_cast<std::size_t>(n) + 1, -1);
    col_of_.assign(static_cast<std::size_t>(n) + 1, -1);
    for (int r = 0; r < shape_.length(); ++r) {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        if (static_cast<int>(row.size()) != shape_.part(r))
            throw std::invalid_argument("SYT: row length does not match shape");
        for (int c = 0; c < static_cast<int>(row.size()); ++c) {
            int v = row[static_cast<std::size_t>(c)];
            if (v < 1 || v > n || row_of_[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("SYT: entries must be a permutation of 1..n");
            if (c > 0 && row[static_cast<std::size_t>(c - 1)] >= v)
                throw std::invalid_argument("SYT: rows must strictly increase");
            if (r > 0 && rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v)
                throw std::invalid_argument("SYT: columns must strictly increase");
            row_of_[static_cast<std::size_t>(v)] = r;
            col_of_[static_cast<std::size_t>(v)] = c;
        }
    }
}

std::string StandardYoungTableau::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += "/";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) s += ",";
            s += std::to_string(rows_[r][c]);
        }
    }
    return s;
}

Tabloid::Tabloid(const Partition& shape, std::vector<int> row_of)
    : shape_(shape), row_of_(std::move(row_of)) {
    if (static_cast<int>(row_of_.size()) != shape.weight() + 1)
        throw std::invalid_argument("Tabloid: value map must cover 1..n");
    std::vector<int> counts(static_cast<std::size_t>(shape.length()), 0);
    for (int v = 1; v <= shape.weight(); ++v) {
        int r = row_of_[static_cast<std::size_t>(v)];
        if (r < 0 || r >= shape.length()) throw std::invalid_argument("Tabloid: row index out of range");
        ++counts[static_cast<std::size_t>(r)];
    }
    for (int r = 0; r < shape.length(); ++r)
        if (counts[static_cast<std::size_t>(r)] != shape.part(r))
            throw std::invalid_argument("Tabloid: row sizes do not match shape");
}

Tabloid::Tabloid(const StandardYoungTableau& t) : shape_(t.shape()) {
    row_of_.assign(static_cast<std::size_t>(t.size()) + 1, -1);
    for (int v = 1; v <= t.size(); ++v) row_of_[static_cast<std::size_t>(v)] = t.row_of(v);
}

namespace {

void fill_syt(const Partition& shape, int next, std::vector<int>& filled,
              std::vector<std::vector<int>>& rows, std::vector<StandardYoungTableau>& out) {
    int n = shape.weight();
    if (next > n) {
        out.emplace_back(shape, rows);
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        int c = filled[static_cast<std::size_t>(r)];
        if (c >= shape.part(r)) continue;
        if (r > 0 && filled[static_cast<std::size_t>(r - 1)] <= c) continue;  // cell above must be filled
        rows[static_cast<std::size_t>(r)].push_back(next);
        ++filled[static_cast<std::size_t>(r)];
        fill_syt(shape, next + 1, filled, rows, out);
        --filled[static_cast<std::size_t>(r)];
        rows[static_cast<std::size_t>(r)].pop_back();
    }
}

}  // namespace

std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape) {
    std::vector<StandardYoungTableau> out;
    std::vector<int> filled(static_cast<std::size_t>(shape.length()), 0);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    fill_syt(shape, 1, filled, rows, out);
    return out;
}

StandardYoungTableau row_reading_tableau(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int r = 0; r < shape.length(); ++r) {
        std::vector<int> row(static_cast<std::size_t>(shape.part(r)));
        for (auto& cell : row) cell = next++;
        rows.push_back(std::move(row));
    }
    return {shape, std::move(rows)};
}

}  // namespace injscheme
