#pragma once

#include <string>
#include <vector>

#include "injscheme/partition.hpp"

namespace injscheme {

/// Standard Young tableau: rows and columns strictly increasing, entries
/// exactly 1..n. Rows and columns are 0-indexed; entries are 1-based.
class StandardYoungTableau {
public:
    StandardYoungTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.weight(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int r, int c) const { return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    int row_of(int value) const { return row_of_[static_cast<std::size_t>(value)]; }
    int col_of(int value) const { return col_of_[static_cast<std::size_t>(value)]; }

    bool operator==(const StandardYoungTableau& o) const { return rows_ == o.rows_; }

    std::string to_string() const;  // rows separated by '/', e.g. "1,2,4/3"

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_of_, col_of_;  // indexed by entry value
};

/// Young tableau with unordered rows: only the value -> row assignment
/// matters. Shape is implicit in the row sizes.
class Tabloid {
public:
    Tabloid(const Partition& shape, std::vector<int> row_of);
    explicit Tabloid(const StandardYoungTableau& t);

    int row_of(int value) const { return row_of_[static_cast<std::size_t>(value)]; }
    int size() const { return static_cast<int>(row_of_.size()) - 1; }
    const Partition& shape() const { return shape_; }

    bool operator==(const Tabloid& o) const { return row_of_ == o.row_of_; }

private:
    Partition shape_;
    std::vector<int> row_of_;  // row_of_[v] for v in 1..n; index 0 unused
};

/// All standard tableaux of the given shape, deterministic order. Count
/// equals syt_count(shape); this is the enumeration oracle for it.
std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape);

/// Fill 1..n along rows, left to right, top to bottom.
StandardYoungTableau row_reading_tableau(const Partition& shape);

}  // namespace injscheme
