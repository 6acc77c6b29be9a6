#pragma once

#include <vector>

namespace injscheme::golden {

// Published LP bounds used by the `tables` command as regression data.
// Values are decimal strings; triv is empty where the source table has no
// such column. Entries marked non_lp_source were printed from a non-LP
// derivation in the source; our LP reproduces them exactly anyway.
struct TableRow {
    int table;           // 1 = injection min distance, 2 = permutation min
                         // distance, 3 = equidistant, 4 = explicit sets
    int n, k;
    const char* dset;    // "4" for min distance d, "1,3" for explicit sets
    const char* bound;
    const char* triv;    // "" when absent
    bool non_lp_source;
};

const std::vector<TableRow>& table_rows();

}  // namespace injscheme::golden
