#pragma once

#include <bit>
#include <utility>
#include <vector>

#include "injscheme/injection.hpp"
#include "injscheme/tableau.hpp"

namespace injscheme {

/// The distinguished tableau pair attached to a horizontal-strip pair
/// (mu of k, lambda of n): s reads 1..k along the rows of mu; t extends s
/// by the strip cells of lambda/mu labeled k+1..n in column order.
std::pair<StandardYoungTableau, StandardYoungTableau> canonical_pair(const Partition& mu,
                                                                     const Partition& lambda);

/// Preprocessed form of a tableau pair (s, t): evaluates the signed number
/// of column-stabilizer elements pi of t for which ({s}, {pi t}) covers a
/// given injection. The sum factorizes over the columns of t; each column
/// contributes the determinant of its 0/1 placement matrix (one-hot rows
/// for values in the image of sigma, all-ones rows otherwise), so every
/// factor and the total lie in {-1, 0, 1}.
/// Not thread-safe; use one kernel per thread.
class CoverKernel {
public:
    CoverKernel(const StandardYoungTableau& s, const StandardYoungTableau& t);

    int k() const { return k_; }
    int n() const { return n_; }

    /// word[i] is sigma(i+1); values 1-based, pairwise distinct.
    template <typename WordT>
    int signed_count(const WordT* word) const {
        for (int i = 0; i < k_; ++i)
            forced_[static_cast<std::size_t>(
                slot_of_value_[static_cast<std::size_t>(word[i])])] =
                srow_of_domain_[static_cast<std::size_t>(i)];

        int sign = 1;
        for (int c = 0; c < num_cols_ && sign != 0; ++c) {
            const int h = col_height_[static_cast<std::size_t>(c)];
            const int base = col_offset_[static_cast<std::size_t>(c)];
            unsigned used = 0;
            int free_pos = -1, free_cnt = 0;
            for (int pos = 0; pos < h; ++pos) {
                int tgt = forced_[static_cast<std::size_t>(base + pos)];
                if (tgt < 0) {
                    if (++free_cnt > 1) {
                        sign = 0;
                        break;
                    }
                    free_pos = pos;
                } else if (tgt >= h || (used & (1u << tgt))) {
                    sign = 0;
                    break;
                } else {
                    used |= 1u << tgt;
                    perm_[static_cast<std::size_t>(pos)] = tgt;
                }
            }
            if (sign == 0) break;
            if (free_cnt == 1) {
                // the one unconstrained entry takes the one unused row
                unsigned missing = ~used & ((1u << h) - 1u);
                perm_[static_cast<std::size_t>(free_pos)] = std::countr_zero(missing);
            }
            int inversions = 0;
            for (int aa = 0; aa < h; ++aa)
                for (int bb = aa + 1; bb < h; ++bb)
                    if (perm_[static_cast<std::size_t>(aa)] > perm_[static_cast<std::size_t>(bb)])
                        ++inversions;
            if (inversions & 1) sign = -sign;
        }

        for (int i = 0; i < k_; ++i)
            forced_[static_cast<std::size_t>(
                slot_of_value_[static_cast<std::size_t>(word[i])])] = -1;
        return sign;
    }

private:
    int k_, n_, num_cols_;
    std::vector<int> col_offset_;      // per column, start into slot arrays
    std::vector<int> col_height_;
    std::vector<int> slot_of_value_;   // value -> col_offset[col] + position
    std::vector<int> srow_of_domain_;  // i-1 -> row of i in s
    mutable std::vector<int> forced_;  // per slot, target row or -1
    mutable std::vector<int> perm_;    // scratch, one column at a time
};

/// One-off form of the kernel above.
int signed_cover_count(const Injection& sigma, const StandardYoungTableau& s,
                       const StandardYoungTableau& t);

}  // namespace injscheme
