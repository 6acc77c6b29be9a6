#include "injscheme/lp.hpp"

#include <stdexcept>

namespace injscheme {

LpResult solve_lp_max(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                      const std::vector<Rat>& c) {
    const int m = static_cast<int>(a.size());
    const int q = static_cast<int>(c.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != q)
            throw std::invalid_argument("solve_lp_max: ragged constraint matrix");
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("solve_lp_max: |b| != rows");
    for (const auto& bi : b)
        if (bi < 0) throw std::invalid_argument("solve_lp_max: requires b >= 0");

    const int cols = q + m + 1;  // structural vars, slacks, rhs
    std::vector<std::vector<Rat>> t(static_cast<std::size_t>(m),
                                    std::vector<Rat>(static_cast<std::size_t>(cols), Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < q; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(q + i)] = 1;
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols - 1)] = b[static_cast<std::size_t>(i)];
    }
    // z[j] = (c_B B^-1 A - c)_j; optimal when all entries are nonnegative.
    std::vector<Rat> z(static_cast<std::size_t>(cols), Rat(0));
    for (int j = 0; j < q; ++j) z[static_cast<std::size_t>(j)] = -c[static_cast<std::size_t>(j)];
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = q + i;

    while (true) {
        int enter = -1;
        for (int j = 0; j < q + m; ++j)
            if (z[static_cast<std::size_t>(j)] < 0) {
                enter = j;
                break;  // Bland: lowest-index improving column
            }
        if (enter < 0) break;

        int leave = -1;
        Rat best_ratio;
        for (int i = 0; i < m; ++i) {
            const Rat& coeff = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (coeff <= 0) continue;
            Rat ratio = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols - 1)] / coeff;
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw UnboundedLpError{};

        auto& prow = t[static_cast<std::size_t>(leave)];
        Rat pivot = prow[static_cast<std::size_t>(enter)];
        for (auto& e : prow) e /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            Rat f = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (f == 0) continue;
            auto& row = t[static_cast<std::size_t>(i)];
            for (int j = 0; j < cols; ++j) row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
        }
        Rat f = z[static_cast<std::size_t>(enter)];
        if (f != 0)
            for (int j = 0; j < cols; ++j) z[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    LpResult result;
    result.optimum = z[static_cast<std::size_t>(cols - 1)];
    result.x.assign(static_cast<std::size_t>(q), Rat(0));
    for (int i = 0; i < m; ++i)
        if (basis[static_cast<std::size_t>(i)] < q)
            result.x[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] =
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols - 1)];
    return result;
}

}  // namespace injscheme
