#pragma once

#include <stdexcept>
#include <vector>

#include "injscheme/bigint.hpp"

namespace injscheme {

struct UnboundedLpError : std::runtime_error {
    UnboundedLpError() : std::runtime_error("linear program is unbounded") {}
};

struct LpResult {
    Rat optimum;
    std::vector<Rat> x;
};

/// maximize c.x subject to A x <= b, x >= 0, over exact rationals.
/// Requires b >= 0 so the slack basis is feasible. Primal simplex with
/// Bland's anti-cycling rule; ties broken by lowest index, so the run is
/// deterministic. Throws UnboundedLpError when no optimum exists.
LpResult solve_lp_max(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                      const std::vector<Rat>& c);

inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace injscheme
