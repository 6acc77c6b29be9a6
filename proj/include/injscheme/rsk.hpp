#pragma once

#include <utility>

#include "injscheme/injection.hpp"
#include "injscheme/tableau.hpp"

namespace injscheme {

/// Insertion tableau P (shape of n) and recording tableau Q (shape of k,
/// the recording tableau with the trailing-block cells stripped); the two
/// shapes always differ by a horizontal strip.
struct RskPair {
    StandardYoungTableau p;
    StandardYoungTableau q;
};

/// Row-insertion RSK applied to the generalized permutation that lists
/// sigma(1..k) and then the unused values in increasing order under a
/// common label k+1.
RskPair rsk(const Injection& sigma);

/// Inverse of the above; requires |shape(p)| = n, |shape(q)| = k and the
/// horizontal-strip condition. Throws on malformed pairs.
Injection rsk_inverse(const StandardYoungTableau& p, const StandardYoungTableau& q);

}  // namespace injscheme
