#pragma once

#include <string>
#include <vector>

#include "injscheme/injection.hpp"
#include "injscheme/partition.hpp"

namespace injscheme {

/// Associate-class label of the scheme: the isomorphism type of the
/// multiunion of two injections seen as matchings of [k] into [n].
/// A cycle of length 2c contributes a cycle part c; a path of length 2p a
/// path part p; isolated codomain points are zero-length paths, recorded
/// as an explicit pad count. |cycles| + |paths| = k and the number of
/// paths including zeros is n - k.
struct CyclePathType {
    Partition cycles;
    Partition paths;     // positive path lengths only
    int zero_paths = 0;

    bool operator==(const CyclePathType& o) const {
        return cycles == o.cycles && paths == o.paths && zero_paths == o.zero_paths;
    }
    bool valid_for(int k, int n) const {
        return cycles.weight() + paths.weight() == k && paths.length() + zero_paths == n - k &&
               zero_paths >= 0;
    }

    std::string to_string() const;  // e.g. "(2,1|0^3,1)"
};

/// Hamming distance shared by every pair in the class: k minus the number
/// of cycle parts equal to one.
int class_distance(const CyclePathType& t, int k);

/// Canonical class order: identity class (1^k|0^{n-k}) first, then by
/// distance, then cycles (heavier first, lexicographically descending),
/// then paths.
bool class_less(const CyclePathType& a, const CyclePathType& b, int k);

/// All classes for (k, n) in canonical order. Their number equals the
/// number of horizontal-strip pairs.
std::vector<CyclePathType> enumerate_classes(int k, int n);

/// Type of the multiunion of a and b. Symmetric, and invariant under the
/// simultaneous S_k x S_n action on both arguments.
CyclePathType classify_pair(const Injection& a, const Injection& b);

/// Size of the sphere C_t: k!(n-k)! / (prod_i i^{l_i} l_i! r_i!) where l_i
/// and r_i count parts of size i among cycles and paths (r_0 counts the
/// zero-length paths).
Int sphere_size(const CyclePathType& t, int k, int n);

/// Canonical member of the sphere: cycles then paths laid out on
/// consecutive domain positions, path tails using values k+1, k+2, ...
Injection class_representative(const CyclePathType& t, int k, int n);

}  // namespace injscheme
