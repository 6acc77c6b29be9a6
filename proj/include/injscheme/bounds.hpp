#pragma once

#include <optional>
#include <string>
#include <vector>

#include "injscheme/character_table.hpp"
#include "injscheme/lp.hpp"

namespace injscheme {

/// Set of allowed Hamming distances, a nonempty subset of {1..k}, plus the
/// presentation it was given in (minimum distance d, equidistant {d}, or
/// an explicit list).
struct DistanceSet {
    enum class Kind { min_distance, equidistant, explicit_set };
    Kind kind = Kind::explicit_set;
    std::vector<int> distances;  // sorted ascending, distinct

    static DistanceSet min_distance(int d, int k);
    static DistanceSet equidistant(int d, int k);
    static DistanceSet explicit_set(std::vector<int> distances, int k);

    bool allows(int d) const;
    bool is_full(int k) const { return static_cast<int>(distances.size()) == k; }
    DistanceSet complement(int k) const;  // explicit-set presentation
    std::string to_string() const;
};

/// Indices of the LP variables: class 0 is always excluded; class j is
/// allowed iff its distance lies in D.
std::vector<int> allowed_classes(int k, int n, const DistanceSet& d);

/// Delsarte LP over the dual table: maximize sum a_j subject to a Q >= 0,
/// a_0 = 1, a_j = 0 off the allowed set, a_j >= 0. Returns the exact
/// optimum and an optimal inner-distribution vector over all classes.
std::pair<Rat, std::vector<Rat>> solve_delsarte(const DualTable& q, const std::vector<int>& allowed);

/// M(n,k,d) <= n!/(n-k+d-1)!.
Int singleton_bound(int n, int k, int d);

/// Ball size in S_{k,n}: sum_j C(k,j) sum_i (-1)^i C(j,i) (n-k+j-i)!/(n-k)!.
Int ball_size(int n, int k, int r);

/// floor(|S_{k,n}| / b_{floor((d-1)/2)}).
Int sphere_packing_bound(int n, int k, int d);

struct BoundReport {
    int k = 0, n = 0;
    DistanceSet d;
    Rat lp_optimum;
    Int lp_bound;  // floor of the optimum
    std::optional<Int> singleton;
    std::optional<Int> sphere_packing;
    std::optional<Int> trivial_cc;
    Int best;
    std::vector<Rat> certificate;  // optimal inner distribution
};

/// Full report against a prebuilt table. Singleton and sphere packing use
/// the least allowed distance; the clique-coclique comparison is attached
/// for non-minimum-distance presentations of proper subsets.
BoundReport delsarte_bound(const CharacterTable& ct, const DistanceSet& d);

/// Convenience form that assembles the table first (budget applies).
BoundReport delsarte_bound(int k, int n, const DistanceSet& d, const RunConfig& config = {});

/// floor(|X| / lp_optimum(D^c)), the clique-coclique companion bound.
Int trivial_cc_bound(const CharacterTable& ct, const DistanceSet& d);

/// True iff lp_optimum(D) * lp_optimum(D^c) equals |X| exactly.
bool separating_check(const CharacterTable& ct, const DistanceSet& d);

}  // namespace injscheme
