#pragma once

#include <memory>
#include <string>
#include <vector>

#include "injscheme/cycle_path.hpp"
#include "injscheme/partition.hpp"
#include "injscheme/run_config.hpp"

namespace injscheme {

/// Irreducible of S_k x S_n appearing in the permutation representation on
/// injections: mu of k tensored with lambda of n, lambda/mu a horizontal
/// strip. Multiplicity-free, with dimension f^mu f^lambda.
struct IrrepLabel {
    Partition mu;
    Partition lambda;
    Int multiplicity;

    std::string to_string() const { return "[" + mu.to_string() + ";" + lambda.to_string() + "]"; }
};

IrrepLabel make_irrep(const Partition& mu, const Partition& lambda);

/// Bijection between irreducibles and classes: mark the strip cells of
/// lambda/mu in lambda's diagram. A column of mu with a marked cell below
/// it contributes its length as a path part; an unmarked column of mu
/// contributes a cycle part; marked singleton columns are zero paths.
CyclePathType irrep_to_class(const IrrepLabel& label);

/// Inverse of irrep_to_class.
IrrepLabel class_to_irrep(const CyclePathType& cls, int k, int n);

/// Character table of the (k,n)-injection scheme: exact integer
/// eigenvalues P indexed by (irrep, class), with classes in canonical
/// order and irreps aligned so that irrep_to_class(irreps[i]) ==
/// classes[i]. Row 0 is the trivial irrep, column 0 the identity class.
struct CharacterTable {
    int k = 0, n = 0;
    Int point_count;  // |S_{k,n}|
    std::vector<CyclePathType> classes;
    std::vector<Int> valencies;
    std::vector<IrrepLabel> irreps;
    std::vector<std::vector<Int>> p;  // p[irrep][class]

    int size() const { return static_cast<int>(classes.size()); }
    int class_index(const CyclePathType& cls) const;
};

/// Dual eigenmatrix Q with P*Q = |X|*I, computed from the symmetric-scheme
/// closed form Q[j][i] = m_i P[i][j] / v_j and verified against the
/// defining identity exactly.
struct DualTable {
    std::vector<std::vector<Rat>> q;  // q[class][irrep]
};

/// One P entry by the combinatorial formula: the signed cover counts of
/// the canonical pair, summed over the sphere of the class. Enumerates
/// injections; intended for tests and spot checks, not table assembly.
Int eigenvalue(const IrrepLabel& label, const CyclePathType& cls, int k, int n);

/// Full table. Uses the Murnaghan-Nakayama group-scheme identity
/// P = |C| chi / f when k == n and the combinatorial sweep otherwise.
/// Refuses with BudgetError when the cost estimate exceeds config.budget.
CharacterTable character_table(int k, int n, const RunConfig& config = {});

/// Combinatorial sweep regardless of k == n; used to cross-check the fast
/// path at small n.
CharacterTable character_table_combinatorial(int k, int n, const RunConfig& config = {});

/// Cost estimate used by the budget guardrail, in (irrep x injection)
/// units for the combinatorial path and class-pair units for k == n.
Int character_table_cost(int k, int n);

DualTable dual_table(const CharacterTable& ct);

/// Intersection numbers p_{ij}(m) = (1/(v v_m)) sum_h mult_h P_hi P_hj P_hm,
/// indexed [i][j][m]. Throws IntegrityError if any value is negative or
/// non-integral.
std::vector<std::vector<std::vector<Int>>> intersection_numbers(const CharacterTable& ct);

/// Spherical function values by direct projection: averages chi over the
/// stabilizer coset of a class representative, using exact rationals.
/// The per-class histogram of (S_k type, product type) pairs costs
/// k!(n-k)! to build and is cached, so evaluating all irreps against one
/// class pays the enumeration once. Requires k!(n-k)! <= cap.
class ProjectionOracle {
public:
    ProjectionOracle(int k, int n, long long cap = 100000);
    Rat value(const IrrepLabel& label, const CyclePathType& cls) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// One-off form of the oracle above.
Rat spherical_oracle(const IrrepLabel& label, const CyclePathType& cls, int k, int n,
                     long long cap = 100000);

enum class ValidateLevel { algebraic, bruteforce };

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // counterexample location on failure
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/// Structural validation: integrality, first column, trivial row, column
/// orthogonality, P*Q = |X|*I and intersection-number integrality; the
/// bruteforce level adds the projection-formula oracle on every cell and
/// the adjacency common-eigenspace decomposition where sizes permit.
ValidationReport validate(const CharacterTable& ct, ValidateLevel level,
                          const RunConfig& config = {});

}  // namespace injscheme
