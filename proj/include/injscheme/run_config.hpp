#pragma once

#include <stdexcept>
#include <string>

#include "injscheme/bigint.hpp"

namespace injscheme {

enum class OutputFormat { human, json, csv };

/// Knobs shared by the library entry points and the CLI. Precedence is
/// handled by the CLI: flag, then environment, then these defaults.
struct RunConfig {
    std::string cache_dir;                 // empty disables the cache
    int threads = 0;                       // 0 means hardware concurrency
    long long bruteforce_cap = 100000;     // max k!(n-k)! for brute-force paths
    long long budget = 1000000000;         // table-assembly cost units (irreps x |X|)
    OutputFormat format = OutputFormat::human;
};

/// Refusal to start a computation whose estimated cost exceeds the budget.
struct BudgetError : std::runtime_error {
    Int estimate;
    Int budget;
    BudgetError(Int est, Int bud)
        : std::runtime_error("cost estimate " + est.get_str() + " exceeds budget " + bud.get_str()),
          estimate(std::move(est)),
          budget(std::move(bud)) {}
};

/// A structural property that valid scheme data cannot violate failed;
/// indicates an upstream bug or corrupted input, never user error.
struct IntegrityError : std::runtime_error {
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

/// Cache file problems: unreadable, wrong version, checksum mismatch.
struct CacheError : std::runtime_error {
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace injscheme
