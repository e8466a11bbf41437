#pragma once

#include "diagseq/enumeration.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diagseq {

/// Formula-side census line for one weight: p(n), |Delta(n)|, and the
/// smallest and largest class size. Computed by walking the strictly
/// decreasing partitions of n (one per class) and applying count_class;
/// no brute-force grouping involved.
struct CensusRow {
    Int n = 0;
    BigCount partitions;
    BigCount classes;
    BigCount min_class;
    BigCount max_class;
};

CensusRow census_row(Int n);

struct CensusOptions {
    bool check_oracle = false;
    /// Self-test hook: while checking, the class-size formula is evaluated
    /// with the factor at this index (0-based within count_class_factors)
    /// replaced by factor + 1. Any in-range perturbation must be caught by
    /// the oracle comparison.
    std::optional<Int> perturb_factor;
    Int oracle_bound = kDefaultOracleBound;
};

struct CensusMismatch {
    Int n = 0;
    DiagonalSequence d;  // offending class; empty for aggregate mismatches
    std::string detail;
};

struct CensusResult {
    std::vector<CensusRow> rows;
    std::optional<CensusMismatch> mismatch;  // first one found, if any
};

/// Census over lo..hi inclusive. With check_oracle set, every weight is
/// verified against classes_oracle: identical class sets, identical class
/// and stratum sizes, class sizes summing to p(n), and |Delta(n)| equal to
/// the distinct-parts count. Stops at the first mismatch.
CensusResult run_census(Int lo, Int hi, const CensusOptions& options = {});

}  // namespace diagseq
