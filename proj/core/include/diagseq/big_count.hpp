#pragma once

#include "diagseq/partition.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <span>

namespace diagseq {

/// Exact arbitrary-precision count. Never rounded, never truncated.
using BigCount = boost::multiprecision::cpp_int;

/// Binomial coefficient, evaluated multiplicatively with exact integer
/// division at every step. Conventions: C(n, r) = 0 for r < 0 or r > n,
/// C(n, 0) = 1. The vanishing cases are load-bearing for the stratum
/// counting formulas.
BigCount binomial(Int n, Int r);

/// (sum counts)! / prod(counts_i!), as a product of binomials.
BigCount multinomial(std::span<const Int> counts);

}  // namespace diagseq
