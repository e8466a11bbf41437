#pragma once

#include "diagseq/diagonal.hpp"

namespace diagseq {

/// Admissible largest parts within a class; by conjugation closure also
/// the admissible part counts. Equals {q, q + s_q, q + s_q + s_{q-1},
/// ..., q + sum s_i} with duplicates collapsed, so strictly increasing
/// from q to L.
struct A1Set {
    std::vector<Int> values;

    bool contains(Int k) const;
    Int min() const { return values.front(); }
    Int max() const { return values.back(); }

    friend bool operator==(const A1Set&, const A1Set&) = default;
};

/// The strictly decreasing member of the class:
/// bar(a)_i = q - i + 1 + sum_{k=i..q} s_k. Maximal under majorization.
Partition alpha_bar(const SProfile& sp);

/// The gap-at-most-one member (q^(s_q+1), ..., 1^(s_1+1)); equals
/// conjugate(alpha_bar(sp)) and is minimal under majorization. Its parts,
/// as a multiset, coincide with the entries of the diagonal sequence.
Partition alpha_under(const SProfile& sp);

/// Inverse of alpha_bar: s_i = p_i - p_{i+1} - 1 for i < q, s_q = p_q - 1.
/// Requires strictly decreasing parts.
SProfile s_from_strict(const Partition& p);

A1Set a1_set(const DiagonalSequence& d);

/// Diagonal sequence after removing a first row of length k (equivalently,
/// by conjugation, a first column of height k):
///   d' = (d_2 - 1, ..., d_k - 1, d_{k+1}, ..., d_L), trailing zeros trimmed.
/// Valid exactly when k is in a1_set(d); the result has weight n - k.
DiagonalSequence peel_first_row(const DiagonalSequence& d, Int k);

/// Majorization order on partitions of equal weight: every prefix sum of a
/// (zero-padded) dominates the corresponding prefix sum of b. Throws on a
/// weight mismatch. a and b may be incomparable (both directions false).
bool majorizes(const Partition& a, const Partition& b);

/// Majorization maximum / minimum of the stratum of class members with
/// exactly k parts. k must be admissible (member of a1_set).
Partition stratum_max(const DiagonalSequence& d, Int k);
Partition stratum_min(const DiagonalSequence& d, Int k);

}  // namespace diagseq
