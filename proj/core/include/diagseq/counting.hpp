#pragma once

#include "diagseq/big_count.hpp"
#include "diagseq/diagonal.hpp"

#include <vector>

namespace diagseq {

/// Multiset of consecutive integers base, base+1, ..., base+span() with
/// multiplicities mults()[0..span()]. Normalized so the first and last
/// multiplicities are positive unless the multiset is empty. The base may
/// be any integer, including negative.
class VnMultiset {
public:
    VnMultiset() = default;  // empty
    VnMultiset(Int base, std::vector<Int> mults);

    static VnMultiset from_values(std::span<const Int> values);

    bool empty() const noexcept { return mults_.empty(); }
    Int base() const noexcept { return base_; }
    /// t = largest value minus smallest value (0 for a single value).
    Int span() const noexcept { return mults_.empty() ? 0 : static_cast<Int>(mults_.size()) - 1; }
    std::span<const Int> mults() const noexcept { return mults_; }
    /// b = total number of elements.
    Int size() const noexcept { return size_; }

    friend bool operator==(const VnMultiset&, const VnMultiset&) = default;

private:
    Int base_ = 0;
    std::vector<Int> mults_;
    Int size_ = 0;
};

/// Consecutive differences of a diagonal sequence past its peak:
/// b_i = d_i - d_{i+1} for q <= i < L and b_L = d_L. The entries are
/// non-negative and sum to q.
struct BVector {
    Int q = 0;
    std::vector<Int> entries;  // entries[j] = b_{q+j}

    Int L() const { return q + static_cast<Int>(entries.size()) - 1; }
    /// b_i, taken as 0 outside [q, L].
    Int at(Int i) const {
        return (i >= q && i <= L()) ? entries[static_cast<std::size_t>(i - q)] : 0;
    }
};

BVector b_vector(const DiagonalSequence& d);

/// Number of orderings (v_1, ..., v_b) of the multiset in which every step
/// rises by at most one: prod_{i=0}^{t-1} C(b_i + b_{i+1}, b_i).
BigCount vn_count(const VnMultiset& m);

/// Number of orderings with every rise at most k:
/// multinomial(b_0..b_k) * prod_{i=1}^{t-k} C(b_i + ... + b_{i+k}, b_{i+k});
/// the plain multinomial of all multiplicities when t < k.
BigCount kvn_count(const VnMultiset& m, Int k);

/// |[d]_k|: the number of partitions with diagonal sequence d and exactly
/// k parts. Zero (not an error) when k is inadmissible. For k = q this is
/// vn_count of the multiset {i^(b_i)}; for k > q it is
///   C(b_{k-1} + b_k, b_{k-1} + 1)
///     * prod_{i=q}^{k-2} C(b_i + b_{i+1} + 1, b_i + 1)
///     * prod_{i=k}^{L-1} C(b_i + b_{i+1}, b_i).
BigCount count_stratum(const DiagonalSequence& d, Int k);

/// |[d]|: the size of the whole class,
///   prod_{i=q}^{L-1} C(b_i + b_{i+1} + 1, b_i + 1).
/// Equals the sum of count_stratum over all k. The empty sequence has the
/// singleton class of the empty partition.
BigCount count_class(const DiagonalSequence& d);

/// The individual binomial factors of count_class, one per i = q..L-1.
std::vector<BigCount> count_class_factors(const DiagonalSequence& d);

/// |Delta(n)|: the number of distinct diagonal sequences of weight n,
/// computed as the number of partitions of n into distinct parts (each
/// class holds exactly one strictly decreasing member).
BigCount count_distinct_classes(Int n);

/// p(n), via the pentagonal-number recurrence.
BigCount partition_count(Int n);

/// A diagonal sequence whose class has exactly m members, built from a
/// spaced profile for which the class size factors as prod(b_i + 1).
/// Deterministic: smallest weight first, then lexicographically least d.
DiagonalSequence class_of_size(Int m);

}  // namespace diagseq
