#pragma once

#include "diagseq/partition.hpp"

#include <compare>
#include <span>
#include <vector>

namespace diagseq {

/// Diagonal sequence of a partition: entry d_k counts the cells on the
/// k-th anti-diagonal (cells (i,j) with i + j - 1 = k) of the Young
/// diagram. Trailing zeros are never stored. Every valid sequence rises
/// 1, 2, ..., q and is then non-increasing and positive up to its last
/// entry d_L.
class DiagonalSequence {
public:
    DiagonalSequence() = default;  // the empty sequence (weight 0)

    /// Wraps values already known to have the valid shape (asserted).
    static DiagonalSequence from_valid(std::vector<Int> values);

    std::span<const Int> values() const noexcept { return values_; }
    bool empty() const noexcept { return values_.empty(); }
    /// L: index of the last nonzero entry (0 for the empty sequence).
    Int length() const noexcept { return static_cast<Int>(values_.size()); }
    /// q: the peak, i.e. the largest k with d_k = k.
    Int q() const noexcept { return q_; }
    Int weight() const noexcept { return weight_; }
    /// d_k for any k >= 1; zero beyond L.
    Int at(Int k) const {
        return (k >= 1 && k <= length()) ? values_[static_cast<std::size_t>(k - 1)] : 0;
    }

    friend bool operator==(const DiagonalSequence&, const DiagonalSequence&) = default;
    friend std::strong_ordering operator<=>(const DiagonalSequence& a, const DiagonalSequence& b) {
        return a.values_ <=> b.values_;
    }

private:
    std::vector<Int> values_;
    Int q_ = 0;
    Int weight_ = 0;
};

/// d_k = |{ i : 1 <= i <= k and p_i + i - 1 >= k }|, trailing zeros trimmed.
/// Invariant under conjugation; the entries sum to weight(p).
DiagonalSequence diagonal_sequence(const Partition& p);

/// Accepts exactly the sequences of the valid shape (rise by one to a peak
/// q, then non-increasing positive entries). Rejections carry the first
/// offending 1-based index in the message.
DiagonalSequence validate_diagonal(std::span<const Int> raw);
DiagonalSequence validate_diagonal(std::initializer_list<Int> raw);

/// Canonical (q, s)-form of a nonempty diagonal sequence:
///   d = (1, 2, ..., q, q^(s_q), (q-1)^(s_{q-1}), ..., 1^(s_1)).
/// s is stored ascending: s[0] = s_1, ..., s[q-1] = s_q.
struct SProfile {
    Int q = 0;
    std::vector<Int> s;

    /// n = q(q+1)/2 + sum_k k*s_k.
    Int weight() const;
    /// l = q + s_q: the part count of the strictly decreasing class member.
    Int l() const { return q + s.back(); }
    /// L = q + sum_k s_k.
    Int length() const;

    friend bool operator==(const SProfile&, const SProfile&) = default;
};

/// Mutually inverse bijections between nonempty diagonal sequences and
/// profiles; weight-preserving.
SProfile to_s_profile(const DiagonalSequence& d);
DiagonalSequence from_s_profile(const SProfile& sp);

/// 2 * sum_k k*d_k. Equals sum_squares_pair(p) whenever d is the diagonal
/// sequence of p.
Int diagonal_moment(const DiagonalSequence& d);

}  // namespace diagseq
