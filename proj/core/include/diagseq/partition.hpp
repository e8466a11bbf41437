#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace diagseq {

using Int = std::int64_t;

/// Integer partition: a non-increasing sequence of positive parts.
/// The empty partition is the unique partition of 0. Immutable after
/// construction; all operations on it are pure functions.
class Partition {
public:
    Partition() = default;

    /// Wraps a sequence that is already known to be non-increasing and
    /// positive (results of conjugation, decoding, ...). Checked only by
    /// assertions.
    static Partition from_valid(std::vector<Int> parts);

    std::span<const Int> parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Int weight() const noexcept { return weight_; }
    Int operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Int> parts_;
    Int weight_ = 0;
};

/// Validating constructor. Accepts exactly the non-increasing all-positive
/// sequences (and the empty one). Weights above 10^9 are refused so that
/// every derived sum fits comfortably in 64 bits.
Partition make_partition(std::span<const Int> raw);
Partition make_partition(std::initializer_list<Int> raw);

/// Conjugate partition p*: p*_j = number of parts of p that are >= j,
/// i.e. the column lengths of the Young diagram. Involution.
Partition conjugate(const Partition& p);

/// v_i = p_i + i - 1 (1-based). Always v_i >= i and v_{i+1} - v_i <= 1;
/// p is recovered by p_i = v_i - i + 1.
std::vector<Int> v_sequence(const Partition& p);

/// s(p) + s(p*) where s sums the squares of the parts. Constant on every
/// set of partitions sharing a diagonal sequence (see diagonal_moment).
Int sum_squares_pair(const Partition& p);

}  // namespace diagseq
