#pragma once

#include "diagseq/counting.hpp"
#include "diagseq/extremal.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace diagseq {

inline constexpr Int kDefaultPartitionBound = 60;
inline constexpr Int kDefaultVnBound = 12;
inline constexpr Int kDefaultOracleBound = 30;
inline constexpr Int kDefaultClassCap = 1'000'000;

/// Range over all partitions of n in descending lexicographic order.
/// Single-consumer per iterator; constructing independent ranges
/// concurrently is safe.
class partition_range {
public:
    explicit partition_range(Int n, Int bound = kDefaultPartitionBound);

    struct sentinel {};

    class iterator {
    public:
        iterator() : done_(true) {}
        explicit iterator(Int n);

        const Partition& operator*() const { return current_; }
        const Partition* operator->() const { return &current_; }
        iterator& operator++();
        friend bool operator==(const iterator& it, sentinel) { return it.done_; }

    private:
        Partition current_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(n_); }
    sentinel end() const { return {}; }

private:
    Int n_;
};

/// Collecting form of the range above.
std::vector<Partition> enumerate_partitions(Int n, Int bound = kDefaultPartitionBound);

using VnVisitor = std::function<void(std::span<const Int>)>;

/// Visits every ordering of the multiset with all rises <= max_rise,
/// exactly once, in lexicographically increasing order.
void for_each_kvn(const VnMultiset& m, Int max_rise, const VnVisitor& visit,
                  Int bound = kDefaultVnBound);
void for_each_vn(const VnMultiset& m, const VnVisitor& visit, Int bound = kDefaultVnBound);

std::vector<std::vector<Int>> enumerate_kvn(const VnMultiset& m, Int max_rise,
                                            Int bound = kDefaultVnBound);
std::vector<std::vector<Int>> enumerate_vn(const VnMultiset& m, Int bound = kDefaultVnBound);

/// All members of [d]_k (class members with exactly k parts), in descending
/// lexicographic order; empty when k is inadmissible. The k = q stratum is
/// decoded from the vn-arrangements of {i^(b_i)} via p_i = v_i - i + 1;
/// deeper strata recurse through peel_first_row, re-attaching a first
/// column of height k.
std::vector<Partition> enumerate_stratum(const DiagonalSequence& d, Int k);

/// The whole class: concatenation of the strata for k in a1_set(d),
/// ascending. Refuses (with the exact count in the error message) when the
/// class is larger than cap.
std::vector<Partition> enumerate_class(const DiagonalSequence& d, Int cap = kDefaultClassCap);

/// All partitions of n grouped by their diagonal sequence. The reference
/// the counting formulas are judged against: it only enumerates and
/// groups, never counts by formula.
struct ClassTable {
    Int n = 0;
    /// Sorted by diagonal sequence, lexicographically; members in
    /// descending lexicographic order.
    std::vector<std::pair<DiagonalSequence, std::vector<Partition>>> classes;

    const std::vector<Partition>* find(const DiagonalSequence& d) const;
};

ClassTable classes_oracle(Int n, Int bound = kDefaultOracleBound);

}  // namespace diagseq
