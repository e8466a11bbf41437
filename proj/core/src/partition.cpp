#include "diagseq/partition.hpp"

#include "diagseq/errors.hpp"

#include <cassert>
#include <numeric>
#include <string>

namespace diagseq {

namespace {
// Keeps n, all part squares and their sums inside 64 bits.
constexpr Int kMaxWeight = 1'000'000'000;
}  // namespace

Partition Partition::from_valid(std::vector<Int> parts) {
#ifndef NDEBUG
    for (std::size_t i = 0; i < parts.size(); ++i) {
        assert(parts[i] > 0);
        assert(i == 0 || parts[i] <= parts[i - 1]);
    }
#endif
    Partition p;
    p.weight_ = std::accumulate(parts.begin(), parts.end(), Int{0});
    p.parts_ = std::move(parts);
    return p;
}

Partition make_partition(std::span<const Int> raw) {
    Int weight = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] <= 0)
            fail(ErrorKind::NonPositivePart,
                 "part #" + std::to_string(i + 1) + " is " + std::to_string(raw[i]) +
                     "; every part must be positive");
        if (i > 0 && raw[i] > raw[i - 1])
            fail(ErrorKind::NotSorted,
                 "parts rise at position " + std::to_string(i + 1) +
                     "; a partition is non-increasing");
        weight += raw[i];
        if (weight > kMaxWeight)
            fail(ErrorKind::BoundExceeded, "partition weight exceeds the 10^9 input cap");
    }
    return Partition::from_valid(std::vector<Int>(raw.begin(), raw.end()));
}

Partition make_partition(std::initializer_list<Int> raw) {
    return make_partition(std::span<const Int>(raw.begin(), raw.size()));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    const auto parts = p.parts();
    std::vector<Int> cols(static_cast<std::size_t>(parts[0]));
    // cols[j-1] = number of parts >= j; parts are sorted, so sweep once.
    std::size_t alive = parts.size();
    for (Int j = 1; j <= parts[0]; ++j) {
        while (alive > 0 && parts[alive - 1] < j) --alive;
        cols[static_cast<std::size_t>(j - 1)] = static_cast<Int>(alive);
    }
    return Partition::from_valid(std::move(cols));
}

std::vector<Int> v_sequence(const Partition& p) {
    std::vector<Int> v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[i] + static_cast<Int>(i);
    return v;
}

Int sum_squares_pair(const Partition& p) {
    Int total = 0;
    const Partition conj = conjugate(p);
    for (Int part : p.parts()) total += part * part;
    for (Int col : conj.parts()) total += col * col;
    return total;
}

}  // namespace diagseq
