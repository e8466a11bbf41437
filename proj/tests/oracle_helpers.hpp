#pragma once

// Brute-force referees shared by the unit and acceptance suites. These
// deliberately avoid the library's own enumeration strategies: orderings
// come from std::next_permutation over the sorted value list, distinct
// partition counts from a direct recursive walk.

#include "diagseq/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracles {

inline std::vector<diagseq::Int> multiset_values(const diagseq::VnMultiset& m) {
    std::vector<diagseq::Int> values;
    const auto mults = m.mults();
    for (std::size_t j = 0; j < mults.size(); ++j)
        for (diagseq::Int c = 0; c < mults[j]; ++c)
            values.push_back(m.base() + static_cast<diagseq::Int>(j));
    return values;
}

// Number of distinct orderings whose rises are all <= max_rise.
inline std::int64_t brute_rise_bounded_count(const diagseq::VnMultiset& m,
                                             diagseq::Int max_rise) {
    std::vector<diagseq::Int> values = multiset_values(m);
    if (values.empty()) return 1;
    std::sort(values.begin(), values.end());
    std::int64_t count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < values.size() && ok; ++i)
            ok = values[i + 1] - values[i] <= max_rise;
        if (ok) ++count;
    } while (std::next_permutation(values.begin(), values.end()));
    return count;
}

// All valid orderings, as sorted vectors of sequences (for set comparison).
inline std::vector<std::vector<diagseq::Int>> brute_rise_bounded_list(
    const diagseq::VnMultiset& m, diagseq::Int max_rise) {
    std::vector<diagseq::Int> values = multiset_values(m);
    std::vector<std::vector<diagseq::Int>> out;
    if (values.empty()) {
        out.emplace_back();
        return out;
    }
    std::sort(values.begin(), values.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < values.size() && ok; ++i)
            ok = values[i + 1] - values[i] <= max_rise;
        if (ok) out.push_back(values);
    } while (std::next_permutation(values.begin(), values.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// Partitions of n into distinct parts, counted by direct recursion.
inline std::int64_t brute_distinct_partitions(diagseq::Int n) {
    std::function<std::int64_t(diagseq::Int, diagseq::Int)> walk =
        [&](diagseq::Int rest, diagseq::Int cap) -> std::int64_t {
        if (rest == 0) return 1;
        std::int64_t total = 0;
        for (diagseq::Int first = std::min(rest, cap); first >= 1; --first)
            total += walk(rest - first, first - 1);
        return total;
    };
    return walk(n, n);
}

}  // namespace oracles
