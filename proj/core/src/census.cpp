#include "diagseq/census.hpp"

#include "diagseq/errors.hpp"
#include "diagseq/text.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace diagseq {

namespace {

// Strictly decreasing partitions of n, one per class; the formula-side
// walk (the oracle groups instead of walking profiles).
void for_each_strict(Int n, const std::function<void(const Partition&)>& visit) {
    std::vector<Int> parts;
    std::function<void(Int, Int)> descend = [&](Int rest, Int cap) {
        if (rest == 0) {
            visit(Partition::from_valid(std::vector<Int>(parts)));
            return;
        }
        for (Int first = std::min(rest, cap); first >= 1; --first) {
            // The tail below `first` can carry at most first*(first-1)/2.
            if (first * (first - 1) / 2 < rest - first) continue;
            parts.push_back(first);
            descend(rest - first, first - 1);
            parts.pop_back();
        }
    };
    descend(n, n);
}

BigCount perturbed_count_class(const DiagonalSequence& d, std::optional<Int> perturb) {
    if (!perturb) return count_class(d);
    const std::vector<BigCount> factors = count_class_factors(d);
    BigCount result = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (static_cast<Int>(i) == *perturb)
            result *= factors[i] + 1;
        else
            result *= factors[i];
    }
    return result;
}

std::optional<CensusMismatch> verify_against_oracle(Int n, const CensusOptions& options) {
    const ClassTable oracle = classes_oracle(n, options.oracle_bound);

    // Formula side: every class is reached through its strictly
    // decreasing member.
    std::map<DiagonalSequence, BigCount> formula;
    if (n == 0) {
        formula.emplace(DiagonalSequence{}, 1);
    } else {
        for_each_strict(n, [&](const Partition& strict) {
            const DiagonalSequence d = from_s_profile(s_from_strict(strict));
            formula.emplace(d, perturbed_count_class(d, options.perturb_factor));
        });
    }

    auto mismatch = [&](const DiagonalSequence& d, std::string detail) {
        return CensusMismatch{n, d, std::move(detail)};
    };

    if (BigCount(oracle.classes.size()) != count_distinct_classes(n))
        return mismatch({}, "distinct-class count: formula " + count_distinct_classes(n).str() +
                                ", oracle found " + std::to_string(oracle.classes.size()));
    if (formula.size() != oracle.classes.size())
        return mismatch({}, "class sets differ in size: formula " +
                                std::to_string(formula.size()) + ", oracle " +
                                std::to_string(oracle.classes.size()));

    BigCount total_members = 0;
    for (const auto& [d, members] : oracle.classes) {
        const auto it = formula.find(d);
        if (it == formula.end())
            return mismatch(d, "class found by the oracle but missed by the profile walk");
        if (it->second != BigCount(members.size()))
            return mismatch(d, "class size: formula " + it->second.str() + ", oracle " +
                                   std::to_string(members.size()));
        total_members += static_cast<Int>(members.size());

        std::map<Int, Int> by_parts;
        Int max_parts = 0;
        for (const Partition& member : members) {
            const Int parts = static_cast<Int>(member.size());
            ++by_parts[parts];
            max_parts = std::max(max_parts, parts);
        }
        for (Int k = 0; k <= std::max(max_parts, d.length()); ++k) {
            const BigCount expected = count_stratum(d, k);
            const Int actual = by_parts.count(k) ? by_parts.at(k) : 0;
            if (expected != BigCount(actual))
                return mismatch(d, "stratum k=" + std::to_string(k) + ": formula " +
                                       expected.str() + ", oracle " + std::to_string(actual));
        }
    }
    if (total_members != partition_count(n))
        return mismatch({}, "class sizes sum to " + total_members.str() + ", but p(n) = " +
                                partition_count(n).str());
    return std::nullopt;
}

}  // namespace

CensusRow census_row(Int n) {
    CensusRow row;
    row.n = n;
    row.partitions = partition_count(n);
    if (n == 0) {
        row.classes = 1;
        row.min_class = 1;
        row.max_class = 1;
        return row;
    }
    BigCount classes = 0;
    BigCount min_class = 0;
    BigCount max_class = 0;
    for_each_strict(n, [&](const Partition& strict) {
        const BigCount size = count_class(from_s_profile(s_from_strict(strict)));
        if (classes == 0 || size < min_class) min_class = size;
        if (size > max_class) max_class = size;
        ++classes;
    });
    row.classes = classes;
    row.min_class = min_class;
    row.max_class = max_class;
    return row;
}

CensusResult run_census(Int lo, Int hi, const CensusOptions& options) {
    if (lo < 0 || hi < lo)
        fail(ErrorKind::ParseError, "census range must satisfy 0 <= lo <= hi");
    CensusResult result;
    for (Int n = lo; n <= hi; ++n) {
        result.rows.push_back(census_row(n));
        if (options.check_oracle) {
            if (auto mismatch = verify_against_oracle(n, options)) {
                result.mismatch = std::move(mismatch);
                break;
            }
        }
    }
    return result;
}

}  // namespace diagseq
