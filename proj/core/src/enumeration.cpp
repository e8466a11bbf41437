#include "diagseq/enumeration.hpp"

#include "diagseq/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>

namespace diagseq {

namespace {

// Descending-lexicographic successor; false once p was (1, 1, ..., 1).
bool next_partition(std::vector<Int>& p) {
    std::size_t j = p.size();
    while (j > 0 && p[j - 1] == 1) --j;
    if (j == 0) return false;
    const Int ones = static_cast<Int>(p.size() - j);
    --j;
    const Int value = p[j] - 1;
    Int rest = ones + 1;  // the removed ones plus the unit taken from p[j]
    p.resize(j);
    p.push_back(value);
    while (rest >= value) {
        p.push_back(value);
        rest -= value;
    }
    if (rest > 0) p.push_back(rest);
    return true;
}

}  // namespace

partition_range::partition_range(Int n, Int bound) : n_(n) {
    if (n < 0) fail(ErrorKind::ParseError, "cannot enumerate partitions of a negative number");
    if (n > bound)
        fail(ErrorKind::BoundExceeded, "partition enumeration bound exceeded: n = " +
                                           std::to_string(n) + " > " + std::to_string(bound));
}

partition_range::iterator::iterator(Int n) {
    if (n > 0) current_ = Partition::from_valid({n});
    // n == 0: current_ stays empty, the one partition of 0.
}

partition_range::iterator& partition_range::iterator::operator++() {
    std::vector<Int> parts(current_.parts().begin(), current_.parts().end());
    if (next_partition(parts))
        current_ = Partition::from_valid(std::move(parts));
    else
        done_ = true;
    return *this;
}

std::vector<Partition> enumerate_partitions(Int n, Int bound) {
    std::vector<Partition> all;
    for (const Partition& p : partition_range(n, bound)) all.push_back(p);
    return all;
}

namespace {

// DFS over the remaining multiplicities, trying values in increasing
// order, which makes the output lexicographic.
void visit_arrangements(std::vector<Int>& remaining, Int base, Int max_rise, Int left,
                        std::vector<Int>& prefix, const VnVisitor& visit) {
    if (left == 0) {
        visit(prefix);
        return;
    }
    for (std::size_t j = 0; j < remaining.size(); ++j) {
        if (remaining[j] == 0) continue;
        const Int value = base + static_cast<Int>(j);
        if (!prefix.empty() && value - prefix.back() > max_rise) continue;
        --remaining[j];
        prefix.push_back(value);
        visit_arrangements(remaining, base, max_rise, left - 1, prefix, visit);
        prefix.pop_back();
        ++remaining[j];
    }
}

// Unbounded core shared by the public entry points and the stratum
// decoder (whose multiset size is q, already limited by the caller).
void visit_kvn(const VnMultiset& m, Int max_rise, const VnVisitor& visit) {
    std::vector<Int> remaining(m.mults().begin(), m.mults().end());
    std::vector<Int> prefix;
    prefix.reserve(static_cast<std::size_t>(m.size()));
    visit_arrangements(remaining, m.base(), max_rise, m.size(), prefix, visit);
}

}  // namespace

void for_each_kvn(const VnMultiset& m, Int max_rise, const VnVisitor& visit, Int bound) {
    if (max_rise < 0) fail(ErrorKind::ParseError, "the rise bound k must be non-negative");
    if (m.size() > bound)
        fail(ErrorKind::BoundExceeded, "multiset enumeration bound exceeded: size " +
                                           std::to_string(m.size()) + " > " +
                                           std::to_string(bound));
    visit_kvn(m, max_rise, visit);
}

void for_each_vn(const VnMultiset& m, const VnVisitor& visit, Int bound) {
    for_each_kvn(m, 1, visit, bound);
}

std::vector<std::vector<Int>> enumerate_kvn(const VnMultiset& m, Int max_rise, Int bound) {
    std::vector<std::vector<Int>> out;
    for_each_kvn(m, max_rise, [&](std::span<const Int> v) { out.emplace_back(v.begin(), v.end()); },
                 bound);
    return out;
}

std::vector<std::vector<Int>> enumerate_vn(const VnMultiset& m, Int bound) {
    return enumerate_kvn(m, 1, bound);
}

namespace {

// The peel recursion revisits the same reduced sequences many times, so
// results are memoized per top-level call.
using StratumMemo = std::map<std::pair<std::vector<Int>, Int>, std::vector<Partition>>;

std::vector<Partition> stratum_members(const DiagonalSequence& d, Int k, StratumMemo& memo);

std::vector<Partition> compute_stratum(const DiagonalSequence& d, Int k, StratumMemo& memo) {
    std::vector<Partition> members;
    if (d.empty()) {
        if (k == 0) members.emplace_back();
        return members;
    }
    if (!a1_set(d).contains(k)) return members;
    if (k == d.q()) {
        // Decode: arrangements v of {i^(b_i)} map to parts p_i = v_i - i + 1.
        const BVector b = b_vector(d);
        visit_kvn(VnMultiset(b.q, b.entries), 1, [&](std::span<const Int> v) {
            std::vector<Int> parts(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) parts[i] = v[i] - static_cast<Int>(i);
            members.push_back(Partition::from_valid(std::move(parts)));
        });
    } else {
        // Strip the first column (height k), enumerate every admissible
        // stratum of the reduced class, put the column back.
        const DiagonalSequence peeled = peel_first_row(d, k);
        std::vector<Int> part_counts;
        if (peeled.empty()) {
            part_counts.push_back(0);
        } else {
            for (Int l : a1_set(peeled).values)
                if (l <= k) part_counts.push_back(l);
        }
        for (Int l : part_counts) {
            for (const Partition& inner : stratum_members(peeled, l, memo)) {
                std::vector<Int> parts(inner.parts().begin(), inner.parts().end());
                for (Int& part : parts) ++part;
                parts.resize(static_cast<std::size_t>(k), 1);
                members.push_back(Partition::from_valid(std::move(parts)));
            }
        }
    }
    std::sort(members.begin(), members.end(),
              [](const Partition& a, const Partition& b) { return b < a; });
    return members;
}

std::vector<Partition> stratum_members(const DiagonalSequence& d, Int k, StratumMemo& memo) {
    auto key = std::make_pair(std::vector<Int>(d.values().begin(), d.values().end()), k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto members = compute_stratum(d, k, memo);
    return memo.emplace(std::move(key), std::move(members)).first->second;
}

}  // namespace

std::vector<Partition> enumerate_stratum(const DiagonalSequence& d, Int k) {
    StratumMemo memo;
    return stratum_members(d, k, memo);
}

std::vector<Partition> enumerate_class(const DiagonalSequence& d, Int cap) {
    const BigCount total = count_class(d);
    if (total > cap)
        fail(ErrorKind::CapExceeded,
             "class has " + total.str() + " members, above the enumeration cap of " +
                 std::to_string(cap));
    std::vector<Partition> members;
    if (d.empty()) {
        members.emplace_back();
        return members;
    }
    StratumMemo memo;
    for (Int k : a1_set(d).values) {
        auto stratum = stratum_members(d, k, memo);
        members.insert(members.end(), stratum.begin(), stratum.end());
    }
    assert(BigCount(members.size()) == total);
    return members;
}

const std::vector<Partition>* ClassTable::find(const DiagonalSequence& d) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), d,
                               [](const auto& entry, const DiagonalSequence& key) {
                                   return entry.first < key;
                               });
    if (it == classes.end() || it->first != d) return nullptr;
    return &it->second;
}

ClassTable classes_oracle(Int n, Int bound) {
    if (n > bound)
        fail(ErrorKind::BoundExceeded, "oracle bound exceeded: n = " + std::to_string(n) +
                                           " > " + std::to_string(bound));
    // Pure grouping of the exhaustive partition walk; deliberately blind
    // to every counting formula.
    std::map<DiagonalSequence, std::vector<Partition>> groups;
    for (const Partition& p : partition_range(n, bound)) groups[diagonal_sequence(p)].push_back(p);
    ClassTable table;
    table.n = n;
    table.classes.assign(groups.begin(), groups.end());
    return table;
}

}  // namespace diagseq
