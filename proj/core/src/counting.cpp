#include "diagseq/counting.hpp"

#include "diagseq/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <string>

namespace diagseq {

VnMultiset::VnMultiset(Int base, std::vector<Int> mults) {
    for (Int m : mults)
        if (m < 0) fail(ErrorKind::ParseError, "multiset multiplicities must be non-negative");
    std::size_t lo = 0;
    std::size_t hi = mults.size();
    while (lo < hi && mults[lo] == 0) ++lo;
    while (hi > lo && mults[hi - 1] == 0) --hi;
    base_ = base + static_cast<Int>(lo);
    mults_.assign(mults.begin() + static_cast<std::ptrdiff_t>(lo),
                  mults.begin() + static_cast<std::ptrdiff_t>(hi));
    size_ = std::accumulate(mults_.begin(), mults_.end(), Int{0});
    if (size_ == 0) {
        base_ = 0;
        mults_.clear();
    }
}

VnMultiset VnMultiset::from_values(std::span<const Int> values) {
    if (values.empty()) return {};
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    std::vector<Int> mults(static_cast<std::size_t>(*hi - *lo) + 1, 0);
    for (Int v : values) ++mults[static_cast<std::size_t>(v - *lo)];
    return VnMultiset(*lo, std::move(mults));
}

BVector b_vector(const DiagonalSequence& d) {
    BVector b;
    b.q = d.q();
    if (d.empty()) return b;
    for (Int i = d.q(); i < d.length(); ++i) b.entries.push_back(d.at(i) - d.at(i + 1));
    b.entries.push_back(d.at(d.length()));
    assert(std::accumulate(b.entries.begin(), b.entries.end(), Int{0}) == d.q());
    return b;
}

BigCount vn_count(const VnMultiset& m) {
    BigCount result = 1;
    const auto mults = m.mults();
    for (std::size_t i = 0; i + 1 < mults.size(); ++i)
        result *= binomial(mults[i] + mults[i + 1], mults[i]);
    return result;
}

BigCount kvn_count(const VnMultiset& m, Int k) {
    if (k < 0) fail(ErrorKind::ParseError, "the rise bound k must be non-negative");
    if (m.empty()) return 1;
    const auto mults = m.mults();
    const Int t = m.span();
    if (t < k) return multinomial(mults);
    BigCount result = multinomial(mults.subspan(0, static_cast<std::size_t>(k) + 1));
    for (Int i = 1; i + k <= t; ++i) {
        Int window = 0;
        for (Int j = i; j <= i + k; ++j) window += mults[static_cast<std::size_t>(j)];
        result *= binomial(window, mults[static_cast<std::size_t>(i + k)]);
    }
    return result;
}

BigCount count_stratum(const DiagonalSequence& d, Int k) {
    if (d.empty()) return k == 0 ? 1 : 0;
    if (k < d.q()) return 0;
    const BVector b = b_vector(d);
    if (k == d.q()) {
        // The q-part members decode the orderings of {i^(b_i)}.
        return vn_count(VnMultiset(b.q, b.entries));
    }
    BigCount result = binomial(b.at(k - 1) + b.at(k), b.at(k - 1) + 1);
    for (Int i = d.q(); i <= k - 2; ++i)
        result *= binomial(b.at(i) + b.at(i + 1) + 1, b.at(i) + 1);
    for (Int i = k; i <= b.L() - 1; ++i)
        result *= binomial(b.at(i) + b.at(i + 1), b.at(i));
    return result;
}

std::vector<BigCount> count_class_factors(const DiagonalSequence& d) {
    std::vector<BigCount> factors;
    if (d.empty()) return factors;
    const BVector b = b_vector(d);
    for (Int i = d.q(); i <= b.L() - 1; ++i)
        factors.push_back(binomial(b.at(i) + b.at(i + 1) + 1, b.at(i) + 1));
    return factors;
}

BigCount count_class(const DiagonalSequence& d) {
    BigCount result = 1;
    for (const BigCount& f : count_class_factors(d)) result *= f;
    return result;
}

BigCount count_distinct_classes(Int n) {
    if (n < 0) return 0;
    std::vector<BigCount> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (Int part = 1; part <= n; ++part)
        for (Int total = n; total >= part; --total)
            ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    return ways[static_cast<std::size_t>(n)];
}

BigCount partition_count(Int n) {
    if (n < 0) return 0;
    std::vector<BigCount> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (Int m = 1; m <= n; ++m) {
        BigCount sum = 0;
        for (Int k = 1;; ++k) {
            const Int g1 = k * (3 * k - 1) / 2;
            const Int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const bool plus = k % 2 == 1;
            if (plus)
                sum += p[static_cast<std::size_t>(m - g1)];
            else
                sum -= p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) {
                if (plus)
                    sum += p[static_cast<std::size_t>(m - g2)];
                else
                    sum -= p[static_cast<std::size_t>(m - g2)];
            }
        }
        p[static_cast<std::size_t>(m)] = sum;
    }
    return p[static_cast<std::size_t>(n)];
}

namespace {

// class_of_size search. A profile whose nonzero s_i are all >= 2 (and
// s_q >= 1) makes the class size split into independent factors: one
// factor u - u' + 1 per gap between consecutive used values u > u', and
// a final factor u_min + 1 for the smallest used value. Each ordered
// factor list therefore yields one witness profile; the search keeps the
// lightest one.
struct Witness {
    Int n;
    std::vector<Int> values;  // diagonal sequence entries
};

void consider(const std::vector<Int>& factors, std::optional<Witness>& best) {
    const std::size_t p = factors.size();
    // factors[p-1] is the tail (u_min + 1); earlier entries are gap
    // factors from the top down.
    std::vector<Int> used(p);
    used[p - 1] = factors[p - 1] - 1;
    for (std::size_t j = p - 1; j > 0; --j) used[j - 1] = used[j] + factors[j - 1] - 1;
    SProfile sp;
    sp.q = used[0];
    sp.s.assign(static_cast<std::size_t>(sp.q), 0);
    sp.s[static_cast<std::size_t>(used[0] - 1)] = 1;  // s_q = 1
    for (std::size_t j = 1; j < p; ++j) sp.s[static_cast<std::size_t>(used[j] - 1)] = 2;
    const Int n = sp.weight();
    const DiagonalSequence d = from_s_profile(sp);
    std::vector<Int> values(d.values().begin(), d.values().end());
    if (!best || n < best->n || (n == best->n && values < best->values))
        best = Witness{n, std::move(values)};
}

void search_factorizations(Int remaining, std::vector<Int>& factors,
                           std::optional<Witness>& best) {
    if (remaining == 1) {
        if (!factors.empty()) consider(factors, best);
        return;
    }
    for (Int f = 2; f <= remaining; ++f) {
        if (remaining % f != 0) continue;
        factors.push_back(f);
        search_factorizations(remaining / f, factors, best);
        factors.pop_back();
    }
}

}  // namespace

DiagonalSequence class_of_size(Int m) {
    if (m < 1) fail(ErrorKind::ParseError, "class size must be a positive integer");
    if (m == 1) return DiagonalSequence::from_valid({1});
    std::optional<Witness> best;
    std::vector<Int> factors;
    search_factorizations(m, factors, best);
    assert(best);
    DiagonalSequence d = DiagonalSequence::from_valid(std::move(best->values));
    assert(count_class(d) == m);
    return d;
}

}  // namespace diagseq
