#include "diagseq/diagonal.hpp"

#include "diagseq/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace diagseq {

namespace {
constexpr Int kMaxWeight = 1'000'000'000;

// Shape check shared by validate_diagonal and the debug path of
// from_valid. Returns the peak q; on violation reports the first
// offending 1-based index.
Int checked_peak(std::span<const Int> values) {
    if (values.empty()) return 0;
    if (values[0] != 1)
        fail(ErrorKind::BadShape, "shape violated at k=1: a diagonal sequence starts with 1");
    std::size_t k = 1;
    while (k < values.size() && values[k] == static_cast<Int>(k) + 1) ++k;
    const Int q = static_cast<Int>(k);
    for (; k < values.size(); ++k) {
        if (values[k] <= 0)
            fail(ErrorKind::BadShape, "shape violated at k=" + std::to_string(k + 1) +
                                          ": entries stay positive (trailing zeros are omitted)");
        if (values[k] > values[k - 1])
            fail(ErrorKind::BadShape, "shape violated at k=" + std::to_string(k + 1) +
                                          ": the sequence never rises again past its peak");
    }
    return q;
}
}  // namespace

DiagonalSequence DiagonalSequence::from_valid(std::vector<Int> values) {
    DiagonalSequence d;
    d.weight_ = std::accumulate(values.begin(), values.end(), Int{0});
    d.values_ = std::move(values);
    std::size_t k = 0;
    while (k < d.values_.size() && d.values_[k] == static_cast<Int>(k) + 1) ++k;
    d.q_ = static_cast<Int>(k);
#ifndef NDEBUG
    assert(checked_peak(d.values_) == d.q_);
#endif
    return d;
}

DiagonalSequence diagonal_sequence(const Partition& p) {
    if (p.empty()) return {};
    // Row i (1-based) contributes one cell to each anti-diagonal k in
    // [i, p_i + i - 1]; accumulate with a difference array over k.
    const auto parts = p.parts();
    Int last = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        last = std::max(last, parts[i] + static_cast<Int>(i));
    std::vector<Int> diff(static_cast<std::size_t>(last) + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        diff[i] += 1;
        diff[static_cast<std::size_t>(parts[i] + static_cast<Int>(i))] -= 1;
    }
    std::vector<Int> values(static_cast<std::size_t>(last));
    Int running = 0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        running += diff[k];
        values[k] = running;
    }
    return DiagonalSequence::from_valid(std::move(values));
}

DiagonalSequence validate_diagonal(std::span<const Int> raw) {
    checked_peak(raw);
    Int weight = std::accumulate(raw.begin(), raw.end(), Int{0});
    if (weight > kMaxWeight)
        fail(ErrorKind::BoundExceeded, "diagonal sequence weight exceeds the 10^9 input cap");
    return DiagonalSequence::from_valid(std::vector<Int>(raw.begin(), raw.end()));
}

DiagonalSequence validate_diagonal(std::initializer_list<Int> raw) {
    return validate_diagonal(std::span<const Int>(raw.begin(), raw.size()));
}

Int SProfile::weight() const {
    Int n = q * (q + 1) / 2;
    for (std::size_t i = 0; i < s.size(); ++i) n += static_cast<Int>(i + 1) * s[i];
    return n;
}

Int SProfile::length() const {
    return q + std::accumulate(s.begin(), s.end(), Int{0});
}

SProfile to_s_profile(const DiagonalSequence& d) {
    if (d.empty())
        fail(ErrorKind::BadShape, "the empty diagonal sequence has no (q, s)-profile");
    SProfile sp;
    sp.q = d.q();
    sp.s.assign(static_cast<std::size_t>(sp.q), 0);
    const auto values = d.values();
    for (std::size_t k = static_cast<std::size_t>(sp.q); k < values.size(); ++k)
        sp.s[static_cast<std::size_t>(values[k] - 1)] += 1;
    return sp;
}

DiagonalSequence from_s_profile(const SProfile& sp) {
    assert(sp.q > 0 && static_cast<Int>(sp.s.size()) == sp.q);
    std::vector<Int> values;
    values.reserve(static_cast<std::size_t>(sp.length()));
    for (Int k = 1; k <= sp.q; ++k) values.push_back(k);
    for (Int value = sp.q; value >= 1; --value)
        for (Int rep = 0; rep < sp.s[static_cast<std::size_t>(value - 1)]; ++rep)
            values.push_back(value);
    return DiagonalSequence::from_valid(std::move(values));
}

Int diagonal_moment(const DiagonalSequence& d) {
    Int sum = 0;
    const auto values = d.values();
    for (std::size_t k = 0; k < values.size(); ++k)
        sum += static_cast<Int>(k + 1) * values[k];
    return 2 * sum;
}

}  // namespace diagseq
