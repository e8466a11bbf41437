#include "diagseq/extremal.hpp"

#include "diagseq/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace diagseq {

namespace {
std::string a1_text(const A1Set& a1) {
    std::ostringstream out;
    out << "A1 = {";
    for (std::size_t i = 0; i < a1.values.size(); ++i) {
        if (i) out << ",";
        out << a1.values[i];
    }
    out << "}";
    return out.str();
}
}  // namespace

bool A1Set::contains(Int k) const {
    return std::binary_search(values.begin(), values.end(), k);
}

Partition alpha_bar(const SProfile& sp) {
    std::vector<Int> parts(static_cast<std::size_t>(sp.q));
    Int suffix = 0;  // sum_{k=i..q} s_k, built from the top
    for (Int i = sp.q; i >= 1; --i) {
        suffix += sp.s[static_cast<std::size_t>(i - 1)];
        parts[static_cast<std::size_t>(i - 1)] = sp.q - i + 1 + suffix;
    }
    return Partition::from_valid(std::move(parts));
}

Partition alpha_under(const SProfile& sp) {
    std::vector<Int> parts;
    parts.reserve(static_cast<std::size_t>(sp.length()));
    for (Int value = sp.q; value >= 1; --value)
        for (Int rep = 0; rep <= sp.s[static_cast<std::size_t>(value - 1)]; ++rep)
            parts.push_back(value);
    return Partition::from_valid(std::move(parts));
}

SProfile s_from_strict(const Partition& p) {
    if (p.empty())
        fail(ErrorKind::NotStrict, "the empty partition has no (q, s)-profile");
    const auto parts = p.parts();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] == parts[i + 1])
            fail(ErrorKind::NotStrict, "part #" + std::to_string(i + 1) +
                                           " repeats; strictly decreasing parts required");
    SProfile sp;
    sp.q = static_cast<Int>(parts.size());
    sp.s.resize(parts.size());
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) sp.s[i] = parts[i] - parts[i + 1] - 1;
    sp.s[parts.size() - 1] = parts[parts.size() - 1] - 1;
    return sp;
}

A1Set a1_set(const DiagonalSequence& d) {
    if (d.empty()) return {};
    const SProfile sp = to_s_profile(d);
    A1Set a1;
    a1.values.push_back(sp.q);
    Int acc = sp.q;
    for (Int i = sp.q; i >= 1; --i) {
        acc += sp.s[static_cast<std::size_t>(i - 1)];
        if (acc != a1.values.back()) a1.values.push_back(acc);
    }
    return a1;
}

DiagonalSequence peel_first_row(const DiagonalSequence& d, Int k) {
    if (d.empty() || !a1_set(d).contains(k))
        fail(ErrorKind::InvalidPeel,
             "cannot peel a row of length " + std::to_string(k) + "; " + a1_text(a1_set(d)));
    const auto values = d.values();
    std::vector<Int> peeled;
    peeled.reserve(values.size() - 1);
    for (Int j = 2; j <= k; ++j) peeled.push_back(d.at(j) - 1);
    for (Int j = k + 1; j <= d.length(); ++j) peeled.push_back(d.at(j));
    while (!peeled.empty() && peeled.back() == 0) peeled.pop_back();
    return DiagonalSequence::from_valid(std::move(peeled));
}

bool majorizes(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        fail(ErrorKind::WeightMismatch, "majorization compares partitions of the same number (" +
                                            std::to_string(a.weight()) + " vs " +
                                            std::to_string(b.weight()) + ")");
    const std::size_t len = std::max(a.size(), b.size());
    Int prefix_a = 0;
    Int prefix_b = 0;
    for (std::size_t i = 0; i < len; ++i) {
        prefix_a += i < a.size() ? a[i] : 0;
        prefix_b += i < b.size() ? b[i] : 0;
        if (prefix_a < prefix_b) return false;
    }
    return true;
}

Partition stratum_max(const DiagonalSequence& d, Int k) {
    const A1Set a1 = a1_set(d);
    if (!a1.contains(k))
        fail(ErrorKind::EmptyStratum,
             "no member has " + std::to_string(k) + " parts; " + a1_text(a1));
    // Remove the first column (height k), take the top of the reduced
    // class, put the column back, pad with rows of one.
    const DiagonalSequence peeled = peel_first_row(d, k);
    std::vector<Int> parts;
    if (!peeled.empty()) {
        const Partition top = alpha_bar(to_s_profile(peeled));
        parts.assign(top.parts().begin(), top.parts().end());
    }
    assert(static_cast<Int>(parts.size()) <= k);
    for (Int& part : parts) ++part;
    parts.resize(static_cast<std::size_t>(k), 1);
    return Partition::from_valid(std::move(parts));
}

Partition stratum_min(const DiagonalSequence& d, Int k) {
    const A1Set a1 = a1_set(d);
    if (!a1.contains(k))
        fail(ErrorKind::EmptyStratum,
             "no member has " + std::to_string(k) + " parts; " + a1_text(a1));
    // Greedy row-by-row maximum of the conjugate stratum (largest part k):
    // always take the largest admissible next row that fits under the
    // previous one. Its conjugate is the stratum minimum.
    std::vector<Int> rows;
    DiagonalSequence rest = d;
    Int prev = k;
    while (!rest.empty()) {
        const A1Set choices = a1_set(rest);
        Int pick = 0;
        for (Int c : choices.values)
            if (c <= prev) pick = c;
        assert(pick > 0);
        rows.push_back(pick);
        rest = peel_first_row(rest, pick);
        prev = pick;
    }
    return conjugate(Partition::from_valid(std::move(rows)));
}

}  // namespace diagseq
