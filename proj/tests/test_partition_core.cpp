#include "diagseq/diagonal.hpp"
#include "diagseq/enumeration.hpp"
#include "diagseq/errors.hpp"
#include "diagseq/partition.hpp"

#include <doctest.h>

#include <functional>
#include <string>

using namespace diagseq;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("make_partition validates") {
    CHECK(make_partition({7, 7, 4, 1, 1, 1}).weight() == 21);
    CHECK(make_partition({}).empty());
    CHECK(make_partition({}).weight() == 0);
    CHECK(kind_of([] { make_partition({1, 2}); }) == ErrorKind::NotSorted);
    CHECK(kind_of([] { make_partition({3, 0}); }) == ErrorKind::NonPositivePart);
    CHECK(kind_of([] { make_partition({-2}); }) == ErrorKind::NonPositivePart);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(make_partition({8, 6, 4, 3})) == make_partition({4, 4, 4, 3, 2, 2, 1, 1}));
    CHECK(conjugate(make_partition({})) == make_partition({}));
    CHECK(conjugate(make_partition({6, 2, 1})) == make_partition({3, 2, 1, 1, 1, 1}));

    // involution over everything small
    for (Int n = 0; n <= 14; ++n)
        for (const Partition& p : partition_range(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("diagonal_sequence on the worked examples") {
    CHECK(diagonal_sequence(make_partition({7, 7, 4, 1, 1, 1})) ==
          validate_diagonal({1, 2, 3, 4, 4, 4, 2, 1}));
    CHECK(diagonal_sequence(make_partition({6, 2, 1})) == validate_diagonal({1, 2, 3, 1, 1, 1}));
    CHECK(diagonal_sequence(make_partition({5, 4})) == validate_diagonal({1, 2, 2, 2, 2}));
    CHECK(diagonal_sequence(make_partition({3, 2, 1})) == validate_diagonal({1, 2, 3}));
    CHECK(diagonal_sequence(make_partition({})).empty());
}

TEST_CASE("v_sequence") {
    CHECK(v_sequence(make_partition({8, 6, 4, 3})) == std::vector<Int>{8, 7, 6, 6});
    CHECK(v_sequence(make_partition({7, 7, 4, 1, 1, 1})) == std::vector<Int>{7, 8, 6, 4, 5, 6});
    CHECK(v_sequence(make_partition({})).empty());

    // shape and reconstruction
    for (Int n = 0; n <= 16; ++n)
        for (const Partition& p : partition_range(n)) {
            const auto v = v_sequence(p);
            std::vector<Int> rebuilt(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                CHECK(v[i] >= static_cast<Int>(i) + 1);
                if (i + 1 < v.size()) CHECK(v[i + 1] - v[i] <= 1);
                rebuilt[i] = v[i] - static_cast<Int>(i);
            }
            CHECK(make_partition(rebuilt) == p);
        }
}

TEST_CASE("validate_diagonal") {
    const DiagonalSequence d = validate_diagonal({1, 2, 3, 4, 4, 4, 2, 1});
    CHECK(d.q() == 4);
    CHECK(d.length() == 8);
    CHECK(d.weight() == 21);

    CHECK(validate_diagonal({}).empty());

    try {
        validate_diagonal({1, 2, 1, 2});
        FAIL("accepted a rise after the peak");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadShape);
        CHECK(std::string(e.what()).find("k=4") != std::string::npos);
    }
    try {
        validate_diagonal({2, 1});
        FAIL("accepted a sequence not starting at 1");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadShape);
        CHECK(std::string(e.what()).find("k=1") != std::string::npos);
    }
    CHECK(kind_of([] { validate_diagonal({1, 3}); }) == ErrorKind::BadShape);
    CHECK(kind_of([] { validate_diagonal({1, 2, 0, 1}); }) == ErrorKind::BadShape);
}

TEST_CASE("s-profile round trip") {
    const DiagonalSequence d = validate_diagonal({1, 2, 3, 4, 4, 4, 2, 1});
    const SProfile sp = to_s_profile(d);
    CHECK(sp.q == 4);
    CHECK(sp.s == std::vector<Int>{1, 1, 0, 2});
    CHECK(sp.weight() == 21);
    CHECK(sp.l() == 6);
    CHECK(sp.length() == 8);
    CHECK(from_s_profile(sp) == d);

    CHECK(to_s_profile(validate_diagonal({1})) == SProfile{1, {0}});
    CHECK(to_s_profile(validate_diagonal({1, 2, 2})) == SProfile{2, {0, 1}});
    CHECK(SProfile{1, {0}}.weight() == 1);
    CHECK(SProfile{2, {0, 1}}.weight() == 5);

    CHECK(kind_of([] { to_s_profile(DiagonalSequence{}); }) == ErrorKind::BadShape);
}

TEST_CASE("sum of squares identity examples") {
    CHECK(sum_squares_pair(make_partition({6, 2, 1})) == 58);
    CHECK(sum_squares_pair(make_partition({5, 4})) == 58);
    CHECK(sum_squares_pair(make_partition({1})) == 2);
    CHECK(diagonal_moment(diagonal_sequence(make_partition({6, 2, 1}))) == 58);
    CHECK(diagonal_sequence(make_partition({6, 2, 1})) !=
          diagonal_sequence(make_partition({5, 4})));
}

TEST_CASE("core invariants for all partitions of n <= 25") {
    for (Int n = 0; n <= 25; ++n) {
        for (const Partition& p : partition_range(n)) {
            const DiagonalSequence d = diagonal_sequence(p);

            // conjugation invariance
            CHECK(diagonal_sequence(conjugate(p)) == d);
            // shape: re-validating the computed values succeeds
            CHECK(validate_diagonal(d.values()) == d);
            // mass
            CHECK(d.weight() == n);
            // profile round trip
            if (!d.empty()) CHECK(from_s_profile(to_s_profile(d)) == d);
            // moment identity
            CHECK(sum_squares_pair(p) == diagonal_moment(d));
        }
    }
}
