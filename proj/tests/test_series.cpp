#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ltimes/series.hpp"

using namespace ltimes;

namespace {

TruncatedSeries ts(std::vector<long> v) {
    std::vector<Int> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return TruncatedSeries(std::move(c));
}

// Independent termwise remultiplication oracle: checks mul(den, got) == expect
// coefficient by coefficient, with den and expect padded to a common degree.
bool remultiplies_to(const TruncatedSeries& den, const TruncatedSeries& got,
                     const TruncatedSeries& expect) {
    const std::size_t D = got.truncation_degree();
    TruncatedSeries product = mul(den.zero_extended(D), got);
    TruncatedSeries want = expect.zero_extended(D);
    for (std::size_t i = 0; i <= D; ++i)
        if (product[i] != want[i]) return false;
    return true;
}

} // namespace

TEST_CASE("add: identities and small sums") {
    CHECK(add(ts({1, 1, 0}), ts({0, 0, 0})) == ts({1, 1, 0}));
    CHECK(add(ts({1, 1, 1}), ts({1, 1, 1})) == ts({2, 2, 2}));
    CHECK(add(ts({1, 2}), ts({3, 4})) == ts({4, 6}));
}

TEST_CASE("add: degree mismatch is rejected") {
    CHECK_THROWS_AS(add(ts({1, 1}), ts({1, 1, 1})), DegreeMismatchError);
}

TEST_CASE("mul: binomial square and identity") {
    CHECK(mul(ts({1, 1, 0}), ts({1, 1, 0})) == ts({1, 2, 1}));
    CHECK(mul(ts({1, 1, 0, 0}), TruncatedSeries::one(3)) == ts({1, 1, 0, 0}));
}

TEST_CASE("mul: hand convolution oracle") {
    // (1+t)(1+t+2t^2+3t^3) = 1+2t+3t^2+5t^3 truncated at 3
    CHECK(mul(ts({1, 1, 0, 0}), ts({1, 1, 2, 3})) == ts({1, 2, 3, 5}));
}

TEST_CASE("mul: degree mismatch is rejected") {
    CHECK_THROWS_AS(mul(ts({1}), ts({1, 1})), DegreeMismatchError);
}

TEST_CASE("reciprocal_unit: geometric series") {
    CHECK(reciprocal_unit(ts({1, -1}), 4) == ts({1, 1, 1, 1, 1}));
}

TEST_CASE("reciprocal_unit: Fibonacci denominator") {
    TruncatedSeries den = ts({1, -1, -1});
    TruncatedSeries got = reciprocal_unit(den, 6);
    CHECK(got == ts({1, 1, 2, 3, 5, 8, 13}));
    CHECK(remultiplies_to(den, got, TruncatedSeries::one(0)));
}

TEST_CASE("reciprocal_unit: doubling check") {
    TruncatedSeries got = reciprocal_unit(ts({1, -2}), 3);
    CHECK(got == ts({1, 2, 4, 8}));
    for (std::size_t i = 1; i <= 3; ++i)
        CHECK(got[i] == 2 * got[i - 1]);
}

TEST_CASE("reciprocal_unit: rejects non-unit and bad shape") {
    CHECK_THROWS_AS(reciprocal_unit(ts({2, -1}), 3), NotAUnitError);
    CHECK_THROWS_AS(reciprocal_unit(ts({1, 1}), 3), ShapeError);
    CHECK_THROWS_AS(reciprocal_unit(ts({1, -1, 2}), 3), ShapeError);
}

TEST_CASE("divide: Fibonacci shift") {
    TruncatedSeries num = ts({1, 1});
    TruncatedSeries den = ts({1, -1, -1});
    TruncatedSeries got = divide(num, den, 5);
    CHECK(got == ts({1, 2, 3, 5, 8, 13}));
    CHECK(remultiplies_to(den, got, num));
}

TEST_CASE("divide: unit denominators") {
    CHECK(divide(TruncatedSeries::one(0), ts({1, -1}), 3) == ts({1, 1, 1, 1}));
    CHECK(divide(ts({1, 1}), ts({1, -1}), 3) == ts({1, 2, 2, 2}));
}

TEST_CASE("divide: propagates denominator errors") {
    CHECK_THROWS_AS(divide(ts({1}), ts({1, 1}), 3), ShapeError);
}

TEST_CASE("determinant route: base cases") {
    std::vector<Int> b = {Int(1), Int(-1), Int(-1)};
    CHECK(b_via_determinant(b, 0) == 1);
    CHECK(b_via_determinant(b, 2) == 2);
    CHECK(b_via_determinant(b, 5) == 8);
}

TEST_CASE("determinant route: cap and unit checks") {
    std::vector<Int> b = {Int(1), Int(-1)};
    CHECK_THROWS_AS(b_via_determinant(b, 17), ValidationError);
    std::vector<Int> bad = {Int(2)};
    CHECK_THROWS_AS(b_via_determinant(bad, 1), NotAUnitError);
}

TEST_CASE("property: determinant equals recurrence") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coeff(0, 9);
    std::uniform_int_distribution<int> len(1, 12);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Int> b = {Int(1)};
        const int L = len(rng);
        for (int j = 0; j < L; ++j) b.emplace_back(-coeff(rng));
        TruncatedSeries den{std::vector<Int>(b)};
        TruncatedSeries B = reciprocal_unit(den, 12);
        for (std::size_t i = 0; i <= 12; ++i)
            CHECK(b_via_determinant(b, i) == B[i]);
    }
}

TEST_CASE("property: remultiplication up to degree 64") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coeff(0, 9);
    std::uniform_int_distribution<int> len(1, 10);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Int> d = {Int(1)};
        const int L = len(rng);
        for (int j = 0; j < L; ++j) d.emplace_back(-coeff(rng));
        TruncatedSeries den{std::move(d)};
        TruncatedSeries recip = reciprocal_unit(den, 64);
        TruncatedSeries product = mul(den.zero_extended(64), recip);
        CHECK(product == TruncatedSeries::one(64));
    }
}

TEST_CASE("property: reciprocal coefficients are nonnegative") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(0, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Int> d = {Int(1)};
        for (int j = 0; j < 8; ++j) d.emplace_back(-coeff(rng));
        TruncatedSeries B = reciprocal_unit(TruncatedSeries{std::move(d)}, 32);
        for (std::size_t i = 0; i <= 32; ++i)
            CHECK(B[i] >= 0);
    }
}

TEST_CASE("property: more-negative tails dominate coefficientwise") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(0, 5);
    std::uniform_int_distribution<int> extra(0, 4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Int> d1 = {Int(1)}, d2 = {Int(1)};
        for (int j = 0; j < 6; ++j) {
            int base = coeff(rng);
            d1.emplace_back(-base);
            d2.emplace_back(-(base + extra(rng)));
        }
        TruncatedSeries B1 = reciprocal_unit(TruncatedSeries{std::move(d1)}, 24);
        TruncatedSeries B2 = reciprocal_unit(TruncatedSeries{std::move(d2)}, 24);
        for (std::size_t i = 0; i <= 24; ++i)
            CHECK(B2[i] >= B1[i]);
    }
}

TEST_CASE("binomial_series matches Pascal rows") {
    CHECK(binomial_series(0, 3) == ts({1, 0, 0, 0}));
    CHECK(binomial_series(3, 3) == ts({1, 3, 3, 1}));
    CHECK(binomial_series(2, 4) == ts({1, 2, 1, 0, 0}));
    // (1+t)^5 truncated below its degree
    CHECK(binomial_series(5, 2) == ts({1, 5, 10}));
}

TEST_CASE("BettiSeries rejects negative coefficients") {
    CHECK_THROWS_AS(BettiSeries(ts({1, -1})), ShapeError);
    CHECK(BettiSeries(ts({1, 2, 0}))[1] == 2);
}

TEST_CASE("series constructors reject empty data") {
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Int>{}), ValidationError);
}

TEST_CASE("truncated and zero_extended") {
    TruncatedSeries s = ts({1, 2, 3});
    CHECK(s.truncated(1) == ts({1, 2}));
    CHECK(s.zero_extended(4) == ts({1, 2, 3, 0, 0}));
    CHECK_THROWS_AS(s.truncated(5), InsufficientTruncationError);
}
