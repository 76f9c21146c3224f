#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ltimes/errors.hpp"

namespace ltimes {

using Int = mpz_class;
using Rat = mpq_class;

/// A formal power series over Z, known exactly up to an explicit truncation
/// degree D. Index i holds the coefficient of t^i; coefficients beyond D are
/// unknown, not zero. Values are immutable after construction.
class TruncatedSeries {
public:
    /// coeffs[i] is the coefficient of t^i; the truncation degree is
    /// coeffs.size() - 1. An empty vector is rejected.
    explicit TruncatedSeries(std::vector<Int> coeffs);

    static TruncatedSeries zero(std::size_t degree);
    static TruncatedSeries one(std::size_t degree);

    std::size_t truncation_degree() const { return coeffs_.size() - 1; }
    const Int& operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const Int> coeffs() const { return coeffs_; }

    /// Prefix of this series up to new_degree <= truncation_degree().
    TruncatedSeries truncated(std::size_t new_degree) const;

    /// This series reinterpreted as a polynomial and padded with explicit
    /// zeros up to new_degree >= truncation_degree(). Only meaningful when
    /// the data is exact beyond its stated degree (catalog polynomials).
    TruncatedSeries zero_extended(std::size_t new_degree) const;

    bool operator==(const TruncatedSeries&) const = default;

    std::string str() const;

private:
    std::vector<Int> coeffs_;
};

/// A truncated series with nonnegative coefficients: a Betti profile.
class BettiSeries {
public:
    explicit BettiSeries(TruncatedSeries s);
    explicit BettiSeries(std::vector<Int> coeffs);

    const TruncatedSeries& series() const { return series_; }
    std::size_t truncation_degree() const { return series_.truncation_degree(); }
    const Int& operator[](std::size_t i) const { return series_[i]; }
    std::span<const Int> coeffs() const { return series_.coeffs(); }

    BettiSeries truncated(std::size_t new_degree) const;

    bool operator==(const BettiSeries&) const = default;

private:
    TruncatedSeries series_;
};

/// Coefficientwise sum. Both operands must have the same truncation degree.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at the common degree. Both operands must have
/// the same truncation degree.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Reciprocal of a denominator of the shape 1 - (nonnegative tail), i.e.
/// den[0] = 1 and den[i] <= 0 for i >= 1. den is exact polynomial data; the
/// result (B_0,...,B_D) satisfies B_0 = 1 and
///     B_i = sum_{j=1}^{i} |den_j| B_{i-j},
/// so every B_i >= 0 and mul(den, result) = 1 up to degree D.
TruncatedSeries reciprocal_unit(const TruncatedSeries& den, std::size_t degree);

/// num / den truncated at degree. num and den are exact polynomial data;
/// den must satisfy the reciprocal_unit shape. mul(result, den) = num up to
/// the requested degree.
TruncatedSeries divide(const TruncatedSeries& num, const TruncatedSeries& den,
                       std::size_t degree);

/// Default cap on the determinant route; it is an O(i^3) verification
/// oracle over big rationals, not the production path.
inline constexpr std::size_t kDeterminantIndexCap = 16;

/// The i-th reciprocal coefficient B_i computed via the (i+1)x(i+1)
/// determinant scaled by 1/i!, evaluated in exact rational arithmetic.
/// b holds the denominator coefficients, b[0] = 1. The quotient is asserted
/// to be an integer; a fractional result is an internal-consistency error.
/// Must agree with reciprocal_unit for every admissible b.
Int b_via_determinant(std::span<const Int> b, std::size_t i,
                      std::size_t index_cap = kDeterminantIndexCap);

/// (1 + t)^n truncated at degree: the binomial coefficients C(n, i).
TruncatedSeries binomial_series(unsigned n, std::size_t degree);

} // namespace ltimes
