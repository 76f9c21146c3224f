#include "ltimes/series.hpp"

#include <sstream>
#include <utility>

namespace ltimes {

TruncatedSeries::TruncatedSeries(std::vector<Int> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw ValidationError("a truncated series needs at least the degree-0 coefficient");
}

TruncatedSeries TruncatedSeries::zero(std::size_t degree) {
    return TruncatedSeries(std::vector<Int>(degree + 1, Int(0)));
}

TruncatedSeries TruncatedSeries::one(std::size_t degree) {
    std::vector<Int> c(degree + 1, Int(0));
    c[0] = 1;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_degree) const {
    if (new_degree > truncation_degree())
        throw InsufficientTruncationError(
            "cannot truncate to degree " + std::to_string(new_degree) +
            ": only known up to degree " + std::to_string(truncation_degree()));
    return TruncatedSeries(std::vector<Int>(
        coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_degree) + 1));
}

TruncatedSeries TruncatedSeries::zero_extended(std::size_t new_degree) const {
    if (new_degree < truncation_degree())
        return truncated(new_degree);
    std::vector<Int> c = coeffs_;
    c.resize(new_degree + 1, Int(0));
    return TruncatedSeries(std::move(c));
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ", ";
        out << coeffs_[i];
    }
    out << ")";
    return out.str();
}

BettiSeries::BettiSeries(TruncatedSeries s) : series_(std::move(s)) {
    for (std::size_t i = 0; i <= series_.truncation_degree(); ++i)
        if (series_[i] < 0)
            throw ShapeError("Betti profile has negative coefficient at index " +
                             std::to_string(i));
}

BettiSeries::BettiSeries(std::vector<Int> coeffs)
    : BettiSeries(TruncatedSeries(std::move(coeffs))) {}

BettiSeries BettiSeries::truncated(std::size_t new_degree) const {
    return BettiSeries(series_.truncated(new_degree));
}

namespace {

void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation_degree() != b.truncation_degree())
        throw DegreeMismatchError(
            "truncation degrees differ: " + std::to_string(a.truncation_degree()) +
            " vs " + std::to_string(b.truncation_degree()));
}

// den[0] must be 1 and the tail must be <= 0: the shape 1 - t*P(t) with P
// coefficientwise nonnegative. Any other denominator is an input error.
void require_unit_shape(const TruncatedSeries& den) {
    if (den[0] != 1)
        throw NotAUnitError("denominator constant coefficient is " + den[0].get_str() +
                            ", expected 1");
    for (std::size_t i = 1; i <= den.truncation_degree(); ++i)
        if (den[i] > 0)
            throw ShapeError("denominator has positive coefficient " + den[i].get_str() +
                             " at index " + std::to_string(i));
}

} // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_degree(a, b);
    std::vector<Int> c(a.truncation_degree() + 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a[i] + b[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_degree(a, b);
    std::vector<Int> c(a.truncation_degree() + 1, Int(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; i + j < c.size(); ++j)
            c[i + j] += a[i] * b[j];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries reciprocal_unit(const TruncatedSeries& den, std::size_t degree) {
    require_unit_shape(den);
    std::vector<Int> B(degree + 1, Int(0));
    B[0] = 1;
    const std::size_t den_deg = den.truncation_degree();
    for (std::size_t n = 1; n <= degree; ++n) {
        Int acc(0);
        for (std::size_t j = 1; j <= std::min(n, den_deg); ++j)
            acc += -den[j] * B[n - j];
        B[n] = std::move(acc);
    }
    return TruncatedSeries(std::move(B));
}

TruncatedSeries divide(const TruncatedSeries& num, const TruncatedSeries& den,
                       std::size_t degree) {
    TruncatedSeries recip = reciprocal_unit(den, degree);
    std::vector<Int> c(degree + 1, Int(0));
    const std::size_t num_deg = num.truncation_degree();
    for (std::size_t n = 0; n <= degree; ++n) {
        Int acc(0);
        for (std::size_t i = 0; i <= std::min(n, num_deg); ++i)
            acc += num[i] * recip[n - i];
        c[n] = std::move(acc);
    }
    return TruncatedSeries(std::move(c));
}

Int b_via_determinant(std::span<const Int> b, std::size_t i, std::size_t index_cap) {
    if (b.empty() || b[0] != 1)
        throw NotAUnitError("determinant route requires b[0] = 1");
    if (i > index_cap)
        throw ValidationError("determinant route capped at index " +
                              std::to_string(index_cap) + ", got " + std::to_string(i));
    if (i == 0)
        return Int(1);

    auto b_at = [&](std::size_t j) { return j < b.size() ? b[j] : Int(0); };

    // The (i+1)x(i+1) matrix: rows r < i carry the scale factor (i - r) on
    // the subdiagonal position (r, r) followed by (i - r)*b_1, (i - r)*b_2,
    // ...; row 0 has a zero in place of the scale factor; the last row is
    // (1, 0, ..., 0, 1).
    const std::size_t n = i + 1;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t c = 1; c <= i; ++c)
        m[0][c] = Rat(Int(i) * b_at(c));
    for (std::size_t r = 1; r < i; ++r) {
        const Int scale = Int(i - r);
        m[r][r] = Rat(scale);
        for (std::size_t c = r + 1; c <= i; ++c)
            m[r][c] = Rat(scale * b_at(c - r));
    }
    m[i][0] = 1;
    m[i][i] = 1;

    // Exact Gaussian elimination with pivot search; det = sign * prod(pivots).
    Rat det(1);
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return Int(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= factor * m[col][c];
        }
    }
    if (sign < 0)
        det = -det;

    Int factorial(1);
    for (std::size_t j = 2; j <= i; ++j)
        factorial *= Int(j);
    Rat quotient = det / Rat(factorial);
    quotient.canonicalize();
    if (quotient.get_den() != 1)
        throw InternalConsistencyError("determinant/" + std::to_string(i) +
                                       "! is not an integer: " + quotient.get_str());
    return quotient.get_num();
}

TruncatedSeries binomial_series(unsigned n, std::size_t degree) {
    std::vector<Int> c(degree + 1, Int(0));
    for (std::size_t k = 0; k <= degree; ++k) {
        if (k > n) break;
        mpz_bin_uiui(c[k].get_mpz_t(), n, static_cast<unsigned long>(k));
    }
    return TruncatedSeries(std::move(c));
}

} // namespace ltimes
