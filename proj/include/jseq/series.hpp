#pragma once

#include <vector>

#include "jseq/numeric.hpp"

namespace jseq {

// Dense truncated power series with exact integer coefficients and a leading
// exponent offset (the j-function lives at offset -1). Coefficients are valid
// for exponents in [offset, truncation); arithmetic never reports terms at or
// beyond the attainable truncation of its inputs.
struct ExactSeries {
    long offset = 0;
    long truncation = 0;
    std::vector<BigInt> coeffs;  // coeffs[i] is the coefficient of q^(offset+i)

    ExactSeries() = default;
    ExactSeries(long offset_, long truncation_);

    long terms() const { return truncation - offset; }
    bool in_window(long e) const { return e >= offset && e < truncation; }
    const BigInt& at(long exponent) const;  // throws DomainError outside the window
    BigInt& at(long exponent);
    void check_invariants() const;  // coeffs.size() == truncation - offset
};

// Number of terms below which multiplication stays schoolbook.
inline constexpr long kKaratsubaThreshold = 64;

ExactSeries series_add(const ExactSeries& a, const ExactSeries& b);
ExactSeries series_scalar_add(const ExactSeries& a, const BigInt& constant);  // adds at exponent 0
ExactSeries series_mul(const ExactSeries& a, const ExactSeries& b);
ExactSeries series_pow(const ExactSeries& a, unsigned long k);  // k >= 1
// Leading coefficient must be +-1; Newton iteration, result offset = -offset.
ExactSeries series_inv(const ExactSeries& a);

}  // namespace jseq
