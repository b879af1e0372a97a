#pragma once

#include <map>
#include <string>

#include "jseq/series.hpp"

namespace jseq {

// Sum of cubes (resp. fifth powers) of the positive divisors of n; n >= 1.
BigInt sigma3(long n);
BigInt sigma5(long n);

// 1 + 240*sum sigma3(n) q^n, truncated at N (offset 0).
ExactSeries eisenstein_e4(long N);
// 1 - 504*sum sigma5(n) q^n, truncated at N (offset 0). Oracle route only.
ExactSeries eisenstein_e6(long N);
// q*prod (1-q^n)^24 truncated at N (offset 1), via the pentagonal-number
// expansion of the eta product raised to the 24th power.
ExactSeries discriminant_delta(long N);

enum class Route { eisenstein_e4, eisenstein_e6 };
const char* route_name(Route r);

// Exact Fourier coefficients c(n) of j, keyed by n from -1 upward.
struct CoefficientTable {
    std::map<long, BigInt> values;
    std::string source;  // "eisenstein-E4" | "eisenstein-E6" | "cache"

    const BigInt& c(long n) const;   // throws DomainError when absent
    bool has(long n) const { return values.count(n) != 0; }
    long max_n() const;              // largest key (>= 0 for any nonempty table)

    // Equality is value equality; the producing route is not part of identity.
    friend bool operator==(const CoefficientTable& a, const CoefficientTable& b) {
        return a.values == b.values;
    }
};

// c(-1)=1 and c(0..count-1) via the requested route:
//   E4: E4^3 / Delta          E6: E6^2 / Delta + 1728
// Checks the known leading values, positivity and growth before returning.
CoefficientTable j_coefficients(long count, Route route);

// Both routes, cross-checked entry by entry; ConsistencyError on any mismatch.
CoefficientTable j_coefficients_checked(long count);

}  // namespace jseq
