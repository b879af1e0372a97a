#pragma once

#include "jseq/ball.hpp"
#include "jseq/jfunction.hpp"
#include "jseq/report.hpp"

namespace jseq {

// Named closed-form bound functions. a/b sandwich c(n); e is the simplified
// lower bound; f/g bound the ratio r(n) = c(n+1)/c(n); k/l are the sharper
// sandwich; p/q bound u(n) = c(n-1)c(n+1)/c(n)^2; d, h, m are their kernels.
enum class BoundName { a, b, d, e, f, g, h, k, l, m, p, q };

const char* bound_name(BoundName b);
BoundName bound_from_name(std::string_view name);  // DomainError on unknown
long bound_valid_from(BoundName b);

// Expansion coefficient (1,k): prod_{j<k} (4-(2j+1)^2) / (4^k k!), exact.
Rational expansion_coeff(unsigned k);

// Partial main sum  sum_{k<p} (-1/(8 pi))^k (1,k) x^{-k/2}; d = order 5, m = order 6.
Ball main_partial_sum(const Ball& x, unsigned p, mpfr_prec_t prec);
// e^{4 pi sqrt(x)} / (sqrt(2) x^{3/4})
Ball asymptotic_prefactor(const Ball& x, mpfr_prec_t prec);

// Prefactor times the partial main sum (the truncated expansion of c(n)).
Ball truncated_main(long n, unsigned p, mpfr_prec_t prec);
// (1/sqrt2) |(1,p)| / (4 pi)^p + 62 sqrt2 e^{-2 pi sqrt n} n^{p/2}
Ball remainder_bound(long n, unsigned p, mpfr_prec_t prec);
Ball remainder_bound_limit(unsigned p, mpfr_prec_t prec);  // n -> infinity value

// Formula evaluation at a real argument (no validity-threshold check); used by
// root bracketing, which probes the closed forms between integers.
Ball eval_bound_at(BoundName name, const Ball& x, mpfr_prec_t prec);
// Integer evaluation; DomainError below the bound's validity threshold.
Ball eval_bound(BoundName name, long n, mpfr_prec_t prec);

// n^{1/4} (d(n) - C5 n^{-5/2}) - 1, the margin of e(n) <= a(n).
Ball lower_margin_a(const Ball& x, mpfr_prec_t prec);

struct RunLimits {
    PrecisionPolicy policy;
    int jobs = 1;
};

enum class SandwichPair { ab, kl };

// Certifies lower(n) < c(n) < upper(n) for each n in [n_lo, n_hi]; entries below
// the pair's validity threshold are flagged, not suppressed.
CheckBlock sandwich_check(SandwichPair pair, long n_lo, long n_hi, const CoefficientTable& table,
                          const RunLimits& limits);

enum class RatioPair { fg, pq };

// Two blocks: "...-direct" certifies the bound pair against the exact ratio for
// every n; "...-chain" certifies the bound pair against the sandwich-derived
// interval from the pair's composite threshold upward.
std::vector<CheckBlock> ratio_bound_consistency(RatioPair pair, long n_lo, long n_hi,
                                                const CoefficientTable& table,
                                                const RunLimits& limits);

// Reconstructs the uniform remainder constant for the given order: finds the
// smallest n* with remainder_bound(n*) certifiably below the constant, then
// certifies bound <= constant and strict decrease across [1, horizon].
CheckBlock remainder_reconstruction(unsigned p_order, const std::string& constant_literal,
                                    long horizon, const RunLimits& limits);

// Pairing/order facts across the bound family (a<b, k<l, f<g, p<q, e<=a, a<=k,
// l<=b, q<1, u<1); each entry reports exactly which comparison failed.
CheckBlock bound_order_check(long n_lo, long n_hi, const CoefficientTable& table,
                             const RunLimits& limits);

// c(n) sqrt2 n^{3/4} e^{-4 pi sqrt n} within [1-tol, 1], strict on both sides.
CheckBlock asymptotic_check(const std::vector<std::pair<long, std::string>>& n_and_tolerance,
                            const CoefficientTable& table, const RunLimits& limits);

}  // namespace jseq
