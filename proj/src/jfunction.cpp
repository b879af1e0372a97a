#include "jseq/jfunction.hpp"

#include <vector>

#include "jseq/errors.hpp"

namespace jseq {

namespace {

BigInt sigma_pow(long n, unsigned long e) {
    if (n < 1) throw DomainError("sigma wants n >= 1");
    BigInt total = 0, dp;
    for (long d = 1; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), e);
        total += dp;
        long other = n / d;
        if (other != d) {
            mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(other), e);
            total += dp;
        }
    }
    return total;
}

// sigma values for all n < N at once
std::vector<BigInt> sigma_sieve(long N, unsigned long e) {
    std::vector<BigInt> s(static_cast<size_t>(std::max(N, 0L)), BigInt(0));
    BigInt dp;
    for (long d = 1; d < N; ++d) {
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), e);
        for (long m = d; m < N; m += d) s[static_cast<size_t>(m)] += dp;
    }
    return s;
}

ExactSeries eisenstein(long N, long scale, unsigned long e) {
    if (N < 1) throw DomainError("eisenstein series wants truncation >= 1");
    ExactSeries r(0, N);
    r.coeffs[0] = 1;
    auto s = sigma_sieve(N, e);
    for (long n = 1; n < N; ++n) r.coeffs[static_cast<size_t>(n)] = scale * s[static_cast<size_t>(n)];
    return r;
}

}  // namespace

BigInt sigma3(long n) { return sigma_pow(n, 3); }
BigInt sigma5(long n) { return sigma_pow(n, 5); }

ExactSeries eisenstein_e4(long N) { return eisenstein(N, 240, 3); }
ExactSeries eisenstein_e6(long N) { return eisenstein(N, -504, 5); }

ExactSeries discriminant_delta(long N) {
    if (N < 2) throw DomainError("discriminant_delta wants truncation >= 2");
    // eta product prod (1-q^n) = sum_k (-1)^k q^{k(3k-1)/2} over all integers k
    long M = N - 1;  // need the 24th power to order M, then shift by q
    ExactSeries eta(0, M);
    eta.coeffs[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 >= M && g2 >= M) break;
        BigInt s = (k % 2 != 0) ? -1 : 1;
        if (g1 < M) eta.coeffs[static_cast<size_t>(g1)] += s;
        if (g2 < M) eta.coeffs[static_cast<size_t>(g2)] += s;
    }
    ExactSeries eta24 = series_pow(eta, 24);
    ExactSeries delta(1, N);
    delta.coeffs = std::move(eta24.coeffs);
    return delta;
}

const char* route_name(Route r) {
    return r == Route::eisenstein_e4 ? "eisenstein-E4" : "eisenstein-E6";
}

const BigInt& CoefficientTable::c(long n) const {
    auto it = values.find(n);
    if (it == values.end())
        throw DomainError("coefficient c(" + std::to_string(n) + ") not in table");
    return it->second;
}

long CoefficientTable::max_n() const {
    if (values.empty()) throw DomainError("empty coefficient table");
    return values.rbegin()->first;
}

CoefficientTable j_coefficients(long count, Route route) {
    if (count < 1) throw DomainError("j_coefficients wants count >= 1");
    long T = count + 1;  // numerator truncation; j valid for exponents < count
    ExactSeries inv_delta = series_inv(discriminant_delta(T + 1));
    ExactSeries j;
    if (route == Route::eisenstein_e4) {
        j = series_mul(series_pow(eisenstein_e4(T), 3), inv_delta);
    } else {
        j = series_mul(series_pow(eisenstein_e6(T), 2), inv_delta);
        j = series_scalar_add(j, BigInt(1728));
    }
    if (j.offset != -1 || j.truncation < count)
        throw ConsistencyError("j-series window came out wrong");

    CoefficientTable table;
    table.source = route_name(route);
    for (long n = -1; n < count; ++n) table.values[n] = j.at(n);

    // known leading values
    static const BigInt known[] = {BigInt(1), BigInt(744), BigInt(196884), BigInt(21493760)};
    for (long n = -1; n <= 2 && n < count; ++n) {
        if (table.values[n] != known[n + 1])
            throw ConsistencyError("known coefficient c(" + std::to_string(n) + ") mismatch");
    }
    // positivity, and growth from n = 1 on
    for (long n = 0; n < count; ++n) {
        if (table.values[n] <= 0)
            throw ConsistencyError("c(" + std::to_string(n) + ") not positive");
    }
    for (long n = 1; n + 1 < count; ++n) {
        if (table.values[n + 1] <= table.values[n])
            throw ConsistencyError("c(n) failed to grow at n=" + std::to_string(n));
    }
    return table;
}

CoefficientTable j_coefficients_checked(long count) {
    CoefficientTable e4 = j_coefficients(count, Route::eisenstein_e4);
    CoefficientTable e6 = j_coefficients(count, Route::eisenstein_e6);
    for (const auto& [n, v] : e4.values) {
        const BigInt& w = e6.c(n);
        if (v != w)
            throw ConsistencyError("route disagreement at n=" + std::to_string(n) + ": " +
                                   v.get_str() + " vs " + w.get_str());
    }
    return e4;
}

}  // namespace jseq
