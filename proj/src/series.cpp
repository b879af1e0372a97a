#include "jseq/series.hpp"

#include <algorithm>
#include <span>

#include "jseq/errors.hpp"

namespace jseq {

ExactSeries::ExactSeries(long offset_, long truncation_) : offset(offset_), truncation(truncation_) {
    if (truncation < offset) throw DomainError("series truncation below offset");
    coeffs.assign(static_cast<size_t>(truncation - offset), BigInt(0));
}

const BigInt& ExactSeries::at(long exponent) const {
    if (!in_window(exponent)) throw DomainError("series coefficient outside truncation window");
    return coeffs[static_cast<size_t>(exponent - offset)];
}

BigInt& ExactSeries::at(long exponent) {
    if (!in_window(exponent)) throw DomainError("series coefficient outside truncation window");
    return coeffs[static_cast<size_t>(exponent - offset)];
}

void ExactSeries::check_invariants() const {
    if (static_cast<long>(coeffs.size()) != truncation - offset)
        throw ConsistencyError("series coefficient count does not match window");
}

namespace {

using Span = std::span<const BigInt>;

void schoolbook(Span a, Span b, std::vector<BigInt>& out) {
    out.assign(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const mpz_srcptr ai = a[i].get_mpz_t();
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
        }
    }
}

void add_into(std::vector<BigInt>& acc, size_t at, const std::vector<BigInt>& part) {
    if (acc.size() < at + part.size()) acc.resize(at + part.size(), BigInt(0));
    for (size_t i = 0; i < part.size(); ++i) acc[at + i] += part[i];
}

// Full product of coefficient vectors, divide and conquer above the threshold.
void kara(Span a, Span b, std::vector<BigInt>& out) {
    if (a.empty() || b.empty()) {
        out.clear();
        return;
    }
    if (std::min(a.size(), b.size()) <= static_cast<size_t>(kKaratsubaThreshold)) {
        schoolbook(a, b, out);
        return;
    }
    size_t m = std::max(a.size(), b.size()) / 2;
    Span a0 = a.subspan(0, std::min(m, a.size()));
    Span a1 = a.size() > m ? a.subspan(m) : Span{};
    Span b0 = b.subspan(0, std::min(m, b.size()));
    Span b1 = b.size() > m ? b.subspan(m) : Span{};

    std::vector<BigInt> z0, z2;
    kara(a0, b0, z0);
    kara(a1, b1, z2);

    std::vector<BigInt> sa(std::max(a0.size(), a1.size()), BigInt(0));
    for (size_t i = 0; i < a0.size(); ++i) sa[i] = a0[i];
    for (size_t i = 0; i < a1.size(); ++i) sa[i] += a1[i];
    std::vector<BigInt> sb(std::max(b0.size(), b1.size()), BigInt(0));
    for (size_t i = 0; i < b0.size(); ++i) sb[i] = b0[i];
    for (size_t i = 0; i < b1.size(); ++i) sb[i] += b1[i];

    std::vector<BigInt> z1;
    kara(sa, sb, z1);
    for (size_t i = 0; i < z0.size(); ++i) {
        if (i < z1.size()) z1[i] -= z0[i];
    }
    for (size_t i = 0; i < z2.size(); ++i) {
        if (i < z1.size()) z1[i] -= z2[i];
    }

    out.assign(a.size() + b.size() - 1, BigInt(0));
    add_into(out, 0, z0);
    add_into(out, m, z1);
    add_into(out, 2 * m, z2);
    out.resize(a.size() + b.size() - 1);
}

}  // namespace

ExactSeries series_add(const ExactSeries& a, const ExactSeries& b) {
    a.check_invariants();
    b.check_invariants();
    ExactSeries r(std::min(a.offset, b.offset), std::min(a.truncation, b.truncation));
    for (long e = r.offset; e < r.truncation; ++e) {
        BigInt v = 0;
        if (a.in_window(e)) v += a.at(e);
        if (b.in_window(e)) v += b.at(e);
        r.at(e) = v;
    }
    return r;
}

ExactSeries series_scalar_add(const ExactSeries& a, const BigInt& constant) {
    ExactSeries r(a);
    if (!r.in_window(0)) throw DomainError("scalar add outside series window");
    r.at(0) += constant;
    return r;
}

ExactSeries series_mul(const ExactSeries& a, const ExactSeries& b) {
    a.check_invariants();
    b.check_invariants();
    long trunc = std::min(a.truncation + b.offset, b.truncation + a.offset);
    long off = a.offset + b.offset;
    ExactSeries r(off, trunc);
    if (r.terms() == 0) return r;
    std::vector<BigInt> full;
    kara(Span(a.coeffs), Span(b.coeffs), full);
    for (long i = 0; i < r.terms(); ++i)
        r.coeffs[static_cast<size_t>(i)] =
            (static_cast<size_t>(i) < full.size()) ? full[static_cast<size_t>(i)] : BigInt(0);
    return r;
}

ExactSeries series_pow(const ExactSeries& a, unsigned long k) {
    if (k == 0) throw DomainError("series_pow wants a positive exponent");
    ExactSeries acc;
    ExactSeries base(a);
    bool have = false;
    unsigned long e = k;
    while (e) {
        if (e & 1) {
            acc = have ? series_mul(acc, base) : base;
            have = true;
        }
        e >>= 1;
        if (e) base = series_mul(base, base);
    }
    return acc;
}

ExactSeries series_inv(const ExactSeries& a) {
    a.check_invariants();
    if (a.terms() <= 0) throw DomainError("series_inv of an empty window");
    const BigInt& lead = a.coeffs.front();
    if (lead != 1 && lead != -1) throw DomainError("series_inv wants a leading coefficient of +-1");

    // Work on u = a / q^offset, so u(0) = +-1; u*v = 1 + O(q^m).
    long m = a.truncation - a.offset;
    ExactSeries u(0, m);
    u.coeffs = a.coeffs;

    ExactSeries v(0, 1);
    v.coeffs[0] = lead;  // 1/lead == lead for +-1
    long have = 1;
    while (have < m) {
        long next = std::min(2 * have, m);
        ExactSeries u_cut(0, next);
        for (long i = 0; i < next; ++i)
            u_cut.coeffs[static_cast<size_t>(i)] =
                i < u.terms() ? u.coeffs[static_cast<size_t>(i)] : BigInt(0);
        // v is exact to order `have`; zero-pad so the products run to order `next`
        ExactSeries v_pad(0, next);
        for (long i = 0; i < v.terms(); ++i) v_pad.coeffs[static_cast<size_t>(i)] = v.coeffs[static_cast<size_t>(i)];
        // v <- v*(2 - u*v) truncated at next
        ExactSeries uv = series_mul(u_cut, v_pad);
        ExactSeries corr(0, next);
        for (long i = 0; i < next; ++i) {
            BigInt c = uv.in_window(i) ? uv.at(i) : BigInt(0);
            corr.coeffs[static_cast<size_t>(i)] = (i == 0) ? BigInt(2 - c) : BigInt(-c);
        }
        ExactSeries vv = series_mul(v_pad, corr);
        ExactSeries v_next(0, next);
        for (long i = 0; i < next; ++i)
            v_next.coeffs[static_cast<size_t>(i)] = vv.in_window(i) ? vv.at(i) : BigInt(0);
        v = std::move(v_next);
        have = next;
    }

    ExactSeries r(-a.offset, m - a.offset);  // == truncation - 2*offset
    r.coeffs = std::move(v.coeffs);
    return r;
}

}  // namespace jseq
