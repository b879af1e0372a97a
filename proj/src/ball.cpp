#include "jseq/ball.hpp"

#include <cstdio>
#include <utility>
#include <vector>

#include "jseq/errors.hpp"

namespace jseq {

namespace {

// Scratch mpfr value with RAII cleanup.
struct Tmp {
    mpfr_t v;
    explicit Tmp(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~Tmp() { mpfr_clear(v); }
    Tmp(const Tmp&) = delete;
    Tmp& operator=(const Tmp&) = delete;
    operator mpfr_ptr() { return v; }
    operator mpfr_srcptr() const { return v; }
};

}  // namespace

Ball::Ball(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadiusPrec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& other) : prec_(other.prec_) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadiusPrec);
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(mid_, 2);
    mpfr_init2(rad_, 2);
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
}

Ball& Ball::operator=(const Ball& other) {
    if (this != &other) {
        prec_ = other.prec_;
        mpfr_set_prec(mid_, prec_);
        mpfr_set(mid_, other.mid_, MPFR_RNDN);
        mpfr_set(rad_, other.rad_, MPFR_RNDU);
    }
    return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept {
    if (this != &other) {
        prec_ = other.prec_;
        mpfr_swap(mid_, other.mid_);
        mpfr_swap(rad_, other.rad_);
    }
    return *this;
}

Ball::~Ball() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

void Ball::bump_rad_ulp(int ternary) {
    if (ternary == 0) return;
    // Round-to-nearest error is at most half an ulp; one ulp keeps the bound safe.
    if (mpfr_zero_p(mid_)) {
        Tmp t(kRadiusPrec);
        mpfr_set_ui_2exp(t, 1, mpfr_get_emin(), MPFR_RNDU);
        mpfr_add(rad_, rad_, t, MPFR_RNDU);
        return;
    }
    Tmp t(kRadiusPrec);
    mpfr_set_ui_2exp(t, 1, mpfr_get_exp(mid_) - prec_, MPFR_RNDU);
    mpfr_add(rad_, rad_, t, MPFR_RNDU);
}

Ball Ball::from_si(long v, mpfr_prec_t prec) {
    Ball r(prec);
    int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::from_bigint(const BigInt& v, mpfr_prec_t prec) {
    Ball r(prec);
    int t = mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::from_rational(const Rational& v, mpfr_prec_t prec) {
    Ball r(prec);
    int t = mpfr_set_q(r.mid_, v.get_mpq_t(), MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::from_decimal(std::string_view literal, mpfr_prec_t prec) {
    return from_rational(rational_from_decimal(literal), prec);
}

Ball Ball::zero(mpfr_prec_t prec) { return Ball(prec); }

Ball Ball::pi(mpfr_prec_t prec) {
    Tmp lo(prec), hi(prec);
    mpfr_const_pi(lo, MPFR_RNDD);
    mpfr_const_pi(hi, MPFR_RNDU);
    return from_endpoints(lo, hi, prec);
}

bool Ball::is_exact() const { return mpfr_zero_p(rad_); }

bool Ball::contains_zero() const { return certified_sign() == 0; }

int Ball::certified_sign() const {
    if (mpfr_sgn(mid_) > 0 && mpfr_cmp(mid_, rad_) > 0) return 1;
    if (mpfr_sgn(mid_) < 0) {
        Tmp a(prec_);
        mpfr_neg(a, mid_, MPFR_RNDN);  // exact
        if (mpfr_cmp(a, rad_) > 0) return -1;
    }
    return 0;
}

bool Ball::certified_less(const Ball& other) const {
    return (other - *this).certified_sign() > 0;
}

bool Ball::contains_rational(const Rational& v) const {
    // |mid - v| <= rad, decided exactly in rational arithmetic
    mpq_class mid_q;
    mpfr_get_q(mid_q.get_mpq_t(), mid_);
    mpq_class rad_q;
    mpfr_get_q(rad_q.get_mpq_t(), rad_);
    mpq_class diff = mid_q - v;
    if (diff < 0) diff = -diff;
    return diff <= rad_q;
}

void Ball::endpoints(mpfr_ptr lo, mpfr_ptr hi) const {
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
}

Ball Ball::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
    Ball r(prec);
    Tmp s(prec + 8);
    mpfr_add(s, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(s, s, 1, MPFR_RNDN);
    mpfr_set(r.mid_, s.v, MPFR_RNDN);
    // radius = max(hi - mid, mid - lo), rounded up; covers both rounding steps
    Tmp t1(kRadiusPrec), t2(kRadiusPrec);
    mpfr_sub(t1, hi, r.mid_, MPFR_RNDU);
    mpfr_sub(t2, r.mid_, lo, MPFR_RNDU);
    if (mpfr_sgn(t1.v) < 0) mpfr_set_zero(t1.v, 1);
    if (mpfr_sgn(t2.v) < 0) mpfr_set_zero(t2.v, 1);
    mpfr_max(r.rad_, t1, t2, MPFR_RNDU);
    return r;
}

Ball Ball::operator-() const {
    Ball r(*this);
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);  // exact
    return r;
}

Ball operator+(const Ball& a, const Ball& b) {
    Ball r(std::max(a.prec_, b.prec_));
    int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

Ball operator-(const Ball& a, const Ball& b) {
    Ball r(std::max(a.prec_, b.prec_));
    int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

Ball operator*(const Ball& a, const Ball& b) {
    Ball r(std::max(a.prec_, b.prec_));
    int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // |a| rb + |b| ra + ra rb, all rounded up
    Tmp am(Ball::kRadiusPrec), bm(Ball::kRadiusPrec), term(Ball::kRadiusPrec);
    mpfr_abs(am, a.mid_, MPFR_RNDU);
    mpfr_abs(bm, b.mid_, MPFR_RNDU);
    mpfr_mul(term, am, b.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, term, MPFR_RNDU);
    mpfr_mul(term, bm, a.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, term, MPFR_RNDU);
    mpfr_mul(term, a.rad_, b.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, term, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::recip() const {
    int s = certified_sign();
    if (s == 0) throw DivisionError("division by an enclosure containing zero");
    if (s < 0) return -((-*this).recip());
    Tmp lo(prec_), hi(prec_);
    endpoints(lo, hi);
    Tmp rlo(prec_), rhi(prec_);
    mpfr_ui_div(rlo, 1, hi, MPFR_RNDD);
    mpfr_ui_div(rhi, 1, lo, MPFR_RNDU);
    return from_endpoints(rlo, rhi, prec_);
}

Ball operator/(const Ball& a, const Ball& b) { return a * b.recip(); }

Ball Ball::exp() const {
    Tmp lo(prec_), hi(prec_);
    endpoints(lo, hi);
    Tmp rlo(prec_), rhi(prec_);
    mpfr_exp(rlo, lo, MPFR_RNDD);
    mpfr_exp(rhi, hi, MPFR_RNDU);
    return from_endpoints(rlo, rhi, prec_);
}

Ball Ball::log() const {
    if (certified_sign() <= 0)
        throw DomainError("log of an enclosure not strictly positive");
    Tmp lo(prec_), hi(prec_);
    endpoints(lo, hi);
    Tmp rlo(prec_), rhi(prec_);
    mpfr_log(rlo, lo, MPFR_RNDD);
    mpfr_log(rhi, hi, MPFR_RNDU);
    return from_endpoints(rlo, rhi, prec_);
}

Ball Ball::sqrt() const {
    Tmp lo(prec_), hi(prec_);
    endpoints(lo, hi);
    if (mpfr_sgn(lo.v) < 0) {
        if (mpfr_sgn(mid_) == 0 && is_exact()) return zero(prec_);
        throw DomainError("sqrt of an enclosure extending below zero");
    }
    Tmp rlo(prec_), rhi(prec_);
    mpfr_sqrt(rlo, lo, MPFR_RNDD);
    mpfr_sqrt(rhi, hi, MPFR_RNDU);
    return from_endpoints(rlo, rhi, prec_);
}

Ball Ball::abs() const {
    if (certified_sign() >= 0 && mpfr_sgn(mid_) >= 0) return *this;
    if (certified_sign() < 0) return -*this;
    // straddles zero: [0, max(|lo|, |hi|)]
    Tmp lo(prec_), hi(prec_);
    endpoints(lo, hi);
    mpfr_abs(lo, lo, MPFR_RNDU);
    mpfr_abs(hi, hi, MPFR_RNDU);
    mpfr_max(hi, lo, hi, MPFR_RNDU);
    Tmp z(prec_);
    mpfr_set_zero(z, 1);
    return from_endpoints(z, hi, prec_);
}

Ball Ball::pow_si(long k) const {
    if (k == 0) return from_si(1, prec_);
    if (k < 0) return pow_si(-k).recip();
    if (certified_sign() > 0) {
        Tmp lo(prec_), hi(prec_);
        endpoints(lo, hi);
        Tmp rlo(prec_), rhi(prec_);
        mpfr_pow_si(rlo, lo, k, MPFR_RNDD);
        mpfr_pow_si(rhi, hi, k, MPFR_RNDU);
        return from_endpoints(rlo, rhi, prec_);
    }
    // enclosure not strictly positive: binary powering on balls
    Ball base(*this), acc = from_si(1, prec_);
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Ball Ball::pow(const Rational& exponent) const {
    Rational ex(exponent);
    ex.canonicalize();
    if (ex.get_den() == 1) {
        if (!ex.get_num().fits_slong_p()) throw DomainError("integer exponent out of range");
        return pow_si(ex.get_num().get_si());
    }
    if (certified_sign() <= 0)
        throw DomainError("rational power of an enclosure not strictly positive");
    if (ex.get_den() == 2 || ex.get_den() == 4) {
        Ball root = sqrt();
        if (ex.get_den() == 4) root = root.sqrt();
        if (!ex.get_num().fits_slong_p()) throw DomainError("exponent numerator out of range");
        return root.pow_si(ex.get_num().get_si());
    }
    return (log() * from_rational(ex, prec_)).exp();
}

double Ball::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
double Ball::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

std::string Ball::str(int digits) const {
    char* m = nullptr;
    mpfr_asprintf(&m, "%.*Re", digits, mid_);
    std::string out(m);
    mpfr_free_str(m);
    if (!is_exact()) {
        char* r = nullptr;
        mpfr_asprintf(&r, "%.2Re", rad_);
        out += " +/- ";
        out += r;
        mpfr_free_str(r);
    }
    return out;
}

const char* sign_name(Sign s) {
    switch (s) {
        case Sign::positive: return "strictly-positive";
        case Sign::negative: return "strictly-negative";
        default: return "inconclusive";
    }
}

SignCertificate certify_sign(const std::function<Ball(mpfr_prec_t)>& eval, std::string expr_id,
                             long n, const PrecisionPolicy& policy) {
    SignCertificate cert;
    cert.expr = std::move(expr_id);
    cert.n = n;
    mpfr_prec_t p = std::min(policy.start, policy.max);
    while (true) {
        bool domain_failed = false;
        try {
            Ball v = eval(p);
            int s = v.certified_sign();
            cert.enclosure = std::move(v);
            cert.precision_used = p;
            if (s > 0) {
                cert.sign = Sign::positive;
                return cert;
            }
            if (s < 0) {
                cert.sign = Sign::negative;
                return cert;
            }
        } catch (const DomainError&) {
            domain_failed = true;  // may resolve once enclosures tighten
        }
        if (p >= policy.max) {
            cert.sign = Sign::inconclusive;
            if (domain_failed) cert.enclosure.reset();
            cert.precision_used = p;
            return cert;
        }
        p = std::min(p * 2, policy.max);
    }
}

}  // namespace jseq
