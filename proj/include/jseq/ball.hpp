#pragma once

#include <mpfr.h>

#include <functional>
#include <optional>
#include <string>

#include "jseq/numeric.hpp"

namespace jseq {

// Certified real enclosure: the represented value lies in [mid - rad, mid + rad].
// Midpoints carry the working precision; radii live at a fixed small precision
// and every radius operation rounds up, so enclosures are never understated.
class Ball {
public:
    static constexpr mpfr_prec_t kRadiusPrec = 64;

    explicit Ball(mpfr_prec_t prec = 128);
    Ball(const Ball& other);
    Ball(Ball&& other) noexcept;
    Ball& operator=(const Ball& other);
    Ball& operator=(Ball&& other) noexcept;
    ~Ball();

    static Ball from_si(long v, mpfr_prec_t prec);
    static Ball from_bigint(const BigInt& v, mpfr_prec_t prec);
    static Ball from_rational(const Rational& v, mpfr_prec_t prec);
    // Decimal literal -> exact rational -> enclosure (rad <= 1 ulp, 0 when exact).
    static Ball from_decimal(std::string_view literal, mpfr_prec_t prec);
    static Ball zero(mpfr_prec_t prec);
    static Ball pi(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    bool is_exact() const;        // rad == 0
    bool contains_zero() const;
    // +1 when mid - rad > 0, -1 when mid + rad < 0, 0 otherwise.
    int certified_sign() const;
    // True when this and other certifiably compare strict (hi(this) < lo(other)).
    bool certified_less(const Ball& other) const;
    bool contains_rational(const Rational& v) const;

    Ball operator-() const;
    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator/(const Ball& a, const Ball& b);  // 0 in divisor -> DivisionError

    Ball recip() const;
    Ball exp() const;
    Ball log() const;   // enclosure must be strictly positive
    Ball sqrt() const;  // enclosure must be nonnegative
    Ball abs() const;
    Ball pow_si(long k) const;
    // x^(num/den); requires a strictly positive enclosure unless the exponent
    // is an integer. Half- and quarter-integer exponents go through sqrt.
    Ball pow(const Rational& exponent) const;

    double mid_double() const;
    double rad_double() const;
    // "m.mm...e+XX +/- r.re-YY" decimal rendering; exact values omit the radius.
    std::string str(int digits = 20) const;

    // Raw views for module-internal use.
    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }

private:
    mpfr_prec_t prec_;
    mpfr_t mid_;
    mpfr_t rad_;

    void bump_rad_ulp(int ternary);  // account for one rounding of mid_
    static Ball from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec);
    void endpoints(mpfr_ptr lo, mpfr_ptr hi) const;  // outward-rounded
};

enum class Sign { positive, negative, inconclusive };

const char* sign_name(Sign s);

// Outcome of certifying the sign of one expression at one argument.
struct SignCertificate {
    std::string expr;
    long n = 0;
    Sign sign = Sign::inconclusive;
    mpfr_prec_t precision_used = 0;
    std::optional<Ball> enclosure;  // absent when every evaluation hit a domain error

    bool positive() const { return sign == Sign::positive; }
    bool negative() const { return sign == Sign::negative; }
};

struct PrecisionPolicy {
    mpfr_prec_t start = 128;
    mpfr_prec_t max = 4096;
};

// Evaluates eval at doubling precision until the enclosure excludes zero or the
// cap is reached. Domain errors at low precision are retried at higher precision;
// a strict sign is never reported from an enclosure containing zero.
SignCertificate certify_sign(const std::function<Ball(mpfr_prec_t)>& eval, std::string expr_id,
                             long n, const PrecisionPolicy& policy = {});

}  // namespace jseq
