#include "jseq/numeric.hpp"

#include <cctype>
#include <cstdlib>

#include "jseq/errors.hpp"

namespace jseq {

Rational rational_from_decimal(std::string_view text) {
    auto bad = [&](const char* why) -> ParseError {
        return ParseError(std::string("bad decimal literal '") + std::string(text) + "': " + why, 1);
    };
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits += ch;
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (ch == '.') {
            if (seen_dot) throw bad("second decimal point");
            seen_dot = true;
        } else if (ch == 'e' || ch == 'E') {
            break;
        } else {
            throw bad("unexpected character");
        }
    }
    if (!seen_digit) throw bad("no digits");
    long exp10 = 0;
    if (i < text.size()) {  // exponent part
        ++i;
        bool exp_neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_neg = text[i] == '-';
            ++i;
        }
        if (i == text.size()) throw bad("empty exponent");
        for (; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw bad("bad exponent");
            exp10 = exp10 * 10 + (text[i] - '0');
            if (exp10 > 100000) throw bad("exponent out of range");
        }
        if (exp_neg) exp10 = -exp10;
    }
    BigInt mantissa(digits.empty() ? "0" : digits);
    if (neg) mantissa = -mantissa;
    long net = exp10 - frac_digits;
    BigInt pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    Rational r;
    if (net >= 0)
        r = Rational(mantissa * pow10);
    else
        r = Rational(mantissa, pow10);
    r.canonicalize();
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace jseq
