#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jseq {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses a finite decimal literal ("744", "-0.78879", "2.21073e-5") to the
// exact rational it denotes. Never goes through binary floating point.
Rational rational_from_decimal(std::string_view text);

BigInt binomial(unsigned long n, unsigned long k);

}  // namespace jseq
