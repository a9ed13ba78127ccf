#pragma once

// Exact arithmetic types shared by the whole library. Inequalities that the
// analysis states combinatorially are checked in Int/Rat; Real is reserved
// for entropy/log expressions.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace ranklab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

// Exact binomial coefficient; C(n, k) = 0 for k < 0 or k > n, C(n, 0) = 1.
Int binomial(const Int& n, const Int& k);
Int binomial(long n, long k);

Int factorial(unsigned n);

// n! for n <= 20 without allocation; used for permutation rank arithmetic.
std::uint64_t factorial_u64(unsigned n);

// Parses "a/b" or "a" (optionally signed); also accepts decimal literals
// like "0.005" which are converted exactly. Throws std::invalid_argument.
Rat parse_rational(const std::string& text);

// Canonical "num/den" rendering, always with an explicit denominator.
std::string rational_string(const Rat& value);

// Decimal rendering of a Real with enough digits to round-trip 12+ figures.
std::string real_string(const Real& value, unsigned digits = 20);

}  // namespace ranklab
