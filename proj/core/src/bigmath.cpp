#include "ranklab/bigmath.hpp"

#include <array>
#include <sstream>

namespace ranklab {

Int binomial(const Int& n, const Int& k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int kk = k;
  if (k > n - k) kk = n - k;
  Int result = 1;
  for (Int i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;  // exact: C(n-kk+i, i) is an integer at every step
  }
  return result;
}

Int binomial(long n, long k) { return binomial(Int(n), Int(k)); }

Int factorial(unsigned n) {
  Int result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

std::uint64_t factorial_u64(unsigned n) {
  static constexpr std::array<std::uint64_t, 21> kTable = {
      1ull,
      1ull,
      2ull,
      6ull,
      24ull,
      120ull,
      720ull,
      5040ull,
      40320ull,
      362880ull,
      3628800ull,
      39916800ull,
      479001600ull,
      6227020800ull,
      87178291200ull,
      1307674368000ull,
      20922789888000ull,
      355687428096000ull,
      6402373705728000ull,
      121645100408832000ull,
      2432902008176640000ull};
  if (n >= kTable.size())
    throw std::invalid_argument("factorial_u64: n! overflows 64 bits for n > 20");
  return kTable[n];
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      Int num(text.substr(0, slash));
      Int den(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rat(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rat(Int(text));
    // decimal literal: digits after the dot scale the denominator
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty()) throw std::invalid_argument("bad decimal");
    Int den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rat(Int(digits), den);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: '" + text + "'");
  }
}

std::string rational_string(const Rat& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string real_string(const Real& value, unsigned digits) {
  std::ostringstream out;
  out.precision(digits);
  out << value;
  return out.str();
}

}  // namespace ranklab
