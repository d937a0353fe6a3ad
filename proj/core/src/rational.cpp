#include "beamalign/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace beamalign {

BigInt floor_rat(const Rat& x) {
  BigInt num = numerator(x);
  BigInt den = denominator(x);  // always positive in canonical form
  BigInt q = num / den;
  if (num < 0 && num % den != 0) --q;
  return q;
}

Rat frac(const Rat& x) { return x - Rat(floor_rat(x)); }

namespace {

BigInt parse_integer(const std::string& text, std::size_t begin, std::size_t end) {
  if (begin >= end) throw std::invalid_argument("parse_rational: empty integer in \"" + text + "\"");
  std::size_t k = begin;
  bool negative = false;
  if (text[k] == '-' || text[k] == '+') {
    negative = text[k] == '-';
    ++k;
  }
  if (k >= end) throw std::invalid_argument("parse_rational: lone sign in \"" + text + "\"");
  BigInt value = 0;
  for (; k < end; ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw std::invalid_argument("parse_rational: bad character in \"" + text + "\"");
    value = value * 10 + (text[k] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_integer(text, 0, text.size()));
  BigInt num = parse_integer(text, 0, slash);
  BigInt den = parse_integer(text, slash + 1, text.size());
  if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in \"" + text + "\"");
  return Rat(num, den);
}

std::string rational_to_string(const Rat& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

double to_double(const Rat& x) { return x.convert_to<double>(); }

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite value");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rat r(scaled);
  if (exp >= 0)
    r *= Rat(BigInt(1) << exp);
  else
    r /= Rat(BigInt(1) << -exp);
  return r;
}

}  // namespace beamalign
