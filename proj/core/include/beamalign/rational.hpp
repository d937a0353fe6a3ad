#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace beamalign {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Largest integer not exceeding x.
BigInt floor_rat(const Rat& x);

// Fractional part of x, in [0, 1).
Rat frac(const Rat& x);

// Parses "p/q" or a plain integer "p". Throws std::invalid_argument on
// malformed input or a zero denominator.
Rat parse_rational(const std::string& text);

// Canonical "p/q" form (denominator always printed, e.g. "3/4", "2/1").
std::string rational_to_string(const Rat& x);

double to_double(const Rat& x);

// Exact rational value of a double (every finite double is dyadic).
Rat rat_from_double(double x);

}  // namespace beamalign
