#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace gamefix {

// Exact rational arithmetic. All payoff bookkeeping is exact; floating point
// only enters in the iterative Markov computations.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" (integer p, positive integer q), plain integers, and decimal
// literals like "2.5" or "-0.125". Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

// Canonical form: "p/q" in lowest terms, or just "p" when q == 1.
std::string format_rational(const Rational& value);

// Shortest round-trip representation (printf %.17g).
std::string format_double(double value);

double to_double(const Rational& value);

Rational positive_part(const Rational& value);

}
