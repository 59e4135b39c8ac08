#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace toric {

using BigInt = boost::multiprecision::cpp_int;

// Always canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Exact num/den. Use this instead of the two-argument Rational constructor,
// which requires an already-canonical pair.
Rational ratio(const BigInt& num, const BigInt& den);

bool is_integer(const Rational& r);

// Numerator of an integral rational; throws if r is not an integer.
BigInt to_integer(const Rational& r);

BigInt factorial(int n);
BigInt binomial(const BigInt& n, int k);

// "7", "-3/2"; inverse of rational_parse.
std::string rational_str(const Rational& r);
Rational rational_parse(const std::string& text);

}  // namespace toric
