#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace ncp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q omitted when 1; sign on the numerator.
std::string format_rational(const Rational& r);

// Accepts "p", "p/q", optional leading '-', surrounding whitespace.
Rational parse_rational(const std::string& text);

Integer factorial(int n);
Integer binomial(const Integer& n, int k);

// Catalan numbers via the convolution recurrence
// cat_k = sum_{i=1..k} cat_{i-1} * cat_{k-i}, cat_0 = 1.
const std::vector<Integer>& catalan_numbers(int up_to);
Integer catalan(int n);

} // namespace ncp
