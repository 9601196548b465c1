#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "abx/error.hpp"

namespace abx {

using Integer = mpz_class;
using Rational = mpq_class;
using Point = std::vector<Rational>;

// Parses "p", "-p" or "p/q"; the result is canonical (q > 0, gcd 1).
Rational parse_rational(std::string_view s);
// a/b in lowest terms; the two-argument mpq_class constructor does not reduce.
Rational ratio(long a, long b);
std::string to_string(const Rational& q);
std::string to_string(const Point& p);

Point zero_point(std::size_t n);
Point unit_vector(std::size_t n, std::size_t i);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);
Point operator*(const Rational& s, const Point& a);
Rational dot(const Point& a, const Point& b);

// Componentwise a <= b.
bool dominated(const Point& a, const Point& b);
bool nonnegative(const Point& a);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// Smallest positive integer L with L*x integral for every entry.
Integer common_denominator(const Point& p);
// Scales a nonzero vector to the primitive integer vector with the same direction.
Point primitive(const Point& p);

} // namespace abx
