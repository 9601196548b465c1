#pragma once

// Dyadic rational intervals for the few irrational constants that appear in bounds.

#include "abx/rational.hpp"

namespace abx {

struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

Interval exact(const Rational& x);
Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& s, const Interval& a);

// Encloses sqrt(x), x >= 0, with endpoints k/2^bits.
Interval sqrt_enclosure(const Rational& x, unsigned bits);
Interval sqrt_enclosure(const Interval& x, unsigned bits);
Interval pi_enclosure(unsigned bits);

// x >= every value in a: only then is x >= the enclosed constant certain.
inline bool certainly_ge(const Rational& x, const Interval& a) { return x >= a.hi; }

} // namespace abx
