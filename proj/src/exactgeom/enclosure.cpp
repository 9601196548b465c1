#include "abx/enclosure.hpp"

#include <algorithm>

namespace abx {

namespace {

Integer pow2(unsigned bits)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
    return r;
}

Rational floor_dyadic(const Rational& x, unsigned bits)
{
    Integer p = pow2(bits);
    Integer num = x.get_num() * p;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
    Rational r(q, p);
    r.canonicalize();
    return r;
}

Rational ceil_dyadic(const Rational& x, unsigned bits)
{
    Integer p = pow2(bits);
    Integer num = x.get_num() * p;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
    Rational r(q, p);
    r.canonicalize();
    return r;
}

// arctan(1/m) lies between consecutive partial sums of its alternating series.
Interval arctan_inverse(unsigned m, unsigned bits)
{
    Rational eps(1, pow2(bits + 4));
    Rational sum = 0;
    Integer mpow = m;
    Integer m2 = Integer(m) * m;
    for (unsigned k = 0;; ++k) {
        Rational term(1, (2 * k + 1) * mpow);
        term.canonicalize();
        Rational next = sum;
        if (k % 2)
            next -= term;
        else
            next += term;
        if (term < eps)
            return {std::min(sum, next), std::max(sum, next)};
        sum = next;
        mpow *= m2;
    }
}

} // namespace

Interval exact(const Rational& x) { return {x, x}; }

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b)
{
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval operator*(const Rational& s, const Interval& a)
{
    if (sgn(s) >= 0)
        return {s * a.lo, s * a.hi};
    return {s * a.hi, s * a.lo};
}

Interval sqrt_enclosure(const Rational& x, unsigned bits)
{
    if (sgn(x) < 0)
        throw PreconditionError("sqrt_enclosure: negative argument");
    Integer p = pow2(bits);
    Integer num = x.get_num() * p * p;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
    Integer s;
    mpz_sqrt(s.get_mpz_t(), fl.get_mpz_t());
    Rational lo(s, p), hi(s + 1, p);
    lo.canonicalize();
    hi.canonicalize();
    if (lo * lo == x)
        hi = lo;
    return {lo, hi};
}

Interval sqrt_enclosure(const Interval& x, unsigned bits)
{
    return {sqrt_enclosure(x.lo, bits).lo, sqrt_enclosure(x.hi, bits).hi};
}

Interval pi_enclosure(unsigned bits)
{
    // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239)
    Interval a = arctan_inverse(5, bits);
    Interval b = arctan_inverse(239, bits);
    Interval pi = Rational(16) * a + Rational(-4) * b;
    return {floor_dyadic(pi.lo, bits), ceil_dyadic(pi.hi, bits)};
}

} // namespace abx
