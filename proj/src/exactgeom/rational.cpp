#include "abx/rational.hpp"

#include <cctype>

namespace abx {

namespace {

bool valid_integer(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view s)
{
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("not a rational: '" + std::string(s) + "'");
    Integer p{std::string(num[0] == '+' ? num.substr(1) : num)};
    Integer q{std::string(den)};
    if (q == 0)
        throw ParseError("zero denominator: '" + std::string(s) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational ratio(long a, long b)
{
    if (b == 0)
        throw PreconditionError("ratio: zero denominator");
    Rational r(a, b);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Point& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += ", ";
        out += p[i].get_str();
    }
    return out + ")";
}

Point zero_point(std::size_t n) { return Point(n, Rational(0)); }

Point unit_vector(std::size_t n, std::size_t i)
{
    Point e(n, Rational(0));
    e.at(i) = 1;
    return e;
}

Point operator+(const Point& a, const Point& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("point addition");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Point operator-(const Point& a, const Point& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("point subtraction");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Point operator-(const Point& a)
{
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

Point operator*(const Rational& s, const Point& a)
{
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}

Rational dot(const Point& a, const Point& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("dot product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool dominated(const Point& a, const Point& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("componentwise comparison");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

bool nonnegative(const Point& a)
{
    for (const auto& x : a)
        if (sgn(x) < 0)
            return false;
    return true;
}

Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer b;
    if (k > n)
        return 0;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Integer common_denominator(const Point& p)
{
    Integer l = 1;
    for (const auto& x : p)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

Point primitive(const Point& p)
{
    Integer l = common_denominator(p);
    Integer g = 0;
    std::vector<Integer> v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rational s = p[i] * l;
        v[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    }
    if (g == 0)
        throw PreconditionError("primitive of the zero vector");
    Point r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = Rational(Integer(v[i] / g));
    return r;
}

} // namespace abx
