#include "abx/cbodies.hpp"

namespace abx {

namespace {

constexpr unsigned kBits = 96;

std::string lambda_label(const Rational& l) { return "lambda=" + to_string(l); }

Point lift(const Point& x, const Rational& h)
{
    Point y = x;
    y.push_back(h);
    return y;
}

Rational mahler_product(const Polytope& p) { return volume(p) * volume(polar(p)); }

Rational pow2(int e) { return Rational(Integer(1) << e); }

} // namespace

CayleyBody cayley(const AntiBlockingBody& k, const AntiBlockingBody& t, const Rational& lambda)
{
    int n = k.dim();
    if (t.dim() != n)
        throw DimensionMismatch("cayley");
    if (sgn(lambda) < 0 || lambda > 1)
        throw PreconditionError("cayley: lambda must lie in [0,1], got " + to_string(lambda));
    std::vector<Point> pts;
    for (const auto& v : k.body.vertices)
        pts.push_back(lift(v, lambda));
    for (const auto& v : t.body.vertices)
        pts.push_back(lift(-v, -lambda));
    pts.push_back(unit_vector(n + 1, n));
    pts.push_back(-unit_vector(n + 1, n));
    return {n, lambda, canonical_hull(pts, n + 1), k, t};
}

Polytope cayley_slice(const CayleyBody& c, const Rational& h)
{
    int n = c.base_dim;
    Polytope s = intersect_hyperplane(c.body, {unit_vector(n + 1, n), h});
    std::vector<int> coords(n);
    for (int i = 0; i < n; ++i)
        coords[i] = i;
    return coordinate_projection(s, coords);
}

std::vector<Comparison> cbody_volume_identity(const AntiBlockingBody& k, const AntiBlockingBody& t)
{
    int n = k.dim();
    Rational s = 0;
    for (int j = 0; j <= n; ++j)
        s += mixed_volume_ab(k, t, j);
    Rational direct = volume(cayley(k, t, 1).body);
    return {identity("Lem4.6", "", direct, ratio(2, n + 1) * s)};
}

Interval binomial_root_bound(int n, unsigned bits)
{
    Interval s = exact(0);
    for (int j = 0; j <= n; ++j)
        s = s + sqrt_enclosure(Rational(binomial(n, j)), bits);
    return (Rational(1) / Rational(factorial(n))) * (s * s);
}

Interval cbody_mahler_bound(int n, unsigned bits)
{
    Interval root = sqrt_enclosure(Rational(2 * n) * pi_enclosure(bits), bits);
    Rational c = pow2(2 * (n + 1)) / (Rational(n + 1) * Rational(factorial(n + 1)));
    return c * root;
}

Interval central_binomial_bound(int n, unsigned bits)
{
    Interval root = sqrt_enclosure(ratio(n, 2) * pi_enclosure(bits), bits);
    return (pow2(n) / Rational(factorial(n))) * root;
}

std::vector<Comparison> mahler_bounds_for_hull(const AntiBlockingBody& k)
{
    int n = k.dim();
    AntiBlockingBody ak = abdual(k);
    Rational h = volume(convex_union(k.body, negate(k.body))) * volume(convex_union(ak.body, negate(ak.body)));
    return {inequality("Prop1.5", "", h, binomial_root_bound(n, kBits).hi),
            inequality("Prop4.12", "", h, central_binomial_bound(n, kBits).hi)};
}

CBodyPolarReport cbody_polar(const AntiBlockingBody& k, const AntiBlockingBody& t, const std::vector<Rational>& lambdas)
{
    int n = k.dim();
    if (!k.body.full_dimensional() || !t.body.full_dimensional())
        throw PreconditionError("cbody_polar: origin is not interior, K and T must be full-dimensional");
    CBodyPolarReport r;
    Polytope c = cayley(k, t, 1).body;
    r.polar = polar(c);
    AntiBlockingBody ak = abdual(k), at = abdual(t);
    std::vector<Point> pts;
    for (const auto& v : at.body.vertices)
        pts.push_back(lift(Rational(-2) * v, 1));
    for (const auto& v : ak.body.vertices)
        pts.push_back(lift(Rational(2) * v, -1));
    r.predicted = canonical_hull(pts, n + 1);
    r.checks.push_back(set_identity("Thm4.9", "", r.polar.vertices.size(), r.predicted.vertices.size(),
                                    r.polar == r.predicted));
    if (!(k == t))
        return r;

    Rational p1 = volume(c) * volume(r.polar);
    Rational hulls = volume(convex_union(k.body, negate(k.body))) * volume(convex_union(ak.body, negate(ak.body)));
    Rational factor = pow2(n + 2) / Rational((n + 1) * (n + 1));
    r.checks.push_back(identity("Thm1.4.identity", "", p1, factor * hulls));
    r.checks.push_back(inequality("Thm1.4.chain", "", p1, (factor * binomial_root_bound(n, kBits)).hi));
    Interval bound = cbody_mahler_bound(n, kBits);
    for (const auto& l : lambdas) {
        Rational p = l == 1 ? p1 : mahler_product(cayley(k, k, l).body);
        r.checks.push_back(inequality("Thm1.4", lambda_label(l), p, bound.hi));
        r.checks.push_back(inequality("Thm1.4.shadow", lambda_label(l), p, p1));
    }
    return r;
}

std::vector<Comparison> shadow_invariance(const AntiBlockingBody& k, const AntiBlockingBody& t,
                                          const std::vector<Rational>& lambdas)
{
    Rational base = volume(cayley(k, t, 1).body);
    std::vector<Comparison> out;
    for (const auto& l : lambdas)
        out.push_back(identity("Cor4.11", lambda_label(l), volume(cayley(k, t, l).body), base));
    return out;
}

Polytope steiner_symmetral(const Polytope& k, int axis, const Rational& t)
{
    if (axis < 0 || axis >= k.dim)
        throw PreconditionError("steiner_symmetral: axis " + std::to_string(axis) + " out of range");
    if (sgn(t) < 0 || t > 1)
        throw PreconditionError("steiner_symmetral: t must lie in [0,1]");
    std::vector<Point> pts;
    for (const auto& v : k.vertices) {
        Point w = v;
        w[axis] = 0;
        if (sgn(v[axis]) < 0 || !k.contains(w))
            throw PreconditionError("steiner_symmetral: fibres along the axis do not start at 0");
        Point up = v, down = v;
        up[axis] *= 1 - t;
        down[axis] *= -t;
        pts.push_back(std::move(up));
        pts.push_back(std::move(down));
    }
    return canonical_hull(pts, k.dim);
}

Polytope steiner_symmetral(const AntiBlockingBody& k, int axis, const Rational& t)
{
    return steiner_symmetral(k.body, axis, t);
}

std::vector<Comparison> steiner_monotonicity(const AntiBlockingBody& k, const AntiBlockingBody& t, int axis)
{
    int n = k.dim();
    Rational half(1, 2);
    Polytope sk = steiner_symmetral(k, axis, half), st = steiner_symmetral(t, axis, half);
    std::vector<Rational> before = mixed_volume_series_oracle(k.body, t.body);
    std::vector<Rational> after = mixed_volume_series_oracle(sk, st);
    std::vector<Comparison> out;
    std::string ax = "axis=" + std::to_string(axis);
    for (int j = 0; j <= n; ++j)
        out.push_back(inequality("Lem5.3", ax + ",j=" + std::to_string(j), before[j], after[j]));
    out.push_back(identity("Lem5.3.volume", ax, volume(sk), volume(k.body)));
    return out;
}

Comparison iterated_symmetral_check(const AntiBlockingBody& k)
{
    Polytope p = k.body;
    for (int a = 0; a < k.dim(); ++a)
        p = steiner_symmetral(p, a, Rational(1, 2));
    Polytope want = scale(unconditional_closure(k).assembled, Rational(1, 2));
    return set_identity("Thm1.6.symmetral", "", p.vertices.size(), want.vertices.size(), p == want);
}

} // namespace abx
