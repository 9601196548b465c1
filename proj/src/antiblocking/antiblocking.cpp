#include "abx/antiblocking.hpp"

#include <algorithm>
#include <bit>

namespace abx {

std::vector<int> mask_coords(Mask e, int n)
{
    std::vector<int> c;
    for (int i = 0; i < n; ++i)
        if (e >> i & 1u)
            c.push_back(i);
    return c;
}

SignVector sign_of(Mask e, int n)
{
    SignVector s(n);
    for (int i = 0; i < n; ++i)
        s[i] = (e >> i & 1u) ? 1 : -1;
    return s;
}

int popcount(Mask e) { return std::popcount(e); }

std::vector<Point> maximal_points(const std::vector<Point>& pts)
{
    std::vector<Point> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < pts.size() && maximal; ++j)
            if (j != i && pts[i] != pts[j] && dominated(pts[i], pts[j]))
                maximal = false;
        if (maximal)
            out.push_back(pts[i]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_antiblocking(const Polytope& p)
{
    if (p.empty())
        return false;
    for (const auto& v : p.vertices) {
        if (!nonnegative(v))
            return false;
        for (int i = 0; i < p.dim; ++i) {
            if (sgn(v[i]) == 0)
                continue;
            Point w = v;
            w[i] = 0;
            if (!p.contains(w))
                return false;
        }
    }
    return true;
}

AntiBlockingBody make_antiblocking(const Polytope& p)
{
    if (!is_antiblocking(p))
        throw PreconditionError("not an anti-blocking body");
    return {p, maximal_points(p.vertices)};
}

AntiBlockingBody down_closure(const std::vector<Point>& u)
{
    if (u.empty())
        throw PreconditionError("down_closure: empty generator set");
    int n = static_cast<int>(u[0].size());
    std::vector<Point> pts;
    for (const auto& x : u) {
        if (static_cast<int>(x.size()) != n)
            throw DimensionMismatch("down_closure");
        if (!nonnegative(x))
            throw PreconditionError("down_closure: negative coordinate in " + to_string(x));
        for (Mask m = 0; m < (1u << n); ++m) {
            Point y = x;
            for (int i = 0; i < n; ++i)
                if (!(m >> i & 1u))
                    y[i] = 0;
            pts.push_back(std::move(y));
        }
    }
    Polytope p = canonical_hull(pts, n);
    return {p, maximal_points(p.vertices)};
}

AntiBlockingBody abdual(const AntiBlockingBody& k)
{
    int n = k.dim();
    if (!k.body.full_dimensional())
        throw PreconditionError("abdual: body is not full-dimensional, the dual is unbounded");
    std::vector<Halfspace> hs;
    Rational top = 0;
    for (const auto& g : k.generators) {
        hs.push_back({g, 1});
        Rational s = 0;
        for (const auto& x : g)
            s += x;
        top = std::max(top, s);
    }
    for (int i = 0; i < n; ++i)
        hs.push_back({-unit_vector(n, i), 0});
    Rational eps = 1 / (1 + top);
    Point c(n, eps);
    Polytope d = halfspace_intersection(n, hs, c);
    return {d, maximal_points(d.vertices)};
}

AntiBlockingBody standard_simplex(int n)
{
    std::vector<Point> u;
    for (int i = 0; i < n; ++i)
        u.push_back(unit_vector(n, i));
    return down_closure(u);
}

AntiBlockingBody unit_cube(int n) { return down_closure({Point(n, Rational(1))}); }

AntiBlockingBody box(const Point& a) { return down_closure({a}); }

Polytope coordinate_part(const AntiBlockingBody& k, Mask e) { return coordinate_projection(k.body, mask_coords(e, k.dim())); }

bool is_simplex(const AntiBlockingBody& k)
{
    const Polytope& p = k.body;
    if (!p.full_dimensional() || static_cast<int>(p.vertices.size()) != p.dim + 1)
        return false;
    std::vector<char> seen(p.dim, 0);
    for (const auto& v : p.vertices) {
        int nz = 0, axis = -1;
        for (int i = 0; i < p.dim; ++i)
            if (sgn(v[i]) != 0) {
                ++nz;
                axis = i;
            }
        if (nz > 1)
            return false;
        if (nz == 1) {
            if (seen[axis])
                return false;
            seen[axis] = 1;
        }
    }
    return true;
}

bool is_box(const AntiBlockingBody& k)
{
    const Polytope& p = k.body;
    if (p.empty())
        return false;
    Point top = p.vertices[0];
    for (const auto& v : p.vertices)
        for (int i = 0; i < p.dim; ++i)
            top[i] = std::max(top[i], v[i]);
    return std::binary_search(p.vertices.begin(), p.vertices.end(), top);
}

namespace {

Polytope split_product(const Polytope& a, const Polytope& b, const std::vector<int>& ca, const std::vector<int>& cb,
                       int n)
{
    std::vector<Point> pts;
    for (const auto& x : a.vertices)
        for (const auto& y : b.vertices) {
            Point z = zero_point(n);
            for (std::size_t i = 0; i < ca.size(); ++i)
                z[ca[i]] = x[i];
            for (std::size_t i = 0; i < cb.size(); ++i)
                z[cb[i]] = y[i];
            pts.push_back(std::move(z));
        }
    return canonical_hull(pts, n);
}

} // namespace

bool is_reduced_hanner(const Polytope& p)
{
    int n = p.dim;
    if (!p.full_dimensional() || !is_antiblocking(p))
        return false;
    if (n <= 1)
        return true;
    Mask all = (1u << n) - 1;
    // E always contains coordinate 0 so each split is tried once.
    for (Mask e = 1; e < all; e += 2) {
        std::vector<int> ca = mask_coords(e, n), cb = mask_coords(all ^ e, n);
        Polytope a = coordinate_projection(p, ca), b = coordinate_projection(p, cb);
        std::size_t na = a.vertices.size(), nb = b.vertices.size(), np = p.vertices.size();
        bool split = false;
        if (np == na * nb && split_product(a, b, ca, cb, n) == p)
            split = true;
        else if (np + 1 == na + nb && convex_union(embed(a, ca, n), embed(b, cb, n)) == p)
            split = true;
        if (split && is_reduced_hanner(a) && is_reduced_hanner(b))
            return true;
    }
    return false;
}

} // namespace abx
