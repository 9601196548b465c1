#include "abx/coneab.hpp"

#include <algorithm>

#include "abx/error.hpp"

namespace abx {

namespace {

Point interior_direction(const PolyhedralCone& c)
{
    Point d = zero_point(c.dim);
    for (const auto& g : c.generators)
        d = d + g;
    return d;
}

Rational l1(const Point& x)
{
    Rational s = 0;
    for (const auto& v : x)
        s += abs(v);
    return s;
}

// K° ∩ C, bounded whenever K is proper.
Polytope cone_polar(const PolyhedralCone& c, const Polytope& k)
{
    std::vector<Halfspace> hs;
    for (const auto& a : c.facet_normals)
        hs.push_back({-a, 0});
    Point dir = interior_direction(c);
    Rational top = 0;
    for (const auto& v : k.vertices) {
        if (v == zero_point(c.dim))
            continue;
        hs.push_back({v, 1});
        top = std::max(top, dot(v, dir));
    }
    return halfspace_intersection(c.dim, hs, (1 / (1 + top)) * dir);
}

// W is taken as the nonzero vertices of K° ∩ C, the largest choice; smaller W give the same body
// but a larger hat body.
CABBody finalize(const PolyhedralCone& c, Polytope body)
{
    CABBody k{c, std::move(body), {}, false};
    if (!k.body.full_dimensional())
        return k;
    k.proper = true;
    for (const auto& f : k.body.facets)
        if (sgn(f.offset) == 0)
            for (const auto& g : c.generators)
                if (sgn(dot(f.normal, g)) > 0)
                    k.proper = false;
    if (!k.proper)
        return k;
    std::vector<Point> w;
    for (const auto& v : cone_polar(c, k.body).vertices)
        if (v != zero_point(c.dim))
            w.push_back(v);
    Polytope back = cone_polar(c, canonical_hull(w, c.dim));
    if (back == k.body)
        k.w_rep = std::move(w);
    return k;
}

} // namespace

CABBody c_down_closure(const PolyhedralCone& c, const std::vector<Point>& u)
{
    int n = c.dim;
    std::vector<Point> pts{zero_point(n)};
    Rational radius = 0;
    for (const auto& x : u) {
        if (static_cast<int>(x.size()) != n)
            throw DimensionMismatch("c_down_closure");
        if (!c.contains(x))
            throw PreconditionError("c_down_closure: point " + to_string(x) + " lies outside the cone");
        pts.push_back(x);
        radius = std::max(radius, l1(x));
    }
    // Every x = p - c in the closure has |c| <= 2|p|, so the dual cone can be cut off at that depth.
    PolyhedralCone d = dual(c);
    Point dir = interior_direction(c);
    Rational least = dot(dir, d.generators.front());
    for (const auto& g : d.generators)
        least = std::min(least, dot(dir, g));
    Rational depth = l1(dir) / least * 2 * radius;
    std::vector<Point> tail{zero_point(n)};
    for (const auto& g : d.generators)
        tail.push_back(-depth * g);
    Polytope k = minkowski_sum(canonical_hull(pts, n), canonical_hull(tail, n));
    for (const auto& a : c.facet_normals)
        k = cut(k, {-a, 0});
    return finalize(c, std::move(k));
}

CABBody make_cab(const PolyhedralCone& c, const Polytope& p)
{
    if (p.dim != c.dim)
        throw DimensionMismatch("make_cab");
    for (const auto& v : p.vertices)
        if (!c.contains(v))
            throw PreconditionError("make_cab: vertex " + to_string(v) + " lies outside the cone");
    CABBody k = c_down_closure(c, p.vertices);
    if (k.body != p)
        throw PreconditionError("make_cab: body is not closed downward in the cone order");
    return k;
}

std::vector<Point> maximal_points(const PolyhedralCone& c, const std::vector<Point>& pts)
{
    std::vector<Point> out;
    for (const auto& x : pts) {
        bool maximal = true;
        for (const auto& y : pts)
            if (y != x && precedes(c, x, y))
                maximal = false;
        if (maximal)
            out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CABBody a_c_dual(const CABBody& k)
{
    if (!inside_dual(k.cone))
        throw PreconditionError("a_c_dual: cone is not contained in its dual");
    if (!k.proper)
        throw PreconditionError("a_c_dual: body is not proper, the dual is unbounded");
    return finalize(k.cone, cone_polar(k.cone, k.body));
}

std::vector<Halfspace> hat(const CABBody& k)
{
    if (k.w_rep.empty())
        throw PreconditionError("hat: body has no W-representation");
    std::vector<Halfspace> hs;
    for (const auto& w : k.w_rep)
        hs.push_back({w, 1});
    return hs;
}

bool in_hat(const CABBody& k, const Point& x)
{
    for (const auto& h : hat(k))
        if (dot(h.normal, x) > h.offset)
            return false;
    return true;
}

Point nearest_point(const Polytope& k, const Point& p)
{
    if (k.empty())
        throw PreconditionError("nearest_point: empty polytope");
    if (k.contains(p))
        return p;
    auto certified = [&](const Point& r) {
        if (!k.contains(r))
            return false;
        Point d = p - r;
        for (const auto& v : k.vertices)
            if (sgn(dot(d, v - r)) > 0)
                return false;
        return true;
    };
    int m = static_cast<int>(k.facets.size());
    std::vector<int> cur;
    std::optional<Point> found;
    auto visit = [&](auto& self, int start) -> void {
        if (found)
            return;
        Matrix a;
        Point b;
        for (const auto& e : k.equations) {
            a.push_back(e.normal);
            b.push_back(e.offset);
        }
        for (int i : cur) {
            a.push_back(k.facets[i].normal);
            b.push_back(k.facets[i].offset);
        }
        if (!a.empty() && rank(a) == static_cast<int>(a.size())) {
            // r = p - A^T (A A^T)^{-1} (A p - b)
            std::size_t s = a.size();
            Matrix g(s, Point(s));
            Point rhs(s);
            for (std::size_t i = 0; i < s; ++i) {
                for (std::size_t j = 0; j < s; ++j)
                    g[i][j] = dot(a[i], a[j]);
                rhs[i] = dot(a[i], p) - b[i];
            }
            Point lam = *solve(g, rhs);
            Point r = p;
            for (std::size_t i = 0; i < s; ++i)
                r = r - lam[i] * a[i];
            if (certified(r)) {
                found = r;
                return;
            }
        } else if (!a.empty()) {
            return;
        }
        if (static_cast<int>(a.size()) >= k.dim)
            return;
        for (int i = start; i < m; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    visit(visit, 0);
    if (!found)
        throw Error("nearest_point: no face certified");
    return *found;
}

Comparison nearest_point_agreement(const CABBody& k, const Point& p)
{
    if (!in_hat(k, p))
        throw PreconditionError("nearest_point_agreement: point outside the hat body");
    Point rk = nearest_point(k.body, p);
    Point rc = nearest_point(k.cone, p).r;
    return identity("Lem7.6", to_string(p), rk == rc ? 1 : 0, 1);
}

std::optional<Comparison> difference_as_hat_intersection(const CABBody& p, const CABBody& q)
{
    if (!p.proper || !q.proper || p.w_rep.empty() || q.w_rep.empty())
        return std::nullopt;
    std::vector<Halfspace> hs = hat(p);
    for (const auto& w : q.w_rep)
        hs.push_back({-w, 1});
    Polytope lhs = minkowski_sum(p.body, negate(q.body));
    Polytope rhs = halfspace_intersection(p.cone.dim, hs, zero_point(p.cone.dim));
    return set_identity("Cor7.8", "", lhs.vertices.size(), rhs.vertices.size(), lhs == rhs);
}

} // namespace abx
