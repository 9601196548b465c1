#include "abx/polytope.hpp"

#include <algorithm>

#include "hull.hpp"

namespace abx {

namespace {

// Everything canonical_hull and triangulate need from a point set.
struct HullData {
    std::vector<Point> pts; // sorted, distinct
    int k = -1;
    Rref frame;             // rref of the direction space of the affine hull
    Integer scale = 1;      // pivot coordinates times scale are integral
    std::vector<IntVector> ints;
    detail::HullSummary hull; // k >= 2 only
};

HullData build(std::vector<Point> pts, int dim, bool want_fan)
{
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != dim)
            throw DimensionMismatch("canonical_hull: point of dimension " + std::to_string(p.size()) +
                                    " in a set of dimension " + std::to_string(dim));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    HullData h;
    h.pts = std::move(pts);
    if (h.pts.empty())
        return h;

    // Independent difference vectors, reduced incrementally against each other.
    Matrix basis;
    std::vector<int> bpiv;
    Matrix chosen;
    for (std::size_t i = 1; i < h.pts.size() && static_cast<int>(basis.size()) < dim; ++i) {
        Point v = h.pts[i] - h.pts[0];
        Point orig = v;
        for (std::size_t r = 0; r < basis.size(); ++r) {
            if (sgn(v[bpiv[r]]) == 0)
                continue;
            Rational f = v[bpiv[r]] / basis[r][bpiv[r]];
            for (int j = 0; j < dim; ++j)
                v[j] -= f * basis[r][j];
        }
        for (int j = 0; j < dim; ++j)
            if (sgn(v[j]) != 0) {
                basis.push_back(std::move(v));
                bpiv.push_back(j);
                chosen.push_back(std::move(orig));
                break;
            }
    }
    h.frame = rref(chosen, dim);
    h.k = static_cast<int>(h.frame.pivots.size());

    for (const auto& p : h.pts)
        for (int c : h.frame.pivots)
            mpz_lcm(h.scale.get_mpz_t(), h.scale.get_mpz_t(), p[c].get_den_mpz_t());
    h.ints.reserve(h.pts.size());
    for (const auto& p : h.pts) {
        IntVector y(h.k);
        for (int j = 0; j < h.k; ++j) {
            Rational s = p[h.frame.pivots[j]] * h.scale;
            y[j] = s.get_num();
        }
        h.ints.push_back(std::move(y));
    }
    if (h.k >= 2)
        h.hull = detail::hull_summary(h.ints, h.k, want_fan);
    return h;
}

Rational scaled_volume(const Integer& det_sum, int k, const Integer& scale)
{
    Integer den = factorial(k);
    Integer lk;
    mpz_pow_ui(lk.get_mpz_t(), scale.get_mpz_t(), k);
    Rational v(det_sum, den * lk);
    v.canonicalize();
    return v;
}

bool facet_less(const Halfspace& a, const Halfspace& b)
{
    if (a.normal != b.normal)
        return a.normal < b.normal;
    return a.offset < b.offset;
}

} // namespace

Polytope empty_polytope(int dim)
{
    Polytope p;
    p.dim = dim;
    p.affine_dim = -1;
    p.pivot_volume = 0;
    p.is_canonical = true;
    return p;
}

Polytope canonical_hull(const std::vector<Point>& points)
{
    if (points.empty())
        throw PreconditionError("canonical_hull: empty input");
    return canonical_hull(points, static_cast<int>(points[0].size()));
}

Polytope canonical_hull(const std::vector<Point>& points, int dim)
{
    HullData h = build(points, dim, false);
    if (h.pts.empty())
        return empty_polytope(dim);

    Polytope p;
    p.dim = dim;
    p.affine_dim = h.k;
    p.pivots = h.frame.pivots;
    p.is_canonical = true;

    for (auto& e : nullspace(h.frame.rows, dim)) {
        Rational off = dot(e, h.pts[0]);
        p.equations.push_back({std::move(e), std::move(off)});
    }
    std::sort(p.equations.begin(), p.equations.end(), facet_less);

    std::vector<std::pair<IntVector, Integer>> planes;
    std::vector<int> ext;
    if (h.k == 0) {
        ext = {0};
    } else if (h.k == 1) {
        int lo = 0, hi = 0;
        for (int i = 1; i < static_cast<int>(h.ints.size()); ++i) {
            if (h.ints[i][0] < h.ints[lo][0])
                lo = i;
            if (h.ints[i][0] > h.ints[hi][0])
                hi = i;
        }
        planes.emplace_back(IntVector{Integer(-1)}, -h.ints[lo][0]);
        planes.emplace_back(IntVector{Integer(1)}, h.ints[hi][0]);
        ext = {std::min(lo, hi), std::max(lo, hi)};
    } else {
        planes = h.hull.planes;
        ext = h.hull.extreme;
    }
    for (int i : ext)
        p.vertices.push_back(h.pts[i]);

    for (const auto& [n, off] : planes) {
        Point normal = zero_point(dim);
        for (int j = 0; j < h.k; ++j)
            normal[h.frame.pivots[j]] = Rational(n[j]);
        Rational o(off, h.scale);
        o.canonicalize();
        p.facets.push_back({std::move(normal), std::move(o)});
    }
    std::sort(p.facets.begin(), p.facets.end(), facet_less);

    if (h.k == 0) {
        p.pivot_volume = 1;
    } else if (h.k == 1) {
        Rational len(abs(h.ints[ext.back()][0] - h.ints[ext.front()][0]), h.scale);
        len.canonicalize();
        p.pivot_volume = len;
    } else {
        p.pivot_volume = scaled_volume(h.hull.fan_det_sum, h.k, h.scale);
    }
    return p;
}

bool Polytope::contains(const Point& x) const
{
    if (static_cast<int>(x.size()) != dim)
        throw DimensionMismatch("contains");
    if (empty())
        return false;
    for (const auto& e : equations)
        if (dot(e.normal, x) != e.offset)
            return false;
    for (const auto& f : facets)
        if (dot(f.normal, x) > f.offset)
            return false;
    return true;
}

bool Polytope::interior(const Point& x) const
{
    if (!full_dimensional())
        return false;
    for (const auto& f : facets)
        if (dot(f.normal, x) >= f.offset)
            return false;
    return true;
}

Rational volume(const Polytope& p)
{
    if (!p.is_canonical)
        throw PreconditionError("volume: polytope is not canonical");
    return p.full_dimensional() ? p.pivot_volume : Rational(0);
}

Triangulation triangulate(const Polytope& p)
{
    if (!p.is_canonical)
        throw PreconditionError("triangulate: polytope is not canonical");
    Triangulation t;
    if (p.empty())
        return t;
    HullData h = build(p.vertices, p.dim, true);
    if (h.k == 0)
        t.simplices.push_back({0});
    else if (h.k == 1)
        t.simplices.push_back({0, 1});
    else
        t.simplices = h.hull.fan;
    return t;
}

Rational simplex_volume(const std::vector<Point>& s)
{
    if (s.empty())
        throw PreconditionError("simplex_volume: no points");
    std::size_t d = s[0].size();
    if (s.size() != d + 1)
        throw DimensionMismatch("simplex_volume: need dim+1 points");
    Matrix m;
    for (std::size_t i = 1; i < s.size(); ++i)
        m.push_back(s[i] - s[0]);
    Rational v = abs(determinant(std::move(m)));
    return v / Rational(factorial(static_cast<unsigned>(d)));
}

RootRational relative_volume(const Polytope& p)
{
    if (p.empty())
        return {0, 1};
    Matrix diffs;
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
        diffs.push_back(p.vertices[i] - p.vertices[0]);
    Rref r = rref(diffs, p.dim);
    Matrix gram(r.rows.size(), Point(r.rows.size()));
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        for (std::size_t j = 0; j < r.rows.size(); ++j)
            gram[i][j] = dot(r.rows[i], r.rows[j]);
    return {p.pivot_volume, determinant(gram)};
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q)
{
    if (p.dim != q.dim)
        throw DimensionMismatch("minkowski_sum");
    if (p.empty() || q.empty())
        return empty_polytope(p.dim);
    std::vector<Point> pts;
    pts.reserve(p.vertices.size() * q.vertices.size());
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices)
            pts.push_back(a + b);
    return canonical_hull(pts, p.dim);
}

Polytope scale(const Polytope& p, const Rational& s)
{
    std::vector<Point> pts;
    for (const auto& v : p.vertices)
        pts.push_back(s * v);
    return canonical_hull(pts, p.dim);
}

Polytope negate(const Polytope& p) { return scale(p, -1); }

Polytope translate(const Polytope& p, const Point& t)
{
    std::vector<Point> pts;
    for (const auto& v : p.vertices)
        pts.push_back(v + t);
    return canonical_hull(pts, p.dim);
}

Polytope reflect(const Polytope& p, const std::vector<int>& signs)
{
    if (static_cast<int>(signs.size()) != p.dim)
        throw DimensionMismatch("reflect");
    std::vector<Point> pts;
    for (auto v : p.vertices) {
        for (int i = 0; i < p.dim; ++i)
            if (signs[i] < 0)
                v[i] = -v[i];
        pts.push_back(std::move(v));
    }
    return canonical_hull(pts, p.dim);
}

Polytope convex_union(const Polytope& p, const Polytope& q) { return convex_union(std::vector<Polytope>{p, q}); }

Polytope convex_union(const std::vector<Polytope>& ps)
{
    if (ps.empty())
        throw PreconditionError("convex_union: no bodies");
    std::vector<Point> pts;
    for (const auto& p : ps) {
        if (p.dim != ps[0].dim)
            throw DimensionMismatch("convex_union");
        pts.insert(pts.end(), p.vertices.begin(), p.vertices.end());
    }
    return canonical_hull(pts, ps[0].dim);
}

Polytope product(const Polytope& p, const Polytope& q)
{
    std::vector<Point> pts;
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices) {
            Point c = a;
            c.insert(c.end(), b.begin(), b.end());
            pts.push_back(std::move(c));
        }
    return canonical_hull(pts, p.dim + q.dim);
}

Polytope polar(const Polytope& p)
{
    if (!p.full_dimensional())
        throw PreconditionError("polar: origin is not interior (body not full-dimensional)");
    std::vector<Point> pts;
    for (const auto& f : p.facets) {
        if (sgn(f.offset) <= 0)
            throw PreconditionError("polar: origin is not interior");
        pts.push_back((1 / f.offset) * f.normal);
    }
    return canonical_hull(pts, p.dim);
}

Polytope intersect_hyperplane(const Polytope& p, const Halfspace& h)
{
    std::vector<Point> pts;
    std::vector<Rational> val(p.vertices.size());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        val[i] = dot(h.normal, p.vertices[i]) - h.offset;
        if (sgn(val[i]) == 0)
            pts.push_back(p.vertices[i]);
    }
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (sgn(val[i]) >= 0)
            continue;
        for (std::size_t j = 0; j < p.vertices.size(); ++j) {
            if (sgn(val[j]) <= 0)
                continue;
            Rational t = val[i] / (val[i] - val[j]);
            pts.push_back(p.vertices[i] + t * (p.vertices[j] - p.vertices[i]));
        }
    }
    return canonical_hull(pts, p.dim);
}

Polytope cut(const Polytope& p, const Halfspace& h)
{
    std::vector<Point> pts;
    std::vector<Rational> val(p.vertices.size());
    bool outside = false;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        val[i] = dot(h.normal, p.vertices[i]) - h.offset;
        if (sgn(val[i]) <= 0)
            pts.push_back(p.vertices[i]);
        else
            outside = true;
    }
    if (!outside)
        return p;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (sgn(val[i]) >= 0)
            continue;
        for (std::size_t j = 0; j < p.vertices.size(); ++j) {
            if (sgn(val[j]) <= 0)
                continue;
            Rational t = val[i] / (val[i] - val[j]);
            pts.push_back(p.vertices[i] + t * (p.vertices[j] - p.vertices[i]));
        }
    }
    return canonical_hull(pts, p.dim);
}

Polytope intersect(const Polytope& p, const Polytope& q)
{
    if (p.dim != q.dim)
        throw DimensionMismatch("intersect");
    if (p.empty() || q.empty())
        return empty_polytope(p.dim);
    Polytope r = p;
    for (const auto& e : q.equations) {
        r = intersect_hyperplane(r, e);
        if (r.empty())
            return r;
    }
    for (const auto& f : q.facets) {
        r = cut(r, f);
        if (r.empty())
            return r;
    }
    return r;
}

Polytope halfspace_intersection(int dim, const std::vector<Halfspace>& hs, const Point& c)
{
    if (static_cast<int>(c.size()) != dim)
        throw DimensionMismatch("halfspace_intersection: interior point");
    std::vector<Point> dual;
    for (const auto& h : hs) {
        if (static_cast<int>(h.normal.size()) != dim)
            throw DimensionMismatch("halfspace_intersection");
        Rational beta = h.offset - dot(h.normal, c);
        if (sgn(beta) <= 0)
            throw PreconditionError("halfspace_intersection: point is not strictly interior");
        dual.push_back((1 / beta) * h.normal);
    }
    Polytope d = canonical_hull(dual, dim);
    if (!d.full_dimensional())
        throw PreconditionError("halfspace_intersection: unbounded");
    std::vector<Point> verts;
    for (const auto& f : d.facets) {
        if (sgn(f.offset) <= 0)
            throw PreconditionError("halfspace_intersection: unbounded");
        verts.push_back(c + (1 / f.offset) * f.normal);
    }
    return canonical_hull(verts, dim);
}

Polytope halfspace_intersection_enum(int dim, const std::vector<Halfspace>& hs)
{
    std::vector<Point> verts;
    int m = static_cast<int>(hs.size());
    if (m < dim)
        return empty_polytope(dim);
    std::vector<int> idx(dim);
    for (int i = 0; i < dim; ++i)
        idx[i] = i;
    while (true) {
        Matrix a;
        Point b;
        for (int i : idx) {
            a.push_back(hs[i].normal);
            b.push_back(hs[i].offset);
        }
        if (auto x = solve(a, b)) {
            bool ok = true;
            for (const auto& h : hs)
                if (dot(h.normal, *x) > h.offset) {
                    ok = false;
                    break;
                }
            if (ok)
                verts.push_back(std::move(*x));
        }
        int i = dim - 1;
        while (i >= 0 && idx[i] == m - dim + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < dim; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return canonical_hull(verts, dim);
}

bool contains(const Polytope& outer, const Polytope& inner)
{
    if (outer.dim != inner.dim)
        throw DimensionMismatch("contains");
    for (const auto& v : inner.vertices)
        if (!outer.contains(v))
            return false;
    return true;
}

Polytope coordinate_projection(const Polytope& p, const std::vector<int>& coords)
{
    std::vector<Point> pts;
    for (const auto& v : p.vertices) {
        Point w;
        for (int c : coords)
            w.push_back(v.at(c));
        pts.push_back(std::move(w));
    }
    return canonical_hull(pts, static_cast<int>(coords.size()));
}

Polytope coordinate_section(const Polytope& p, const std::vector<int>& coords)
{
    std::vector<char> keep(p.dim, 0);
    for (int c : coords)
        keep.at(c) = 1;
    Polytope s = p;
    for (int i = 0; i < p.dim && !s.empty(); ++i)
        if (!keep[i])
            s = intersect_hyperplane(s, {unit_vector(p.dim, i), 0});
    if (s.empty())
        return empty_polytope(static_cast<int>(coords.size()));
    return coordinate_projection(s, coords);
}

ProjectionSection project_section(const Polytope& p, const std::vector<int>& coords)
{
    return {coordinate_projection(p, coords), coordinate_section(p, coords)};
}

Polytope embed(const Polytope& p, const std::vector<int>& coords, int dim)
{
    if (static_cast<int>(coords.size()) != p.dim)
        throw DimensionMismatch("embed");
    std::vector<Point> pts;
    for (const auto& v : p.vertices) {
        Point w = zero_point(dim);
        for (std::size_t i = 0; i < coords.size(); ++i)
            w.at(coords[i]) = v[i];
        pts.push_back(std::move(w));
    }
    return canonical_hull(pts, dim);
}

} // namespace abx
