#include "abx/coneab.hpp"

#include <algorithm>
#include <set>

#include "abx/error.hpp"

namespace abx {

namespace {

void combinations(int m, int k, int start, std::vector<int>& cur, const auto& visit)
{
    if (static_cast<int>(cur.size()) == k) {
        visit(cur);
        return;
    }
    for (int i = start; i < m; ++i) {
        cur.push_back(i);
        combinations(m, k, i + 1, cur, visit);
        cur.pop_back();
    }
}

Matrix pick(const std::vector<Point>& pts, const std::vector<int>& idx)
{
    Matrix m;
    for (int i : idx)
        m.push_back(pts[i]);
    return m;
}

// Orthogonal projection of p onto the row span of b (rows independent).
Point project_onto_span(const Matrix& b, const Point& p)
{
    if (b.empty())
        return zero_point(p.size());
    std::size_t k = b.size();
    Matrix g(k, Point(k));
    Point rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            g[i][j] = dot(b[i], b[j]);
        rhs[i] = dot(b[i], p);
    }
    Point lam = *solve(g, rhs);
    Point r = zero_point(p.size());
    for (std::size_t i = 0; i < k; ++i)
        r = r + lam[i] * b[i];
    return r;
}

std::vector<int> tight_normals(const PolyhedralCone& c, const Point& x)
{
    std::vector<int> t;
    for (std::size_t i = 0; i < c.facet_normals.size(); ++i)
        if (sgn(dot(c.facet_normals[i], x)) == 0)
            t.push_back(static_cast<int>(i));
    return t;
}

int face_with_normals(const PolyhedralCone& c, const std::vector<int>& normals)
{
    for (std::size_t i = 0; i < c.faces.size(); ++i)
        if (c.faces[i].normals == normals)
            return static_cast<int>(i);
    throw Error("cone face lookup failed");
}

bool in_dual(const PolyhedralCone& c, const Point& y)
{
    for (const auto& g : c.generators)
        if (sgn(dot(g, y)) < 0)
            return false;
    return true;
}

} // namespace

bool PolyhedralCone::contains(const Point& x) const
{
    for (const auto& a : facet_normals)
        if (sgn(dot(a, x)) < 0)
            return false;
    return true;
}

bool PolyhedralCone::interior(const Point& x) const
{
    for (const auto& a : facet_normals)
        if (sgn(dot(a, x)) <= 0)
            return false;
    return true;
}

PolyhedralCone make_cone(const std::vector<Point>& generators)
{
    if (generators.empty())
        throw PreconditionError("make_cone: no generators");
    int n = static_cast<int>(generators[0].size());
    std::vector<Point> gens;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != n)
            throw DimensionMismatch("make_cone");
        gens.push_back(primitive(g));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (rank(gens) != n)
        throw PreconditionError("make_cone: cone is not full-dimensional");

    std::set<Point> normals;
    std::vector<int> cur;
    combinations(static_cast<int>(gens.size()), n - 1, 0, cur, [&](const std::vector<int>& idx) {
        Matrix m = pick(gens, idx);
        if (rank(m) != n - 1)
            return;
        Point a = nullspace(m, n).front();
        int pos = 0, neg = 0;
        for (const auto& g : gens) {
            int s = sgn(dot(a, g));
            pos += s > 0;
            neg += s < 0;
        }
        if (pos && neg)
            return;
        normals.insert(neg ? -a : a);
    });
    PolyhedralCone c;
    c.dim = n;
    c.facet_normals.assign(normals.begin(), normals.end());
    if (rank(c.facet_normals) != n)
        throw PreconditionError("make_cone: cone is not pointed");

    for (const auto& g : gens) {
        Matrix tight;
        for (const auto& a : c.facet_normals)
            if (sgn(dot(a, g)) == 0)
                tight.push_back(a);
        if (rank(tight) == n - 1)
            c.generators.push_back(g);
    }

    int m = static_cast<int>(c.facet_normals.size());
    if (m > 24)
        throw PreconditionError("make_cone: too many facets for face enumeration");
    std::set<std::vector<int>> seen;
    for (unsigned long s = 0; s < (1ul << m); ++s) {
        ConeFace f;
        for (std::size_t g = 0; g < c.generators.size(); ++g) {
            bool on = true;
            for (int i = 0; i < m && on; ++i)
                if (s >> i & 1ul)
                    on = sgn(dot(c.facet_normals[i], c.generators[g])) == 0;
            if (on)
                f.generators.push_back(static_cast<int>(g));
        }
        if (!seen.insert(f.generators).second)
            continue;
        Matrix span = pick(c.generators, f.generators);
        for (int i = 0; i < m; ++i) {
            bool vanishes = true;
            for (const auto& x : span)
                vanishes = vanishes && sgn(dot(c.facet_normals[i], x)) == 0;
            if (vanishes)
                f.normals.push_back(i);
        }
        f.basis = rref(span, n).rows;
        f.dim = static_cast<int>(f.basis.size());
        c.faces.push_back(std::move(f));
    }
    std::sort(c.faces.begin(), c.faces.end(), [](const ConeFace& a, const ConeFace& b) {
        return std::tie(a.dim, a.generators) < std::tie(b.dim, b.generators);
    });
    return c;
}

PolyhedralCone orthant_cone(int n)
{
    std::vector<Point> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(unit_vector(n, i));
    return make_cone(gens);
}

PolyhedralCone dual(const PolyhedralCone& c) { return make_cone(c.facet_normals); }

bool inside_dual(const PolyhedralCone& c)
{
    for (const auto& g : c.generators)
        for (const auto& h : c.generators)
            if (sgn(dot(g, h)) < 0)
                return false;
    return true;
}

bool precedes(const PolyhedralCone& c, const Point& x, const Point& y) { return in_dual(c, y - x); }

FaceLattice cone_faces(const PolyhedralCone& c)
{
    FaceLattice fl{c, dual(c), {}};
    for (const auto& f : c.faces) {
        std::vector<Point> conj = pick(c.facet_normals, f.normals);
        std::sort(conj.begin(), conj.end());
        int found = -1;
        for (std::size_t i = 0; i < fl.dual.faces.size() && found < 0; ++i) {
            std::vector<Point> g = pick(fl.dual.generators, fl.dual.faces[i].generators);
            std::sort(g.begin(), g.end());
            if (g == conj)
                found = static_cast<int>(i);
        }
        if (found < 0 || f.dim + fl.dual.faces[found].dim != c.dim)
            throw Error("cone_faces: conjugate face not found");
        fl.conjugate.push_back(found);
    }
    return fl;
}

bool nearest_point_certified(const PolyhedralCone& c, const Point& p, const Point& r)
{
    Point h = r - p;
    return c.contains(r) && in_dual(c, h) && sgn(dot(h, r)) == 0;
}

NearestPoint nearest_point(const PolyhedralCone& c, const Point& p)
{
    if (static_cast<int>(p.size()) != c.dim)
        throw DimensionMismatch("nearest_point");
    for (const auto& f : c.faces) {
        Point r = project_onto_span(f.basis, p);
        if (nearest_point_certified(c, p, r))
            return {r, face_with_normals(c, tight_normals(c, r)), r - p};
    }
    throw Error("nearest_point: no face certified");
}

std::vector<Comparison> cone_decomposition_check(const PolyhedralCone& c, const Point& p)
{
    NearestPoint np = nearest_point(c, p);
    int closed_at_r = 0, closed_elsewhere = 0, open = 0;
    for (std::size_t i = 0; i < c.faces.size(); ++i) {
        const ConeFace& f = c.faces[i];
        Point g = project_onto_span(f.basis, p);
        Point h = g - p;
        if (!c.contains(g) || !in_dual(c, h))
            continue;
        if (g == np.r)
            closed_at_r += static_cast<int>(i) == np.face;
        else
            ++closed_elsewhere;
        bool relint = true;
        for (std::size_t a = 0; a < c.facet_normals.size(); ++a)
            if (!std::binary_search(f.normals.begin(), f.normals.end(), static_cast<int>(a)))
                relint = relint && sgn(dot(c.facet_normals[a], g)) > 0;
        for (std::size_t k = 0; k < c.generators.size(); ++k)
            if (!std::binary_search(f.generators.begin(), f.generators.end(), static_cast<int>(k)))
                relint = relint && sgn(dot(c.generators[k], h)) > 0;
        open += relint;
    }
    return {identity("Cor7.5", "certificate", nearest_point_certified(c, p, np.r) ? 1 : 0, 1),
            identity("Lem7.4", "closed", closed_at_r, 1), identity("Lem7.4", "elsewhere", closed_elsewhere, 0),
            inequality("Lem7.4", "open", 1, open)};
}

} // namespace abx
