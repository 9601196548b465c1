#pragma once

#include <vector>

#include "abx/linalg.hpp"

namespace abx {

// <normal, x> <= offset, or = offset when used as an equation.
struct Halfspace {
    Point normal;
    Rational offset;

    bool operator==(const Halfspace&) const = default;
};

struct Polytope {
    int dim = 0;
    int affine_dim = -1; // -1 for the empty set
    std::vector<Point> vertices;     // extreme points, lexicographic
    std::vector<Halfspace> facets;   // primitive integer normals, sorted
    std::vector<Halfspace> equations; // affine hull, empty when full-dimensional
    std::vector<int> pivots;          // coordinates onto which the affine hull projects injectively
    Rational pivot_volume;            // affine_dim-volume of that projection
    bool is_canonical = false;

    bool empty() const { return vertices.empty(); }
    bool full_dimensional() const { return affine_dim == dim; }
    bool contains(const Point& x) const;
    bool interior(const Point& x) const;

    // Polytopes are equal iff their canonical vertex lists are.
    bool operator==(const Polytope& o) const { return dim == o.dim && vertices == o.vertices; }
};

struct Triangulation {
    std::vector<std::vector<int>> simplices; // indices into Polytope::vertices
};

// k-dimensional volume written as coefficient * sqrt(radicand).
struct RootRational {
    Rational coefficient;
    Rational radicand;
};

Polytope canonical_hull(const std::vector<Point>& points);
Polytope canonical_hull(const std::vector<Point>& points, int dim); // permits empty input
Polytope empty_polytope(int dim);

Rational volume(const Polytope& p);
Triangulation triangulate(const Polytope& p);
Rational simplex_volume(const std::vector<Point>& simplex);
RootRational relative_volume(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope scale(const Polytope& p, const Rational& s);
Polytope negate(const Polytope& p);
Polytope translate(const Polytope& p, const Point& t);
Polytope reflect(const Polytope& p, const std::vector<int>& signs);
Polytope convex_union(const Polytope& p, const Polytope& q);
Polytope convex_union(const std::vector<Polytope>& ps);
Polytope product(const Polytope& p, const Polytope& q);
Polytope polar(const Polytope& p);

Polytope intersect_hyperplane(const Polytope& p, const Halfspace& h);
Polytope cut(const Polytope& p, const Halfspace& h);
Polytope intersect(const Polytope& p, const Polytope& q);
// Bounded intersection of halfspaces given a point strictly inside every one of them.
Polytope halfspace_intersection(int dim, const std::vector<Halfspace>& hs, const Point& interior);
// Same, by enumerating dim-subsets of constraints; for small inputs and lower-dimensional results.
Polytope halfspace_intersection_enum(int dim, const std::vector<Halfspace>& hs);
bool contains(const Polytope& outer, const Polytope& inner);

struct ProjectionSection {
    Polytope projection;
    Polytope section;
};
Polytope coordinate_projection(const Polytope& p, const std::vector<int>& coords);
Polytope coordinate_section(const Polytope& p, const std::vector<int>& coords);
ProjectionSection project_section(const Polytope& p, const std::vector<int>& coords);
// Places a polytope living in the frame of coords into R^dim.
Polytope embed(const Polytope& p, const std::vector<int>& coords, int dim);

Rational mixed_volume_oracle(const std::vector<Polytope>& bodies);
// V(K[j], T[n-j]) for j = 0..n, the inclusion-exclusion sums sharing their Minkowski sums.
std::vector<Rational> mixed_volume_series_oracle(const Polytope& k, const Polytope& t);

} // namespace abx
