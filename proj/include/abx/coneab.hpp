#pragma once

#include <optional>
#include <vector>

#include "abx/check.hpp"
#include "abx/polytope.hpp"

namespace abx {

struct ConeFace {
    std::vector<int> generators; // indices into PolyhedralCone::generators
    std::vector<int> normals;    // facet normals vanishing on the face
    int dim = 0;
    std::vector<Point> basis;    // spans the face
};

// Full-dimensional pointed cone; <a, x> >= 0 for every facet normal a.
struct PolyhedralCone {
    int dim = 0;
    std::vector<Point> generators;    // primitive extreme rays, sorted
    std::vector<Point> facet_normals; // primitive, sorted
    std::vector<ConeFace> faces;      // by dimension, then generator set

    bool contains(const Point& x) const;
    bool interior(const Point& x) const;
    bool operator==(const PolyhedralCone& o) const { return dim == o.dim && generators == o.generators; }
};

PolyhedralCone make_cone(const std::vector<Point>& generators);
PolyhedralCone orthant_cone(int n);
PolyhedralCone dual(const PolyhedralCone& c);
// C ⊆ C^∨, i.e. all generators pairwise non-obtuse.
bool inside_dual(const PolyhedralCone& c);
// x ⪯ y iff y - x ∈ C^∨.
bool precedes(const PolyhedralCone& c, const Point& x, const Point& y);

struct FaceLattice {
    PolyhedralCone cone;
    PolyhedralCone dual;
    std::vector<int> conjugate; // face i of cone ↦ face of dual
};
FaceLattice cone_faces(const PolyhedralCone& c);

struct CABBody {
    PolyhedralCone cone;
    Polytope body;
    std::vector<Point> w_rep; // body = {x ∈ C : <w,x> <= 1, w ∈ W}; empty unless proper
    bool proper = false;
};

// C ∩ (conv(U ∪ {0}) - C^∨).
CABBody c_down_closure(const PolyhedralCone& c, const std::vector<Point>& u);
// Accepts p only if it is its own C-down-closure.
CABBody make_cab(const PolyhedralCone& c, const Polytope& p);
std::vector<Point> maximal_points(const PolyhedralCone& c, const std::vector<Point>& pts);
// K° ∩ C; needs K proper and C ⊆ C^∨.
CABBody a_c_dual(const CABBody& k);
// {x : <w,x> <= 1, w ∈ W}, unbounded.
std::vector<Halfspace> hat(const CABBody& k);
bool in_hat(const CABBody& k, const Point& x);

struct NearestPoint {
    Point r;
    int face = -1;       // smallest face containing r
    Point certificate;   // r - p ∈ C^∨ with <r - p, r> = 0
};
NearestPoint nearest_point(const PolyhedralCone& c, const Point& p);
bool nearest_point_certified(const PolyhedralCone& c, const Point& p, const Point& r);
// Metric projection onto a polytope; certified by <p - r, v - r> <= 0 over all vertices v.
Point nearest_point(const Polytope& k, const Point& p);

// p ∈ F - F⋄ for the face F carrying π_C(p), and for at most one face in the relatively open sense.
std::vector<Comparison> cone_decomposition_check(const PolyhedralCone& c, const Point& p);
// π_K(p) = π_C(p) for p ∈ K̂.
Comparison nearest_point_agreement(const CABBody& k, const Point& p);

enum class ConeAssembly { Sum, Hull };

struct ConePiece {
    int face = -1;
    int dim = 0;
    Polytope k_face;    // K ∩ F
    Polytope l_face;    // L ∩ F⋄
    Polytope piece;     // K_F - L_F⋄ or K_F ∨ -L_F⋄
    Rational volume;    // direct
    Rational formula;   // Vol_j(K_F) Vol_{n-j}(L_F⋄), divided by binom(n,j) for hulls
};

struct ConeDissection {
    Polytope whole;
    std::vector<ConePiece> pieces;
    std::vector<Comparison> checks;
};

ConeDissection cone_dissect(const CABBody& k, const CABBody& l, ConeAssembly mode);
// P - Q = P̂ ∩ (-Q̂) when both are proper with W-representations.
std::optional<Comparison> difference_as_hat_intersection(const CABBody& p, const CABBody& q);

} // namespace abx
