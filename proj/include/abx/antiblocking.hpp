#pragma once

#include <map>
#include <vector>

#include "abx/check.hpp"
#include "abx/polytope.hpp"

namespace abx {

using SignVector = std::vector<int>; // entries +1 / -1
using Mask = unsigned;               // coordinate subspace E as a bit set

std::vector<int> mask_coords(Mask e, int n);
SignVector sign_of(Mask e, int n); // +1 on E, -1 off E
int popcount(Mask e);

struct AntiBlockingBody {
    Polytope body;
    std::vector<Point> generators; // the componentwise-maximal vertices

    int dim() const { return body.dim; }
    bool operator==(const AntiBlockingBody& o) const { return body == o.body; }
};

bool is_antiblocking(const Polytope& p);
AntiBlockingBody make_antiblocking(const Polytope& p);
AntiBlockingBody down_closure(const std::vector<Point>& u);
AntiBlockingBody abdual(const AntiBlockingBody& k);
std::vector<Point> maximal_points(const std::vector<Point>& pts);

AntiBlockingBody standard_simplex(int n);
AntiBlockingBody unit_cube(int n);
AntiBlockingBody box(const Point& a);

// P_E K in the |E|-dimensional frame of E; equals K ∩ E for anti-blocking K.
Polytope coordinate_part(const AntiBlockingBody& k, Mask e);

bool is_simplex(const AntiBlockingBody& k); // conv{0, a_1 e_1, ..., a_n e_n}
bool is_box(const AntiBlockingBody& k);     // [0,a_1] x ... x [0,a_n]
// Reduced Hanner up to positive diagonal scaling.
bool is_reduced_hanner(const Polytope& p);

struct LocallyAntiBlockingBody {
    int dim = 0;
    std::map<SignVector, AntiBlockingBody> pieces; // K_sigma = (sigma K) ∩ R^n_+
    Polytope assembled;

    Polytope orthant_piece(const SignVector& sigma) const; // sigma K_sigma, inside the orthant
};

// (sigma P) ∩ R^n_+ for every sigma; throws unless each is anti-blocking.
LocallyAntiBlockingBody make_locally_antiblocking(const Polytope& p);
// Accepts explicit pieces only when the hull-piece consistency check passes.
LocallyAntiBlockingBody from_pieces(int n, const std::map<SignVector, AntiBlockingBody>& pieces);
LocallyAntiBlockingBody unconditional_closure(const AntiBlockingBody& k);
Polytope orthant_intersection(const Polytope& p, const SignVector& sigma);
// Every stored piece equals the assembled body cut down to its orthant.
bool pieces_consistent(const LocallyAntiBlockingBody& k);

enum class Assembly { Sum, Hull };

struct DecompositionPiece {
    Mask e = 0;
    SignVector sigma;
    Polytope piece;          // inside the orthant of sigma
    Rational formula_volume; // from the volumes of the coordinate parts
};

struct Decomposition {
    LocallyAntiBlockingBody body;
    std::vector<DecompositionPiece> pieces; // ordered by mask
};

// K - K2 (Sum) or K ∨ -K2 (Hull) with the piece for E equal to P_E K × P_E⊥(-K2), resp. P_E K ∨ P_E⊥(-K2).
Decomposition decompose_difference(const AntiBlockingBody& k, const AntiBlockingBody& k2, Assembly mode);

// V(K[j], -T[n-j]) from volumes of coordinate parts.
Rational mixed_volume_ab(const AntiBlockingBody& k, const AntiBlockingBody& t, int j);

// Reports. Each comparison names its theorem tag.
struct GodbersenReport {
    std::vector<Comparison> checks;
    bool simplex = false;
    bool box = false;
};
GodbersenReport godbersen_check(const AntiBlockingBody& k);

std::vector<Comparison> saint_raymond_products(const AntiBlockingBody& k, const AntiBlockingBody& t, int j);
// V(K_1..K_j, -T_1..-T_{n-j}) V(AK_1..AK_j, -AT_1..-AT_{n-j}) >= 1/(j!(n-j)!) via the oracle.
Comparison mixed_saint_raymond_general(const std::vector<AntiBlockingBody>& ks, const std::vector<AntiBlockingBody>& ts);
std::vector<Comparison> reverse_kleitman_check(const AntiBlockingBody& k, const AntiBlockingBody& t);
// L = K - T: (L - L) ∩ R^n_+ equals K + T and has volume at most Vol(L).
std::vector<Comparison> order_convex_check(const AntiBlockingBody& k, const AntiBlockingBody& t);

struct PolarReport {
    LocallyAntiBlockingBody polar;
    std::vector<Comparison> checks;
    bool all_pieces_reduced_hanner = false;
};
PolarReport locally_ab_polar(const LocallyAntiBlockingBody& k);

} // namespace abx
