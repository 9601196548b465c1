#pragma once

#include <vector>

#include "abx/antiblocking.hpp"
#include "abx/enclosure.hpp"

namespace abx {

// C_lambda(K, -T) = conv(K × {lambda} ∪ -T × {-lambda} ∪ [-e_{n+1}, e_{n+1}]) in R^{n+1}.
struct CayleyBody {
    int base_dim = 0;
    Rational lambda;
    Polytope body;
    AntiBlockingBody k;
    AntiBlockingBody t;
};

CayleyBody cayley(const AntiBlockingBody& k, const AntiBlockingBody& t, const Rational& lambda);
// The slice at height h, as a polytope in R^n.
Polytope cayley_slice(const CayleyBody& c, const Rational& h);

std::vector<Comparison> cbody_volume_identity(const AntiBlockingBody& k, const AntiBlockingBody& t);

struct CBodyPolarReport {
    Polytope polar;    // polar(C(K,-T))
    Polytope predicted; // C(-2AT, 2AK)
    std::vector<Comparison> checks;
};
// Set identity for the polar of C(K,-T). The Mahler bounds for C_lambda(K) are added when K == T.
CBodyPolarReport cbody_polar(const AntiBlockingBody& k, const AntiBlockingBody& t,
                             const std::vector<Rational>& lambdas = {Rational(1)});

// (1/n!) (sum_j sqrt(binom(n,j)))^2, sqrt(2 pi n)/(n+1) 4^{n+1}/(n+1)!, (2^n/n!) sqrt(pi n / 2).
Interval binomial_root_bound(int n, unsigned bits);
Interval cbody_mahler_bound(int n, unsigned bits);
Interval central_binomial_bound(int n, unsigned bits);

std::vector<Comparison> mahler_bounds_for_hull(const AntiBlockingBody& k);

std::vector<Comparison> shadow_invariance(const AntiBlockingBody& k, const AntiBlockingBody& t,
                                          const std::vector<Rational>& lambdas);

// x_axis ↦ (1-t) x_axis and x_axis ↦ -t x_axis on every vertex; axis is 0-based. Needs the fibres along
// the axis to start at 0, which holds for anti-blocking bodies and their partial symmetrals.
Polytope steiner_symmetral(const Polytope& k, int axis, const Rational& t);
Polytope steiner_symmetral(const AntiBlockingBody& k, int axis, const Rational& t);
// V(S_H K[j], S_H T[n-j]) <= V(K[j], T[n-j]) for all j, and volume preservation.
std::vector<Comparison> steiner_monotonicity(const AntiBlockingBody& k, const AntiBlockingBody& t, int axis);
// S_{H_1} ... S_{H_n} K against (1/2) K̂.
Comparison iterated_symmetral_check(const AntiBlockingBody& k);

} // namespace abx
