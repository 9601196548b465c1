#include "doctest.h"

#include <random>

#include "abx/cbodies.hpp"
#include "oracles.hpp"

using namespace abx;
using testing_util::pts;
using testing_util::q;

namespace {

AntiBlockingBody pentagon() { return down_closure(pts({{1, 1}, {q(3, 2), q(1, 2)}})); }

AntiBlockingBody random_ab(int n, std::mt19937_64& rng)
{
    std::vector<Point> u;
    for (int i = 0; i < n + 1; ++i) {
        Point p(n);
        for (auto& x : p) {
            int d = std::uniform_int_distribution<int>(1, 16)(rng);
            x = q(std::uniform_int_distribution<int>(1, d)(rng), d);
        }
        u.push_back(p);
    }
    return down_closure(u);
}

std::vector<Comparison> with_tag(const std::vector<Comparison>& cs, const std::string& tag)
{
    std::vector<Comparison> out;
    for (const auto& c : cs)
        if (c.tag == tag)
            out.push_back(c);
    return out;
}

} // namespace

TEST_CASE("Cayley bodies of the unit interval")
{
    AntiBlockingBody seg = unit_cube(1);
    CayleyBody c1 = cayley(seg, seg, 1);
    CHECK(c1.body.vertices == pts({{-1, -1}, {0, -1}, {0, 1}, {1, 1}}));
    CHECK(oracle::shoelace(c1.body.vertices) == 2);
    CHECK(volume(c1.body) == 2);
    CayleyBody c0 = cayley(seg, seg, 0);
    CHECK(c0.body.vertices == pts({{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
    CHECK(volume(c0.body) == 2);
    CHECK_THROWS_AS(cayley(seg, seg, q(3, 2)), PreconditionError);
}

TEST_CASE("the middle slice is a Minkowski combination")
{
    std::mt19937_64 rng(43);
    for (int n = 1; n <= 3; ++n) {
        AntiBlockingBody k = random_ab(n, rng), t = random_ab(n, rng);
        CayleyBody c = cayley(k, t, 1);
        Polytope half = minkowski_sum(scale(k.body, q(1, 2)), scale(negate(t.body), q(1, 2)));
        CHECK(cayley_slice(c, 0) == half);
    }
    CayleyBody s = cayley(pentagon(), pentagon(), q(1, 3));
    CHECK(s.body == negate(s.body));
}

TEST_CASE("volume of C(K,-T) from mixed volumes")
{
    auto a = cbody_volume_identity(unit_cube(1), unit_cube(1));
    CHECK(a[0].lhs == 2);
    CHECK(a[0].holds());
    auto b = cbody_volume_identity(standard_simplex(2), standard_simplex(2));
    CHECK(b[0].lhs == q(4, 3));
    CHECK(b[0].rhs == q(2, 3) * (q(1, 2) + 1 + q(1, 2)));
    // right side from the planar oracle: (2/3)(Vol Δ + V(Δ, -Q) + Vol Q)
    auto dv = standard_simplex(2).body.vertices, sv = unit_cube(2).body.vertices;
    Rational want = q(2, 3) * (q(1, 2) + oracle::mixed2(dv, oracle::neg(sv)) + 1);
    auto c = cbody_volume_identity(standard_simplex(2), unit_cube(2));
    CHECK(c[0].lhs == want);
    CHECK(c[0].holds());
}

TEST_CASE("polar of C(K,-T)")
{
    AntiBlockingBody seg = unit_cube(1);
    CBodyPolarReport r = cbody_polar(seg, seg);
    CHECK(r.polar.vertices == pts({{-2, 1}, {0, -1}, {0, 1}, {2, -1}}));
    CHECK(with_tag(r.checks, "Thm4.9")[0].holds());
    for (int n = 1; n <= 3; ++n) {
        CBodyPolarReport s = cbody_polar(standard_simplex(n), standard_simplex(n));
        CHECK(s.polar == s.predicted);
        CHECK(with_tag(s.checks, "Thm1.4.identity")[0].holds());
        CHECK(with_tag(s.checks, "Thm1.4.chain")[0].holds());
    }
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 3; ++rep) {
        AntiBlockingBody k = random_ab(2, rng), t = random_ab(2, rng);
        CHECK(cbody_polar(k, t).polar == cbody_polar(k, t).predicted);
    }
}

TEST_CASE("the volume of C_lambda does not depend on lambda")
{
    auto a = shadow_invariance(unit_cube(1), unit_cube(1), {0, q(1, 2), 1});
    CHECK(all_hold(a));
    CHECK(a[0].lhs == 2);
    std::vector<Rational> ls{0, q(1, 4), q(1, 2), q(3, 4), 1};
    auto b = shadow_invariance(standard_simplex(2), standard_simplex(2), ls);
    CHECK(all_hold(b));
    for (const auto& c : b)
        CHECK(c.lhs == q(4, 3));
    CHECK(all_hold(shadow_invariance(standard_simplex(2), unit_cube(2), {0, 1})));
}

TEST_CASE("Steiner symmetrals")
{
    Polytope s = steiner_symmetral(unit_cube(2), 1, q(1, 2));
    CHECK(s == canonical_hull(pts({{0, q(-1, 2)}, {0, q(1, 2)}, {1, q(-1, 2)}, {1, q(1, 2)}})));
    Polytope d = steiner_symmetral(standard_simplex(2), 1, q(1, 2));
    CHECK(d.vertices == pts({{0, q(-1, 2)}, {0, q(1, 2)}, {1, 0}}));
    CHECK(volume(d) == q(1, 2));
    std::mt19937_64 rng(53);
    AntiBlockingBody k = random_ab(3, rng);
    for (Rational t : {Rational(0), q(1, 4), q(1, 2), Rational(1)})
        for (int axis = 0; axis < 3; ++axis)
            CHECK(volume(steiner_symmetral(k, axis, t)) == volume(k.body));
    CHECK_THROWS_AS(steiner_symmetral(k, 3, q(1, 2)), PreconditionError);
}

TEST_CASE("symmetrization does not increase mixed volumes")
{
    // V(S Δ, S P) = 1 = V(Δ, P) for the pentagon P, from the planar oracle
    auto dv = standard_simplex(2).body.vertices, pv = pentagon().body.vertices;
    auto sym = [](const std::vector<Point>& v) {
        std::vector<Point> out;
        for (const auto& p : v) {
            out.push_back({p[0], p[1] / 2});
            out.push_back({p[0], -p[1] / 2});
        }
        return out;
    };
    CHECK(oracle::mixed2(sym(dv), sym(pv)) == 1);
    CHECK(oracle::mixed2(dv, pv) == 1);
    auto cs = steiner_monotonicity(standard_simplex(2), pentagon(), 1);
    CHECK(all_hold(cs));
    CHECK(cs[1].lhs == 1);
    CHECK(cs[1].rhs == 1);

    std::mt19937_64 rng(59);
    for (int rep = 0; rep < 3; ++rep) {
        AntiBlockingBody k = random_ab(3, rng), t = random_ab(3, rng);
        for (int axis = 0; axis < 3; ++axis)
            CHECK(all_hold(steiner_monotonicity(k, t, axis)));
        CHECK(iterated_symmetral_check(k).holds());
    }
}

TEST_CASE("Mahler bounds for K ∨ -K and C_lambda")
{
    Rational tiny(1);
    for (int i = 0; i < 64; ++i)
        tiny /= 2;
    for (int n = 1; n <= 4; ++n) {
        CHECK(binomial_root_bound(n, 96).width() < tiny);
        CHECK(cbody_mahler_bound(n, 96).width() < tiny);
        CHECK(central_binomial_bound(n, 96).width() < tiny);
        CHECK(all_hold(mahler_bounds_for_hull(standard_simplex(n))));
        CHECK(all_hold(mahler_bounds_for_hull(unit_cube(n))));
    }
    // (1/1!)(1 + 1)^2 = 4 for n = 1
    CHECK(binomial_root_bound(1, 96).contains(4));
}
