#include "abx/antiblocking.hpp"

namespace abx {

namespace {

std::string jlabel(int j) { return "j=" + std::to_string(j); }

Rational inv_fact(unsigned n) { return Rational(1) / Rational(factorial(n)); }

} // namespace

Rational mixed_volume_ab(const AntiBlockingBody& k, const AntiBlockingBody& t, int j)
{
    int n = k.dim();
    if (t.dim() != n)
        throw DimensionMismatch("mixed_volume_ab");
    if (j < 0 || j > n)
        throw PreconditionError("mixed_volume_ab: j out of range");
    Mask all = (1u << n) - 1;
    Rational s = 0;
    for (Mask e = 0; e <= all; ++e)
        if (popcount(e) == j)
            s += volume(coordinate_part(k, e)) * volume(coordinate_part(t, all ^ e));
    return s / Rational(binomial(n, j));
}

GodbersenReport godbersen_check(const AntiBlockingBody& k)
{
    int n = k.dim();
    GodbersenReport r;
    r.simplex = is_simplex(k);
    r.box = is_box(k);
    Rational vol = volume(k.body);
    for (int j = 1; j < n; ++j) {
        Rational v = mixed_volume_ab(k, k, j);
        Rational upper = Rational(binomial(n, j)) * vol;
        r.checks.push_back(inequality("Thm1.2", jlabel(j), upper, v));
        r.checks.push_back(inequality("Godbersen.lower", jlabel(j), v, vol));
        r.checks.push_back(equivalence("Prop3.3", jlabel(j), upper == v, r.simplex));
        r.checks.push_back(equivalence("Prop3.5", jlabel(j), v == vol, r.box));
    }
    return r;
}

std::vector<Comparison> saint_raymond_products(const AntiBlockingBody& k, const AntiBlockingBody& t, int j)
{
    int n = k.dim();
    AntiBlockingBody ak = abdual(k), at = abdual(t);
    std::vector<Comparison> out;
    Comparison plain = inequality("Thm4.1", "", volume(k.body) * volume(ak.body), inv_fact(n));
    out.push_back(plain);
    out.push_back(equivalence("Thm4.1.equality", "", plain.equal, is_reduced_hanner(k.body)));
    Rational prod = mixed_volume_ab(k, t, j) * mixed_volume_ab(ak, at, j);
    out.push_back(inequality("Thm1.3", jlabel(j), prod, inv_fact(j) * inv_fact(n - j)));
    return out;
}

Comparison mixed_saint_raymond_general(const std::vector<AntiBlockingBody>& ks, const std::vector<AntiBlockingBody>& ts)
{
    std::vector<Polytope> direct, dual;
    for (const auto& k : ks) {
        direct.push_back(k.body);
        dual.push_back(abdual(k).body);
    }
    for (const auto& t : ts) {
        direct.push_back(negate(t.body));
        dual.push_back(negate(abdual(t).body));
    }
    unsigned j = ks.size(), m = ts.size();
    Rational prod = mixed_volume_oracle(direct) * mixed_volume_oracle(dual);
    return inequality("Thm1.3.general", jlabel(static_cast<int>(j)), prod, inv_fact(j) * inv_fact(m));
}

std::vector<Comparison> reverse_kleitman_check(const AntiBlockingBody& k, const AntiBlockingBody& t)
{
    int n = k.dim();
    std::vector<Rational> plus = mixed_volume_series_oracle(k.body, t.body);
    std::vector<Comparison> out;
    for (int j = 0; j <= n; ++j)
        out.push_back(inequality("Thm1.6", jlabel(j), mixed_volume_ab(k, t, j), plus[j]));
    Rational minus = volume(minkowski_sum(k.body, negate(t.body)));
    Rational sum = volume(minkowski_sum(k.body, t.body));
    out.push_back(inequality("Thm5.1", "", minus, sum));
    return out;
}

std::vector<Comparison> order_convex_check(const AntiBlockingBody& k, const AntiBlockingBody& t)
{
    int n = k.dim();
    Polytope l = minkowski_sum(k.body, negate(t.body));
    Polytope delta = orthant_intersection(minkowski_sum(l, negate(l)), SignVector(n, 1));
    Polytope sum = minkowski_sum(k.body, t.body);
    return {set_identity("Thm5.2", "delta", delta.vertices.size(), sum.vertices.size(), delta == sum),
            inequality("Thm5.2", "", volume(l), volume(delta))};
}

PolarReport locally_ab_polar(const LocallyAntiBlockingBody& k)
{
    int n = k.dim;
    PolarReport r;
    r.polar.dim = n;
    std::vector<Polytope> parts;
    r.all_pieces_reduced_hanner = true;
    for (const auto& [sigma, piece] : k.pieces) {
        AntiBlockingBody d = abdual(piece);
        parts.push_back(reflect(d.body, sigma));
        r.polar.pieces.emplace(sigma, d);
        if (!is_reduced_hanner(piece.body))
            r.all_pieces_reduced_hanner = false;
    }
    r.polar.assembled = convex_union(parts);
    Polytope direct = polar(k.assembled);
    r.checks.push_back(set_identity("Lem2.4", "polar", direct.vertices.size(), r.polar.assembled.vertices.size(),
                                    direct == r.polar.assembled));
    bool pieces_ok = pieces_consistent(r.polar);
    r.checks.push_back(set_identity("Lem2.4", "pieces", r.polar.pieces.size(), r.polar.pieces.size(), pieces_ok));
    Rational bound = Rational(Integer(1) << (2 * n)) * inv_fact(n);
    Comparison c = inequality("Cor4.2", "", volume(k.assembled) * volume(direct), bound);
    r.checks.push_back(c);
    r.checks.push_back(implication("Cor4.2.equality", "", c.equal, r.all_pieces_reduced_hanner));
    return r;
}

} // namespace abx
