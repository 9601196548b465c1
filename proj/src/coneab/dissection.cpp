#include "abx/coneab.hpp"

#include "abx/error.hpp"

namespace abx {

namespace {

// body ∩ span of the face, cut out by the normals vanishing on it.
Polytope face_section(const Polytope& body, const std::vector<Point>& normals, const ConeFace& f)
{
    Polytope s = body;
    for (int i : f.normals)
        s = intersect_hyperplane(s, {normals[i], 0});
    return s;
}

std::optional<Rational> exact_sqrt(const Rational& x)
{
    if (sgn(x) < 0)
        return std::nullopt;
    Integer p = sqrt(x.get_num()), q = sqrt(x.get_den());
    if (p * p != x.get_num() || q * q != x.get_den())
        return std::nullopt;
    return Rational(p, q);
}

RootRational face_volume(const Polytope& p, int dim)
{
    if (p.affine_dim < dim)
        return {0, 1};
    return relative_volume(p);
}

} // namespace

ConeDissection cone_dissect(const CABBody& k, const CABBody& l, ConeAssembly mode)
{
    const PolyhedralCone& c = k.cone;
    int n = c.dim;
    if (!inside_dual(c))
        throw PreconditionError("cone_dissect: cone is not contained in its dual");
    FaceLattice fl = cone_faces(c);
    if (!(l.cone == fl.dual))
        throw PreconditionError("cone_dissect: L must be anti-blocking for the dual cone");

    ConeDissection out;
    out.whole = mode == ConeAssembly::Sum ? minkowski_sum(k.body, negate(l.body)) : convex_union(k.body, negate(l.body));
    std::vector<Rational> by_dim(n + 1, Rational(0));
    for (std::size_t i = 0; i < c.faces.size(); ++i) {
        const ConeFace& f = c.faces[i];
        const ConeFace& fd = fl.dual.faces[fl.conjugate[i]];
        ConePiece pc;
        pc.face = static_cast<int>(i);
        pc.dim = f.dim;
        pc.k_face = face_section(k.body, c.facet_normals, f);
        pc.l_face = face_section(l.body, fl.dual.facet_normals, fd);
        Polytope neg = negate(pc.l_face);
        pc.piece = mode == ConeAssembly::Sum ? minkowski_sum(pc.k_face, neg) : convex_union(pc.k_face, neg);
        pc.volume = volume(pc.piece);
        RootRational a = face_volume(pc.k_face, f.dim), b = face_volume(pc.l_face, n - f.dim);
        Rational prod = 0;
        if (sgn(a.coefficient) != 0 && sgn(b.coefficient) != 0) {
            auto root = exact_sqrt(a.radicand * b.radicand);
            if (!root)
                throw Error("cone_dissect: face volumes do not multiply to a rational");
            prod = a.coefficient * b.coefficient * *root;
        }
        by_dim[f.dim] += prod;
        pc.formula = mode == ConeAssembly::Sum ? prod : prod / Rational(binomial(n, f.dim));
        out.pieces.push_back(std::move(pc));
    }

    Rational total = 0;
    int outside = 0, overlaps = 0;
    for (std::size_t i = 0; i < out.pieces.size(); ++i) {
        const ConePiece& p = out.pieces[i];
        total += p.volume;
        out.checks.push_back(identity("Thm7.7", "face=" + std::to_string(i), p.volume, p.formula));
        if (!contains(out.whole, p.piece))
            ++outside;
        for (std::size_t j = i + 1; j < out.pieces.size(); ++j)
            if (intersect(p.piece, out.pieces[j].piece).full_dimensional())
                ++overlaps;
    }
    out.checks.push_back(identity("Thm7.7", "volume", total, volume(out.whole)));
    out.checks.push_back(identity("Thm7.7", "outside", outside, 0));
    out.checks.push_back(identity("Thm7.7", "overlaps", overlaps, 0));

    std::vector<Rational> oracle = mixed_volume_series_oracle(k.body, negate(l.body));
    Rational sum_v = 0;
    for (int j = 0; j <= n; ++j) {
        Rational v = by_dim[j] / Rational(binomial(n, j));
        sum_v += v;
        out.checks.push_back(identity("Thm7.7.mixed", "j=" + std::to_string(j), v, oracle[j]));
    }
    if (mode == ConeAssembly::Hull)
        out.checks.push_back(identity("Thm7.7.hull", "", volume(out.whole), sum_v));
    return out;
}

} // namespace abx
