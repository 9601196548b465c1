#include "abx/antiblocking.hpp"

namespace abx {

namespace {

Mask all_of(int n) { return (1u << n) - 1; }

} // namespace

Polytope LocallyAntiBlockingBody::orthant_piece(const SignVector& sigma) const
{
    return reflect(pieces.at(sigma).body, sigma);
}

Polytope orthant_intersection(const Polytope& p, const SignVector& sigma)
{
    int n = p.dim;
    if (static_cast<int>(sigma.size()) != n)
        throw DimensionMismatch("orthant_intersection");
    std::vector<Halfspace> walls;
    for (int i = 0; i < n; ++i)
        walls.push_back({-sigma[i] * unit_vector(n, i), 0});
    if (!p.full_dimensional() || !p.interior(zero_point(n))) {
        Polytope q = p;
        for (const auto& h : walls)
            q = cut(q, h);
        return q;
    }
    // step from the origin into the open orthant, staying inside p
    Rational eps = 1;
    for (const auto& f : p.facets) {
        Rational s = 0;
        for (int i = 0; i < n; ++i)
            s += sigma[i] * f.normal[i];
        if (sgn(s) > 0)
            eps = std::min(eps, Rational(f.offset / (2 * s)));
    }
    std::vector<Halfspace> hs = p.facets;
    hs.insert(hs.end(), walls.begin(), walls.end());
    Point c(n);
    for (int i = 0; i < n; ++i)
        c[i] = sigma[i] * eps;
    return halfspace_intersection(n, hs, c);
}

LocallyAntiBlockingBody make_locally_antiblocking(const Polytope& p)
{
    LocallyAntiBlockingBody out;
    out.dim = p.dim;
    out.assembled = p;
    for (Mask m = 0; m <= all_of(p.dim); ++m) {
        SignVector sigma = sign_of(m, p.dim);
        Polytope piece = reflect(orthant_intersection(p, sigma), sigma);
        if (!is_antiblocking(piece))
            throw PreconditionError("not locally anti-blocking: the piece for orthant " + std::to_string(m) +
                                    " is not anti-blocking");
        out.pieces.emplace(sigma, AntiBlockingBody{piece, maximal_points(piece.vertices)});
    }
    return out;
}

LocallyAntiBlockingBody from_pieces(int n, const std::map<SignVector, AntiBlockingBody>& pieces)
{
    if (pieces.size() != (std::size_t{1} << n))
        throw PreconditionError("from_pieces: expected one piece per orthant");
    std::vector<Polytope> parts;
    for (const auto& [sigma, k] : pieces) {
        if (static_cast<int>(sigma.size()) != n || k.dim() != n)
            throw DimensionMismatch("from_pieces");
        parts.push_back(reflect(k.body, sigma));
    }
    LocallyAntiBlockingBody out{n, pieces, convex_union(parts)};
    if (!pieces_consistent(out))
        throw PreconditionError("from_pieces: the hull of the pieces cuts back to different pieces");
    return out;
}

LocallyAntiBlockingBody unconditional_closure(const AntiBlockingBody& k)
{
    int n = k.dim();
    LocallyAntiBlockingBody out;
    out.dim = n;
    std::vector<Point> pts;
    for (Mask m = 0; m <= all_of(n); ++m) {
        SignVector sigma = sign_of(m, n);
        out.pieces.emplace(sigma, k);
        for (const auto& v : k.generators) {
            Point w = v;
            for (int i = 0; i < n; ++i)
                w[i] *= sigma[i];
            pts.push_back(std::move(w));
        }
    }
    out.assembled = canonical_hull(pts, n);
    return out;
}

bool pieces_consistent(const LocallyAntiBlockingBody& k)
{
    for (const auto& [sigma, piece] : k.pieces)
        if (reflect(orthant_intersection(k.assembled, sigma), sigma) != piece.body)
            return false;
    return true;
}

Decomposition decompose_difference(const AntiBlockingBody& k, const AntiBlockingBody& k2, Assembly mode)
{
    int n = k.dim();
    if (k2.dim() != n)
        throw DimensionMismatch("decompose_difference");
    Decomposition out;
    out.body.dim = n;
    out.body.assembled = mode == Assembly::Sum ? minkowski_sum(k.body, negate(k2.body))
                                               : convex_union(k.body, negate(k2.body));
    for (Mask e = 0; e <= all_of(n); ++e) {
        std::vector<int> ce = mask_coords(e, n), co = mask_coords(all_of(n) ^ e, n);
        Polytope a = coordinate_part(k, e), b = coordinate_part(k2, all_of(n) ^ e);
        Polytope piece;
        Rational vol = volume(a) * volume(b);
        if (mode == Assembly::Sum) {
            std::vector<Point> pts;
            for (const auto& x : a.vertices)
                for (const auto& y : b.vertices) {
                    Point z = zero_point(n);
                    for (std::size_t i = 0; i < ce.size(); ++i)
                        z[ce[i]] = x[i];
                    for (std::size_t i = 0; i < co.size(); ++i)
                        z[co[i]] = y[i];
                    pts.push_back(std::move(z));
                }
            piece = canonical_hull(pts, n);
        } else {
            piece = convex_union(embed(a, ce, n), embed(b, co, n));
            vol /= Rational(binomial(n, static_cast<int>(ce.size())));
        }
        SignVector sigma = sign_of(e, n);
        out.body.pieces.emplace(sigma, AntiBlockingBody{piece, maximal_points(piece.vertices)});
        out.pieces.push_back({e, sigma, reflect(piece, sigma), vol});
    }
    return out;
}

} // namespace abx
