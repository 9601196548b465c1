#include "abx/cli.hpp"

namespace abx {

namespace {

Json points_json(const std::vector<Point>& pts)
{
    Json a = Json::array();
    for (const auto& p : pts)
        a.push_back(to_json(p));
    return a;
}

std::vector<Point> points_from_json(const Json& j)
{
    std::vector<Point> out;
    for (const auto& p : j)
        out.push_back(point_from_json(p));
    return out;
}

int dim_field(const Json& j)
{
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("missing integer field \"dim\"");
    int n = j["dim"].get<int>();
    if (n < 0)
        throw ParseError("negative dimension");
    return n;
}

} // namespace

Json to_json(const Point& p)
{
    Json a = Json::array();
    for (const auto& x : p)
        a.push_back(to_string(x));
    return a;
}

Json to_json(const Polytope& p)
{
    Json j;
    j["dim"] = p.dim;
    j["vertices"] = points_json(p.vertices);
    Json fs = Json::array();
    for (const auto& h : p.facets)
        fs.push_back({{"normal", to_json(h.normal)}, {"offset", to_string(h.offset)}});
    j["facets"] = fs;
    return j;
}

Json to_json(const AntiBlockingBody& k)
{
    Json j = to_json(k.body);
    j["generators"] = points_json(k.generators);
    return j;
}

Json to_json(const LocallyAntiBlockingBody& k)
{
    Json j = to_json(k.assembled);
    Json ps = Json::array();
    for (const auto& [sigma, piece] : k.pieces)
        ps.push_back({{"sign", sigma}, {"generators", points_json(piece.generators)}});
    j["pieces"] = ps;
    return j;
}

Json to_json(const CayleyBody& c)
{
    Json j = to_json(c.body);
    j["lambda"] = to_string(c.lambda);
    j["parents"] = Json::array({to_json(c.k), to_json(c.t)});
    return j;
}

Json to_json(const PolyhedralCone& c)
{
    return {{"dim", c.dim}, {"generators", points_json(c.generators)}};
}

Json to_json(const CABBody& k)
{
    Json j = to_json(k.body);
    j["cone"] = to_json(k.cone);
    j["w"] = points_json(k.w_rep);
    return j;
}

Json to_json(const Poset& p)
{
    Json rel = Json::array();
    for (auto [a, b] : cover_relations(p))
        rel.push_back({a + 1, b + 1});
    return {{"n", p.n}, {"relations", rel}};
}

Json permutation_json(const Permutation& pi) { return {{"one_line", pi}}; }

Point point_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("point must be an array");
    Point p;
    for (const auto& x : j) {
        if (x.is_string())
            p.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
            p.emplace_back(static_cast<long>(x.get<std::int64_t>()));
        else
            throw ParseError("coordinate must be a rational string or an integer");
    }
    return p;
}

Polytope polytope_from_json(const Json& j)
{
    int n = dim_field(j);
    auto pts = points_from_json(j.at("vertices"));
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != n)
            throw DimensionMismatch("vertex length differs from dim");
    return canonical_hull(pts, n);
}

AntiBlockingBody antiblocking_from_json(const Json& j) { return make_antiblocking(polytope_from_json(j)); }

PolyhedralCone cone_from_json(const Json& j)
{
    int n = dim_field(j);
    auto gens = points_from_json(j.at("generators"));
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != n)
            throw DimensionMismatch("generator length differs from dim");
    return make_cone(gens);
}

Poset poset_from_json(const Json& j)
{
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> rel;
    for (const auto& r : j.at("relations")) {
        int a = r.at(0).get<int>(), b = r.at(1).get<int>();
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError("poset relation out of range");
        rel.emplace_back(a - 1, b - 1);
    }
    return make_poset(n, rel);
}

Permutation permutation_from_json(const Json& j)
{
    Permutation pi = j.at("one_line").get<Permutation>();
    if (!is_permutation(pi))
        throw ParseError("not a permutation in one-line notation");
    return pi;
}

} // namespace abx
