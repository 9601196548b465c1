#include "abx/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace abx {

namespace {

// FNV-1a, so stream names seed identically on every platform.
std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_fraction(Rng& rng, int lo_num, int max_den, int scale)
{
    int q = uniform(rng, 1, max_den);
    return ratio(uniform(rng, lo_num, scale * q), q);
}

std::string make_id(const std::string& prefix, int n, std::size_t i, const std::string& tag = "")
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04zu", i);
    std::string id = prefix + "-n" + std::to_string(n) + "-" + buf;
    return tag.empty() ? id : id + "-" + tag;
}

void require_count(std::size_t count)
{
    if (count < 1)
        throw PreconditionError("count must be at least 1");
}

std::vector<Point> cone_sum(const PolyhedralCone& c)
{
    Point s = zero_point(c.dim);
    for (const auto& g : c.generators)
        s = s + g;
    return {s};
}

} // namespace

Rng instance_rng(std::uint64_t seed, const std::string& stream, int n, std::size_t i)
{
    std::uint64_t h = fnv1a(stream);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
    return Rng(seq);
}

// m ∈ [n, 2n] points in (0,1]^n with denominators at most 16, then the down-closure.
AntiBlockingBody random_antiblocking(int n, Rng& rng)
{
    int m = uniform(rng, n, 2 * n);
    std::vector<Point> pts(m, Point(n));
    for (auto& p : pts)
        for (auto& x : p)
            x = random_fraction(rng, 1, 16, 1);
    return down_closure(pts);
}

Poset random_poset(int n, Rng& rng)
{
    static const int densities[] = {4, 3, 2};
    int d = densities[uniform(rng, 0, 2)];
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (uniform(rng, 1, d) == 1)
                rel.emplace_back(label[a], label[b]);
    return make_poset(n, rel);
}

Permutation random_permutation(int n, Rng& rng)
{
    Permutation pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

// Positive combination of the generators, hence interior.
Point random_point_in_cone(const PolyhedralCone& c, Rng& rng)
{
    Point p = zero_point(c.dim);
    for (const auto& g : c.generators)
        p = p + random_fraction(rng, 1, 8, 1) * g;
    return p;
}

CABBody random_cab(const PolyhedralCone& c, Rng& rng)
{
    int m = uniform(rng, 1, c.dim + 1);
    std::vector<Point> u;
    for (int i = 0; i < m; ++i)
        u.push_back(random_point_in_cone(c, rng));
    return c_down_closure(c, u);
}

std::vector<PolyhedralCone> test_cones(int n)
{
    if (n == 2)
        return {orthant_cone(2), make_cone({{1, 0}, {1, 1}})};
    return {orthant_cone(n)};
}

std::vector<Instance<AntiBlockingBody>> antiblocking_corpus(int n, std::size_t count, std::uint64_t seed)
{
    require_count(count);
    std::vector<Instance<AntiBlockingBody>> out;
    out.push_back({make_id("ab", n, 0, "simplex"), standard_simplex(n)});
    out.push_back({make_id("ab", n, 1, "cube"), unit_cube(n)});
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng = instance_rng(seed, "antiblocking", n, i);
        out.push_back({make_id("ab", n, i + 2), random_antiblocking(n, rng)});
    }
    return out;
}

// Random instances alternate between K1 - K2 and K1 ∨ -K2.
std::vector<Instance<LocallyInstance>> locally_corpus(int n, std::size_t count, std::uint64_t seed)
{
    require_count(count);
    std::vector<Instance<LocallyInstance>> out;
    AntiBlockingBody simplex = standard_simplex(n), cube = unit_cube(n);
    out.push_back({make_id("lab", n, 0, "cross"), {"unconditional", unconditional_closure(simplex), {simplex}}});
    out.push_back({make_id("lab", n, 1, "cube"), {"unconditional", unconditional_closure(cube), {cube}}});
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng = instance_rng(seed, "locally_ab", n, i);
        AntiBlockingBody k1 = random_antiblocking(n, rng), k2 = random_antiblocking(n, rng);
        bool hull = i % 2 == 1;
        Decomposition d = decompose_difference(k1, k2, hull ? Assembly::Hull : Assembly::Sum);
        out.push_back({make_id("lab", n, i + 2), {hull ? "hull" : "difference", std::move(d.body), {k1, k2}}});
    }
    return out;
}

// Per cone: K and L generated by the cone generators, then by their sum, then count random pairs.
std::vector<Instance<ConeInstance>> cone_corpus(int n, std::size_t count, std::uint64_t seed)
{
    require_count(count);
    std::vector<Instance<ConeInstance>> out;
    auto cones = test_cones(n);
    for (std::size_t ci = 0; ci < cones.size(); ++ci) {
        const PolyhedralCone& c = cones[ci];
        PolyhedralCone d = dual(c);
        std::string prefix = "cone" + std::to_string(ci);
        out.push_back({make_id(prefix, n, 0, "simplex"),
                       {c, c_down_closure(c, c.generators), c_down_closure(d, d.generators)}});
        out.push_back({make_id(prefix, n, 1, "cube"), {c, c_down_closure(c, cone_sum(c)), c_down_closure(d, cone_sum(d))}});
        for (std::size_t i = 0; i < count; ++i) {
            Rng rng = instance_rng(seed, "cone" + std::to_string(ci), n, i);
            CABBody k = random_cab(c, rng);
            CABBody l = random_cab(d, rng);
            out.push_back({make_id(prefix, n, i + 2), {c, std::move(k), std::move(l)}});
        }
    }
    return out;
}

std::vector<Instance<Poset>> poset_corpus(int n, std::size_t count, std::uint64_t seed)
{
    require_count(count);
    std::vector<Instance<Poset>> out;
    out.push_back({make_id("poset", n, 0, "chain"), chain_poset(n)});
    out.push_back({make_id("poset", n, 1, "antichain"), antichain_poset(n)});
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng = instance_rng(seed, "poset", n, i);
        out.push_back({make_id("poset", n, i + 2), random_poset(n, rng)});
    }
    return out;
}

std::vector<Instance<Permutation>> permutation_corpus(int n, std::optional<std::size_t> count, std::uint64_t seed)
{
    std::vector<Instance<Permutation>> out;
    if (!count) {
        if (n > 8)
            throw PreconditionError("exhaustive permutation corpus needs n <= 8");
        auto all = all_permutations(n);
        for (std::size_t i = 0; i < all.size(); ++i)
            out.push_back({make_id("perm", n, i), all[i]});
        return out;
    }
    require_count(*count);
    Permutation id(n);
    std::iota(id.begin(), id.end(), 1);
    out.push_back({make_id("perm", n, 0, "identity"), id});
    out.push_back({make_id("perm", n, 1, "reversal"), complement(id)});
    for (std::size_t i = 0; i < *count; ++i) {
        Rng rng = instance_rng(seed, "permutation", n, i);
        out.push_back({make_id("perm", n, i + 2), random_permutation(n, rng)});
    }
    return out;
}

Json gen_corpus(const std::string& kind, int n, std::optional<std::size_t> count, std::uint64_t seed)
{
    if (n < 1 || n > 16)
        throw PreconditionError("n must lie in [1, 16]");
    if (!count && kind != "permutation")
        throw PreconditionError("--count all is only defined for permutations");
    Json out;
    out["kind"] = kind;
    out["n"] = n;
    out["seed"] = seed;
    Json items = Json::array();
    if (kind == "antiblocking") {
        for (const auto& in : antiblocking_corpus(n, *count, seed)) {
            Json j = {{"id", in.id}};
            j.update(to_json(in.value));
            items.push_back(j);
        }
    } else if (kind == "locally_ab") {
        for (const auto& in : locally_corpus(n, *count, seed)) {
            Json j = {{"id", in.id}, {"form", in.value.form}};
            j.update(to_json(in.value.body));
            Json parents = Json::array();
            for (const auto& p : in.value.parents)
                parents.push_back(to_json(p));
            j["parents"] = parents;
            items.push_back(j);
        }
    } else if (kind == "cone") {
        for (const auto& in : cone_corpus(n, *count, seed))
            items.push_back({{"id", in.id}, {"cone", to_json(in.value.cone)}, {"k", to_json(in.value.k)},
                             {"l", to_json(in.value.l)}});
    } else if (kind == "poset") {
        for (const auto& in : poset_corpus(n, *count, seed)) {
            Json j = {{"id", in.id}};
            j.update(to_json(in.value));
            items.push_back(j);
        }
    } else if (kind == "permutation") {
        for (const auto& in : permutation_corpus(n, count, seed)) {
            Json j = {{"id", in.id}};
            j.update(permutation_json(in.value));
            items.push_back(j);
        }
    } else {
        throw PreconditionError("unknown kind: " + kind);
    }
    out["instances"] = items;
    return out;
}

} // namespace abx
