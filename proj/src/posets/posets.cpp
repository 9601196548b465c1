#include "abx/posets.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace abx {

namespace {

std::uint32_t full(int n) { return n == 32 ? ~0u : (1u << n) - 1; }

// Connected components of the graph on `mask` with the given adjacency.
std::vector<std::uint32_t> components(std::uint32_t mask, const auto& adjacent)
{
    std::vector<std::uint32_t> out;
    while (mask) {
        std::uint32_t comp = mask & -mask, frontier = comp;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            for (std::uint32_t rest = mask & ~comp; rest; rest &= rest - 1) {
                int w = std::countr_zero(rest);
                if (adjacent(v, w)) {
                    comp |= 1u << w;
                    frontier |= 1u << w;
                }
            }
        }
        out.push_back(comp);
        mask &= ~comp;
    }
    return out;
}

bool series_parallel(const Poset& p, std::uint32_t mask)
{
    if (std::popcount(mask) <= 1)
        return true;
    auto parts = components(mask, [&](int a, int b) { return p.comparable(a, b); });
    if (parts.size() == 1)
        parts = components(mask, [&](int a, int b) { return !p.comparable(a, b); });
    if (parts.size() == 1)
        return false;
    for (auto c : parts)
        if (!series_parallel(p, c))
            return false;
    return true;
}

} // namespace

Poset make_poset(int n, const std::vector<std::pair<int, int>>& relations)
{
    if (n < 0 || n > 32)
        throw PreconditionError("make_poset: ground set size must be in [0, 32]");
    Poset p{n, std::vector<std::uint32_t>(n, 0)};
    for (auto [a, b] : relations) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw PreconditionError("make_poset: element out of range");
        p.pred[b] |= 1u << a;
    }
    // Warshall closure on the predecessor masks
    for (int k = 0; k < n; ++k)
        for (int b = 0; b < n; ++b)
            if (p.pred[b] >> k & 1u)
                p.pred[b] |= p.pred[k];
    for (int a = 0; a < n; ++a)
        if (p.less(a, a))
            throw PreconditionError("make_poset: relations contain a cycle");
    return p;
}

Poset chain_poset(int n)
{
    std::vector<std::pair<int, int>> r;
    for (int i = 0; i + 1 < n; ++i)
        r.emplace_back(i, i + 1);
    return make_poset(n, r);
}

Poset antichain_poset(int n) { return make_poset(n, {}); }

Poset restrict(const Poset& p, std::uint32_t subset)
{
    std::vector<int> idx;
    for (int a = 0; a < p.n; ++a)
        if (subset >> a & 1u)
            idx.push_back(a);
    Poset q{static_cast<int>(idx.size()), std::vector<std::uint32_t>(idx.size(), 0)};
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            if (p.less(idx[i], idx[j]))
                q.pred[j] |= 1u << i;
    return q;
}

std::vector<std::pair<int, int>> cover_relations(const Poset& p)
{
    std::vector<std::pair<int, int>> out;
    for (int b = 0; b < p.n; ++b)
        for (int a = 0; a < p.n; ++a) {
            if (!p.less(a, b))
                continue;
            bool cover = true;
            for (int c = 0; c < p.n && cover; ++c)
                cover = !(p.less(a, c) && p.less(c, b));
            if (cover)
                out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_permutation(const Permutation& pi)
{
    std::vector<int> s = pi;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

Permutation complement(const Permutation& pi)
{
    Permutation out(pi.size());
    int n = static_cast<int>(pi.size());
    for (int i = 0; i < n; ++i)
        out[i] = n + 1 - pi[i];
    return out;
}

Poset poset_from_permutation(const Permutation& pi)
{
    if (!is_permutation(pi))
        throw PreconditionError("poset_from_permutation: not a permutation");
    int n = static_cast<int>(pi.size());
    std::vector<std::pair<int, int>> r;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (pi[a] < pi[b])
                r.emplace_back(a, b);
    return make_poset(n, r);
}

std::vector<Permutation> all_permutations(int n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Integer count_linear_extensions(const Poset& p)
{
    if (p.n > 20)
        throw PreconditionError("count_linear_extensions: n > 20");
    std::vector<std::uint64_t> ways(std::size_t{1} << p.n, 0);
    ways[0] = 1;
    for (std::uint32_t s = 0; s < ways.size(); ++s) {
        if (!ways[s])
            continue;
        for (int x = 0; x < p.n; ++x)
            if (!(s >> x & 1u) && (p.pred[x] & ~s) == 0)
                ways[s | 1u << x] += ways[s];
    }
    Integer e;
    mpz_import(e.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &ways.back());
    return e;
}

Integer count_linear_extensions_brute(const Poset& p)
{
    if (p.n > 8)
        throw PreconditionError("count_linear_extensions_brute: n > 8");
    Integer count = 0;
    for (const auto& l : all_permutations(p.n)) {
        bool ok = true;
        for (int b = 0; b < p.n && ok; ++b)
            for (int a = 0; a < p.n && ok; ++a)
                if (p.less(a, b) && l[a] > l[b])
                    ok = false;
        count += ok;
    }
    return count;
}

std::vector<std::uint32_t> maximal_chains(const Poset& p)
{
    auto covers = cover_relations(p);
    std::vector<std::uint32_t> up(p.n, 0);
    for (auto [a, b] : covers)
        up[a] |= 1u << b;
    std::vector<std::uint32_t> out;
    auto walk = [&](auto& self, int v, std::uint32_t chain) -> void {
        chain |= 1u << v;
        if (!up[v]) {
            out.push_back(chain);
            return;
        }
        for (std::uint32_t m = up[v]; m; m &= m - 1)
            self(self, std::countr_zero(m), chain);
    };
    for (int v = 0; v < p.n; ++v)
        if (!p.pred[v])
            walk(walk, v, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> maximal_antichains(const Poset& p)
{
    if (p.n > 16)
        throw PreconditionError("maximal_antichains: n > 16");
    auto independent = [&](std::uint32_t s) {
        for (std::uint32_t m = s; m; m &= m - 1) {
            int a = std::countr_zero(m);
            std::uint32_t succ = 0;
            for (int b = 0; b < p.n; ++b)
                if (p.less(a, b))
                    succ |= 1u << b;
            if ((p.pred[a] | succ) & s)
                return false;
        }
        return true;
    };
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 1; s <= full(p.n); ++s) {
        if (!independent(s))
            continue;
        bool maximal = true;
        for (int x = 0; x < p.n && maximal; ++x)
            if (!(s >> x & 1u) && independent(s | 1u << x))
                maximal = false;
        if (maximal)
            out.push_back(s);
        if (s == full(p.n))
            break;
    }
    return out;
}

AntiBlockingBody chain_polytope(const Poset& p)
{
    int n = p.n;
    std::vector<Halfspace> hs;
    for (int i = 0; i < n; ++i)
        hs.push_back({-unit_vector(n, i), 0});
    for (auto c : maximal_chains(p)) {
        Point a = zero_point(n);
        for (int i = 0; i < n; ++i)
            if (c >> i & 1u)
                a[i] = 1;
        hs.push_back({a, 1});
    }
    Polytope body = halfspace_intersection(n, hs, Point(n, Rational(1, n + 1)));
    return {body, maximal_points(body.vertices)};
}

AntiBlockingBody stable_set_polytope(const Poset& p)
{
    std::vector<Point> u;
    for (auto s : maximal_antichains(p)) {
        Point x = zero_point(p.n);
        for (int i = 0; i < p.n; ++i)
            if (s >> i & 1u)
                x[i] = 1;
        u.push_back(std::move(x));
    }
    return down_closure(u);
}

bool is_chain(const Poset& p)
{
    for (int a = 0; a < p.n; ++a)
        for (int b = a + 1; b < p.n; ++b)
            if (!p.comparable(a, b))
                return false;
    return true;
}

bool is_antichain(const Poset& p)
{
    for (auto m : p.pred)
        if (m)
            return false;
    return true;
}

bool is_series_parallel(const Poset& p) { return series_parallel(p, full(p.n)); }

bool is_n_free(const Poset& p)
{
    int n = p.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (!p.less(a, c) || !p.less(b, c) || !p.less(b, d))
                        continue;
                    if (!p.comparable(a, b) && !p.comparable(c, d) && !p.comparable(a, d))
                        return false;
                }
    return true;
}

} // namespace abx
