#include <map>
#include <numeric>

#include "abx/polytope.hpp"

namespace abx {

namespace {

Polytope weighted_sum(const std::vector<const Polytope*>& bodies, const std::vector<int>& counts)
{
    Polytope acc;
    bool first = true;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        if (counts[i] == 0)
            continue;
        Polytope term = counts[i] == 1 ? *bodies[i] : scale(*bodies[i], counts[i]);
        acc = first ? term : minkowski_sum(acc, term);
        first = false;
    }
    if (first)
        throw PreconditionError("weighted_sum: no summands");
    return acc;
}

// Vol(sum c_i K_i), reusing one hull per direction through Vol(g X) = g^n Vol(X).
class SumVolumes {
public:
    SumVolumes(std::vector<const Polytope*> bodies, int n) : bodies_(std::move(bodies)), n_(n) {}

    Rational operator()(const std::vector<int>& c)
    {
        int g = 0;
        for (int x : c)
            g = std::gcd(g, x);
        std::vector<int> r(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            r[i] = c[i] / g;
        auto it = cache_.find(r);
        if (it == cache_.end())
            it = cache_.emplace(r, volume(weighted_sum(bodies_, r))).first;
        Integer gn;
        mpz_ui_pow_ui(gn.get_mpz_t(), g, n_);
        return it->second * gn;
    }

private:
    std::vector<const Polytope*> bodies_;
    int n_;
    std::map<std::vector<int>, Rational> cache_;
};

// (1/n!) sum over nonempty S of (-1)^{n-|S|} Vol(sum_{i in S} K_i), where the bodies are
// grouped: body i occurs mult[i] times, so subsets collapse to count vectors.
Rational inclusion_exclusion(SumVolumes& vol, const std::vector<int>& mult, int n)
{
    Rational total = 0;
    std::vector<int> c(mult.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < c.size() && c[i] == mult[i]) {
            c[i] = 0;
            ++i;
        }
        if (i == c.size())
            break;
        ++c[i];
        int size = 0;
        Integer ways = 1;
        for (std::size_t t = 0; t < c.size(); ++t) {
            size += c[t];
            ways *= binomial(mult[t], c[t]);
        }
        Rational term = vol(c) * ways;
        if ((n - size) % 2)
            total -= term;
        else
            total += term;
    }
    return total / Rational(factorial(n));
}

} // namespace

Rational mixed_volume_oracle(const std::vector<Polytope>& bodies)
{
    int n = static_cast<int>(bodies.size());
    if (n == 0)
        throw PreconditionError("mixed_volume_oracle: no bodies");
    for (const auto& b : bodies)
        if (b.dim != n)
            throw DimensionMismatch("mixed_volume_oracle: need n bodies in dimension n");

    std::vector<const Polytope*> distinct;
    std::vector<int> mult;
    for (const auto& b : bodies) {
        std::size_t i = 0;
        while (i < distinct.size() && !(*distinct[i] == b))
            ++i;
        if (i == distinct.size()) {
            distinct.push_back(&b);
            mult.push_back(0);
        }
        ++mult[i];
    }
    SumVolumes vol(distinct, n);
    return inclusion_exclusion(vol, mult, n);
}

std::vector<Rational> mixed_volume_series_oracle(const Polytope& k, const Polytope& t)
{
    int n = k.dim;
    if (t.dim != n)
        throw DimensionMismatch("mixed_volume_series_oracle");
    std::vector<Rational> out;
    if (k == t) {
        Rational v = volume(k);
        out.assign(n + 1, v);
        return out;
    }
    SumVolumes vol({&k, &t}, n);
    for (int j = 0; j <= n; ++j) {
        if (j == 0 || j == n) {
            out.push_back(volume(j == n ? k : t));
            continue;
        }
        out.push_back(inclusion_exclusion(vol, {j, n - j}, n));
    }
    return out;
}

} // namespace abx
