#include "abx/posets.hpp"

#include <algorithm>
#include <bit>

namespace abx {

namespace {

void check_sizes(const DoublePoset& d, int j)
{
    if (d.p.n != d.q.n)
        throw DimensionMismatch("double poset: ground sets differ");
    if (j < 0 || j > d.p.n)
        throw PreconditionError("e_j: j out of range");
}

std::string jlabel(int j) { return "j=" + std::to_string(j); }

} // namespace

Integer e_j_double(const DoublePoset& d, int j)
{
    check_sizes(d, j);
    int n = d.p.n;
    std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    Integer s = 0;
    for (std::uint32_t m = 0;; ++m) {
        if (std::popcount(m) == j)
            s += count_linear_extensions(restrict(d.p, m)) * count_linear_extensions(restrict(d.q, all ^ m));
        if (m == all)
            break;
    }
    return s;
}

Integer e_j_double_brute(const DoublePoset& d, int j)
{
    check_sizes(d, j);
    int n = d.p.n;
    if (n > 8)
        throw PreconditionError("e_j_double_brute: n > 8");
    Integer count = 0;
    for (const auto& tau : all_permutations(n)) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                bool left = tau[a] <= j && tau[b] <= j;
                bool right = tau[a] > j && tau[b] > j;
                if ((left && d.p.less(a, b)) || (right && d.q.less(a, b)))
                    ok = tau[a] < tau[b];
            }
        count += ok;
    }
    return count;
}

std::vector<std::pair<int, int>> inversions(const Permutation& pi)
{
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = i + 1; j < pi.size(); ++j)
            if (pi[i] > pi[j])
                out.emplace_back(pi[i], pi[j]);
    std::sort(out.begin(), out.end());
    return out;
}

bool weak_order_leq(const Permutation& sigma, const Permutation& pi)
{
    auto a = inversions(sigma), b = inversions(pi);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Integer weak_interval_below(const Permutation& pi)
{
    Integer c = 0;
    for (const auto& s : all_permutations(static_cast<int>(pi.size())))
        c += weak_order_leq(s, pi);
    return c;
}

Integer weak_interval_above(const Permutation& pi)
{
    Integer c = 0;
    for (const auto& s : all_permutations(static_cast<int>(pi.size())))
        c += weak_order_leq(pi, s);
    return c;
}

std::vector<Comparison> stanley_check(const Poset& p)
{
    Integer e = count_linear_extensions(p);
    Rational scaled = Rational(factorial(p.n)) * volume(chain_polytope(p).body);
    return {identity("Stanley", "", scaled, Rational(e))};
}

std::vector<Comparison> sidorenko_suite(const Permutation& pi, const Permutation& sigma, int j)
{
    if (pi.size() != sigma.size())
        throw DimensionMismatch("sidorenko_suite: permutation sizes differ");
    int n = static_cast<int>(pi.size());
    Poset p = poset_from_permutation(pi), pbar = poset_from_permutation(complement(pi));
    Poset s = poset_from_permutation(sigma), sbar = poset_from_permutation(complement(sigma));
    Rational nf(factorial(n));
    std::vector<Comparison> out;
    Comparison plain =
        inequality("Thm6.1", "", Rational(count_linear_extensions(p) * count_linear_extensions(pbar)), nf);
    out.push_back(plain);
    bool sp = is_series_parallel(p);
    out.push_back(equivalence("Thm6.1.equality", "", plain.equal, sp));
    out.push_back(equivalence("Thm6.1.hanner", "", is_reduced_hanner(chain_polytope(p).body), sp));
    Integer left = e_j_double({p, s}, j), right = e_j_double({pbar, sbar}, j);
    out.push_back(inequality("Thm6.3", jlabel(j), Rational(left * right), nf * Rational(binomial(n, j))));
    return out;
}

std::vector<Comparison> weak_order_check(const Permutation& pi)
{
    int n = static_cast<int>(pi.size());
    Integer below = weak_interval_below(pi), above = weak_interval_above(pi);
    Poset p = poset_from_permutation(pi), pbar = poset_from_permutation(complement(pi));
    // sigma <= pi exactly when a ↦ sigma^{-1}(pi_a) is a linear extension of P_pi
    int mismatches = 0;
    for (const auto& sigma : all_permutations(n)) {
        Permutation inv(n);
        for (int i = 0; i < n; ++i)
            inv[sigma[i] - 1] = i + 1;
        bool extension = true;
        for (int a = 0; a < n && extension; ++a)
            for (int b = 0; b < n && extension; ++b)
                if (p.less(a, b) && inv[pi[a] - 1] > inv[pi[b] - 1])
                    extension = false;
        mismatches += extension != weak_order_leq(sigma, pi);
    }
    return {identity("WeakOrder", "bijection", mismatches, 0),
            identity("WeakOrder", "below", Rational(below), Rational(count_linear_extensions(p))),
            identity("WeakOrder", "above", Rational(above), Rational(count_linear_extensions(pbar))),
            inequality("WeakOrder", "product", Rational(below * above), Rational(factorial(n)))};
}

std::vector<Comparison> lovasz_check(const Permutation& pi)
{
    Poset p = poset_from_permutation(pi), pbar = poset_from_permutation(complement(pi));
    AntiBlockingBody c = chain_polytope(p), cbar = chain_polytope(pbar);
    AntiBlockingBody st = stable_set_polytope(p);
    AntiBlockingBody dual = abdual(c);
    return {set_identity("ChainStable", "", c.body.vertices.size(), st.body.vertices.size(), c == st),
            set_identity("Lovasz", "", dual.body.vertices.size(), cbar.body.vertices.size(), dual == cbar)};
}

std::vector<Comparison> bridge_check(const DoublePoset& d)
{
    int n = d.p.n;
    check_sizes(d, 0);
    AntiBlockingBody cp = chain_polytope(d.p), cq = chain_polytope(d.q);
    Rational nf(factorial(n));
    std::vector<Comparison> out;
    for (int j = 0; j <= n; ++j)
        out.push_back(identity("Thm6.3.bridge", jlabel(j), nf * mixed_volume_ab(cp, cq, j), Rational(e_j_double(d, j))));
    return out;
}

SequenceReport ej_sequence_props(const DoublePoset& d)
{
    check_sizes(d, 0);
    int n = d.p.n;
    SequenceReport r;
    for (int j = 0; j <= n; ++j)
        r.coefficients.push_back(e_j_double(d, j));
    const auto& e = r.coefficients;
    for (int j = 1; j < n; ++j)
        r.checks.push_back(inequality("LogConcave", jlabel(j), Rational(e[j] * e[j]), Rational(e[j - 1] * e[j + 1])));
    if (d.p == d.q) {
        Integer ep = count_linear_extensions(d.p);
        bool chain = is_chain(d.p), anti = is_antichain(d.p);
        for (int j = 0; j <= n; ++j)
            r.checks.push_back(identity("Palindromic", jlabel(j), Rational(e[j]), Rational(e[n - j])));
        for (int j = 1; j < n; ++j) {
            Rational upper = Rational(binomial(n, j) * ep);
            r.checks.push_back(inequality("EjBounds.lower", jlabel(j), Rational(e[j]), Rational(ep)));
            r.checks.push_back(inequality("EjBounds.upper", jlabel(j), upper, Rational(e[j])));
            r.checks.push_back(equivalence("EjBounds.lower.equality", jlabel(j), e[j] == ep, anti));
            r.checks.push_back(equivalence("EjBounds.upper.equality", jlabel(j), Rational(e[j]) == upper, chain));
        }
    }
    return r;
}

} // namespace abx
