#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "abx/antiblocking.hpp"

namespace abx {

// Strict order on {0..n-1}; pred[b] has bit a set iff a ≺ b.
struct Poset {
    int n = 0;
    std::vector<std::uint32_t> pred;

    bool less(int a, int b) const { return pred[b] >> a & 1u; }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    bool operator==(const Poset&) const = default;
};

// Values 1..n in one-line notation.
using Permutation = std::vector<int>;

struct DoublePoset {
    Poset p;
    Poset q;
};

// Transitive closure of the given pairs (a ≺ b, 0-based); throws on cycles.
Poset make_poset(int n, const std::vector<std::pair<int, int>>& relations);
Poset chain_poset(int n);
Poset antichain_poset(int n);
Poset restrict(const Poset& p, std::uint32_t subset); // re-indexed order-preservingly
std::vector<std::pair<int, int>> cover_relations(const Poset& p);

bool is_permutation(const Permutation& pi);
Permutation complement(const Permutation& pi); // n + 1 - pi_a
Poset poset_from_permutation(const Permutation& pi);
std::vector<Permutation> all_permutations(int n);

Integer count_linear_extensions(const Poset& p);            // down-set dynamic program, n <= 20
Integer count_linear_extensions_brute(const Poset& p);      // over S_n, n <= 8

std::vector<std::uint32_t> maximal_chains(const Poset& p);
std::vector<std::uint32_t> maximal_antichains(const Poset& p);
// {x >= 0 : sum over each chain <= 1}, from the maximal chains.
AntiBlockingBody chain_polytope(const Poset& p);
// conv(1_S : S stable in the comparability graph).
AntiBlockingBody stable_set_polytope(const Poset& p);

bool is_chain(const Poset& p);
bool is_antichain(const Poset& p);
bool is_series_parallel(const Poset& p); // recursive series/parallel decomposition
bool is_n_free(const Poset& p);          // no induced N

Integer e_j_double(const DoublePoset& d, int j);       // sum over |J| = j of e(P|_J) e(Q|_{J^c})
Integer e_j_double_brute(const DoublePoset& d, int j); // permutation count, n <= 8

// Inversion set as value pairs (pi_i, pi_j), i < j, pi_i > pi_j.
std::vector<std::pair<int, int>> inversions(const Permutation& pi);
bool weak_order_leq(const Permutation& sigma, const Permutation& pi);
Integer weak_interval_below(const Permutation& pi); // #[0, pi]
Integer weak_interval_above(const Permutation& pi); // #[pi, 1]

std::vector<Comparison> stanley_check(const Poset& p);
std::vector<Comparison> sidorenko_suite(const Permutation& pi, const Permutation& sigma, int j);
std::vector<Comparison> weak_order_check(const Permutation& pi);
std::vector<Comparison> lovasz_check(const Permutation& pi);
std::vector<Comparison> bridge_check(const DoublePoset& d);

struct SequenceReport {
    std::vector<Integer> coefficients; // e_0 .. e_n
    std::vector<Comparison> checks;
};
SequenceReport ej_sequence_props(const DoublePoset& d);

} // namespace abx
