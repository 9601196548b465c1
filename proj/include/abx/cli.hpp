#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "abx/antiblocking.hpp"
#include "abx/cbodies.hpp"
#include "abx/coneab.hpp"
#include "abx/posets.hpp"

namespace abx {

using Json = nlohmann::ordered_json;

// Serialization. Rationals travel as strings; poset elements and permutation values are 1-based.
Json to_json(const Point& p);
Json to_json(const Polytope& p);
Json to_json(const AntiBlockingBody& k);
Json to_json(const LocallyAntiBlockingBody& k);
Json to_json(const CayleyBody& c);
Json to_json(const PolyhedralCone& c);
Json to_json(const CABBody& k);
Json to_json(const Poset& p);
Json permutation_json(const Permutation& pi);

Point point_from_json(const Json& j);
Polytope polytope_from_json(const Json& j);
AntiBlockingBody antiblocking_from_json(const Json& j);
PolyhedralCone cone_from_json(const Json& j);
Poset poset_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);

// Seeded corpora. Instance i draws from its own stream, so corpora are prefix-stable.
using Rng = std::mt19937_64;
Rng instance_rng(std::uint64_t seed, const std::string& stream, int n, std::size_t i);

AntiBlockingBody random_antiblocking(int n, Rng& rng);
Poset random_poset(int n, Rng& rng);
Permutation random_permutation(int n, Rng& rng);
Point random_point_in_cone(const PolyhedralCone& c, Rng& rng);
CABBody random_cab(const PolyhedralCone& c, Rng& rng);

template <class T>
struct Instance {
    std::string id;
    T value;
};

struct LocallyInstance {
    std::string form; // "difference", "hull" or "unconditional"
    LocallyAntiBlockingBody body;
    std::vector<AntiBlockingBody> parents;
};

struct ConeInstance {
    PolyhedralCone cone;
    CABBody k; // over C
    CABBody l; // over C^∨
};

// Boundary instances first, then count random ones; count = nullopt means exhaustive where that exists.
std::vector<Instance<AntiBlockingBody>> antiblocking_corpus(int n, std::size_t count, std::uint64_t seed);
std::vector<Instance<LocallyInstance>> locally_corpus(int n, std::size_t count, std::uint64_t seed);
std::vector<Instance<ConeInstance>> cone_corpus(int n, std::size_t count, std::uint64_t seed);
std::vector<Instance<Poset>> poset_corpus(int n, std::size_t count, std::uint64_t seed);
std::vector<Instance<Permutation>> permutation_corpus(int n, std::optional<std::size_t> count, std::uint64_t seed);
// The cones used for a given dimension: R^2_+ and cone{(1,0),(1,1)} in the plane, R^n_+ otherwise.
std::vector<PolyhedralCone> test_cones(int n);

Json gen_corpus(const std::string& kind, int n, std::optional<std::size_t> count, std::uint64_t seed);

// Reports.
struct CheckRecord {
    std::string instance_id;
    std::string theorem;
    std::string label;
    Relation kind = Relation::Inequality;
    Rational lhs, rhs, slack;
    bool equality = false;
    bool pass = true;
    std::optional<Json> witness;
};

CheckRecord make_record(const std::string& id, const Comparison& c, const Json& witness);
Json to_json(const CheckRecord& r);
std::string csv_header();
std::string to_csv(const CheckRecord& r);

struct SuiteConfig {
    std::string suite;
    int n = 0;
    std::optional<std::size_t> count; // nullopt for "all"
    std::uint64_t seed = 0;
    std::optional<int> j;
    std::string format = "json";
    std::string output;
};

struct SuiteResult {
    std::string suite;
    std::size_t instances = 0;
    std::vector<CheckRecord> records; // by instance, then in check order
    std::optional<Rational> min_slack;  // over inequality records
    std::vector<std::string> equality_cases;
    std::size_t failures = 0;

    int exit_code() const { return failures ? 2 : 0; }
};

struct SuiteInfo {
    std::string name;
    std::string corpus;                 // generator kind
    std::vector<std::string> theorems;  // tags the suite emits
    std::string equality_tag;           // tag whose equality instances are listed
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo& suite_info(const std::string& name); // throws PreconditionError on unknown names
// ABX_THREADS if set, else the hardware concurrency.
unsigned thread_budget();
SuiteResult run_suite(const SuiteConfig& cfg);
std::string summary_line(const SuiteResult& r);
std::string render(const SuiteResult& r, const std::string& format);

} // namespace abx
