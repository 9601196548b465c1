#include "doctest.h"

#include <cstdlib>

#include "abx/cli.hpp"
#include "oracles.hpp"

using namespace abx;
using testing_util::pts;
using testing_util::q;

namespace {

SuiteConfig config(const std::string& suite, int n, std::optional<std::size_t> count, std::uint64_t seed = 1)
{
    SuiteConfig c;
    c.suite = suite;
    c.n = n;
    c.count = count;
    c.seed = seed;
    return c;
}

struct ThreadsEnv {
    std::optional<std::string> saved;
    explicit ThreadsEnv(const char* value)
    {
        if (const char* old = std::getenv("ABX_THREADS"))
            saved = old;
        setenv("ABX_THREADS", value, 1);
    }
    ~ThreadsEnv()
    {
        if (saved)
            setenv("ABX_THREADS", saved->c_str(), 1);
        else
            unsetenv("ABX_THREADS");
    }
};

SuiteResult run_with_threads(const SuiteConfig& c, const char* threads)
{
    ThreadsEnv env(threads);
    return run_suite(c);
}

} // namespace

TEST_CASE("corpora are deterministic and prefix-stable")
{
    Json a = gen_corpus("antiblocking", 3, 20, 7), b = gen_corpus("antiblocking", 3, 20, 7);
    CHECK(a.dump() == b.dump());
    CHECK(a["instances"].size() == 22);
    CHECK(a["instances"][0]["id"] == "ab-n3-0000-simplex");
    CHECK(a["instances"][1]["id"] == "ab-n3-0001-cube");
    CHECK(a["instances"][2]["id"] == "ab-n3-0002");
    Json shorter = gen_corpus("antiblocking", 3, 5, 7);
    for (std::size_t i = 0; i < shorter["instances"].size(); ++i)
        CHECK(shorter["instances"][i] == a["instances"][i]);
    CHECK(gen_corpus("antiblocking", 3, 20, 8).dump() != a.dump());

    CHECK(gen_corpus("permutation", 4, std::nullopt, 0)["instances"].size() == 24);
    CHECK_THROWS_AS(gen_corpus("antiblocking", 3, std::nullopt, 0), PreconditionError);
    CHECK_THROWS_AS(gen_corpus("antiblocking", 0, 3, 0), PreconditionError);
    CHECK_THROWS_AS(gen_corpus("antiblocking", 17, 3, 0), PreconditionError);
    CHECK_THROWS_AS(gen_corpus("lattice", 3, 3, 0), PreconditionError);
    for (const char* kind : {"locally_ab", "cone", "poset"})
        CHECK(gen_corpus(kind, 2, 3, 1)["instances"].size() >= 3);
}

TEST_CASE("every generated body is anti-blocking and round-trips")
{
    auto corpus = antiblocking_corpus(3, 10, 5);
    Json j = gen_corpus("antiblocking", 3, 10, 5);
    REQUIRE(j["instances"].size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(is_antiblocking(corpus[i].value.body));
        CHECK(antiblocking_from_json(j["instances"][i]) == corpus[i].value);
        CHECK(antiblocking_from_json(to_json(corpus[i].value)) == corpus[i].value);
    }
    for (const auto& c : test_cones(2))
        CHECK(cone_from_json(to_json(c)) == c);
    Poset v = make_poset(3, {{0, 2}, {1, 2}});
    CHECK(poset_from_json(to_json(v)) == v);
    CHECK(to_json(v)["relations"] == Json::parse("[[1,3],[2,3]]"));
    CHECK(permutation_from_json(permutation_json({2, 4, 1, 3})) == Permutation{2, 4, 1, 3});
    CHECK(point_from_json(to_json(Point{q(1, 3), -2})) == Point{q(1, 3), -2});
}

TEST_CASE("malformed JSON is rejected")
{
    CHECK_THROWS_AS(point_from_json(Json::parse("[\"1/0\"]")), ParseError);
    CHECK_THROWS_AS(point_from_json(Json::parse("{}")), ParseError);
    CHECK_THROWS_AS(permutation_from_json(Json::parse("{\"one_line\":[1,1]}")), Error);
    CHECK_THROWS_AS(poset_from_json(Json::parse("{\"n\":2,\"relations\":[[1,2],[2,1]]}")), Error);
    CHECK_THROWS_AS(poset_from_json(Json::parse("{\"n\":2,\"relations\":[[0,2]]}")), Error);
    CHECK_THROWS_AS(antiblocking_from_json(Json::parse(
                        "{\"dim\":2,\"vertices\":[[\"0\",\"0\"],[\"1\",\"1\"],[\"1\",\"0\"]],\"facets\":[]}")),
                    Error);
}

TEST_CASE("records and renderers")
{
    Comparison c = inequality("Thm1.2", "j=1", 3, 2);
    CheckRecord r = make_record("x", c, Json{{"k", 1}});
    CHECK(r.pass);
    CHECK(r.slack == 1);
    CHECK_FALSE(r.witness.has_value());
    Json j = to_json(r);
    CHECK(j["slack"] == "1");
    CHECK(j["case"] == "j=1");
    CHECK_FALSE(j.contains("witness"));

    CheckRecord bad = make_record("y,z", inequality("T", "", 1, 2), Json{{"k", "a\"b"}});
    CHECK_FALSE(bad.pass);
    CHECK(bad.slack == -1);
    REQUIRE(bad.witness.has_value());
    std::string line = to_csv(bad);
    CHECK(line.rfind("\"y,z\",T,,inequality,1,2,-1,false,false,", 0) == 0);
    CHECK(line.find("\"{\"\"k\"\":\"\"a\\\"\"b\"\"}\"") != std::string::npos);
    CHECK(csv_header() == "instance_id,theorem,case,relation,lhs,rhs,slack,equality,pass,witness");
}

TEST_CASE("suite runs")
{
    SuiteResult s = run_suite(config("stanley-volume", 5, 100));
    CHECK(s.instances == 102);
    CHECK(s.records.size() == 102);
    CHECK(s.exit_code() == 0);
    for (const auto& r : s.records)
        CHECK(r.slack == 0);

    SuiteResult g = run_suite(config("godbersen", 3, 50));
    CHECK(g.exit_code() == 0);
    CHECK(g.equality_cases == std::vector<std::string>{"ab-n3-0000-simplex"});
    REQUIRE(g.min_slack.has_value());
    CHECK(*g.min_slack == 0);
    CHECK(summary_line(g).rfind("suite=godbersen instances=52 ", 0) == 0);

    SuiteConfig m = config("mixed-sidorenko", 4, std::nullopt);
    m.j = 2;
    SuiteResult ms = run_suite(m);
    CHECK(ms.records.size() == 576);
    CHECK(ms.exit_code() == 0);

    CHECK_THROWS_AS(run_suite(config("no-such-suite", 2, 1)), PreconditionError);
    CHECK_THROWS_AS(run_suite(config("godbersen", 2, std::nullopt)), PreconditionError);
    SuiteConfig badj = config("mixed-sr", 2, 1);
    badj.j = 3;
    CHECK_THROWS_AS(run_suite(badj), PreconditionError);
}

TEST_CASE("reports do not depend on the thread count")
{
    SuiteConfig c = config("mixed-sr", 3, 8, 11);
    std::string one = render(run_with_threads(c, "1"), "json");
    std::string four = render(run_with_threads(c, "4"), "json");
    CHECK(one == four);
    CHECK(render(run_with_threads(c, "1"), "csv") == render(run_with_threads(c, "3"), "csv"));
    CHECK_THROWS_AS(run_with_threads(c, "0"), PreconditionError);
    CHECK_THROWS_AS(run_with_threads(c, "two"), PreconditionError);
}

TEST_CASE("a failing suite reports witnesses and exit code 2")
{
    SuiteResult r = run_suite(config("cbody-polar", 2, 1));
    CHECK(r.exit_code() == 2);
    CHECK(r.failures > 0);
    bool seen = false;
    for (const auto& rec : r.records)
        if (!rec.pass) {
            CHECK(rec.theorem == "Thm1.4");
            CHECK(rec.witness.has_value());
            seen = true;
        }
    CHECK(seen);
    CHECK_THROWS_AS(render(r, "xml"), PreconditionError);
}
