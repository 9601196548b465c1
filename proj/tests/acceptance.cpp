// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any line fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "abx/cli.hpp"

using namespace abx;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr double kStanleySeconds = 120;
constexpr double kTotalSeconds = 600;
constexpr std::size_t kPointsPerCone = 1000;

struct Records {
    std::vector<CheckRecord> all;
    std::set<std::string> instances;

    void add(const SuiteResult& r)
    {
        for (const auto& rec : r.records) {
            all.push_back(rec);
            instances.insert(rec.instance_id);
        }
    }

    std::vector<const CheckRecord*> tagged(const std::string& tag) const
    {
        std::vector<const CheckRecord*> out;
        for (const auto& r : all)
            if (r.theorem == tag)
                out.push_back(&r);
        return out;
    }
};

SuiteResult run(const std::string& suite, int n, std::optional<std::size_t> count, std::optional<int> j = {})
{
    SuiteConfig c;
    c.suite = suite;
    c.n = n;
    c.count = count;
    c.seed = kSeed;
    c.j = j;
    return run_suite(c);
}

// Collects per-criterion findings; the criterion passes when nothing was flagged.
struct Verdict {
    std::vector<std::string> problems;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok)
            problems.push_back(what);
    }

    // Every record with this tag passes; with exact = true the slack is also zero.
    void tag(const Records& rs, const std::string& t, bool exact = false)
    {
        auto sel = rs.tagged(t);
        if (sel.empty()) {
            problems.push_back(t + " missing");
            return;
        }
        std::size_t bad = 0, nonzero = 0;
        const CheckRecord* worst = nullptr;
        for (const auto* r : sel) {
            if (!r->pass) {
                ++bad;
                if (!worst || r->slack < worst->slack)
                    worst = r;
            }
            if (exact && r->slack != 0)
                ++nonzero;
        }
        std::ostringstream os;
        os << t << " " << sel.size() - bad << "/" << sel.size();
        if (worst)
            os << " worst " << worst->instance_id << " lhs=" << to_string(worst->lhs) << " rhs=" << to_string(worst->rhs);
        notes.push_back(os.str());
        if (bad)
            problems.push_back(std::to_string(bad) + " " + t + " failures");
        if (nonzero)
            problems.push_back(std::to_string(nonzero) + " " + t + " nonzero slacks");
    }

    void print(int k, const std::string& title) const
    {
        std::cout << (problems.empty() ? "PASS" : "FAIL") << " criterion " << k << " " << title << ":";
        for (const auto& n : notes)
            std::cout << " [" << n << "]";
        for (const auto& p : problems)
            std::cout << " !" << p;
        std::cout << std::endl;
    }

    bool ok() const { return problems.empty(); }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string id_for(const std::string& prefix, int n, int i, const std::string& suffix)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s-n%d-%04d-%s", prefix.c_str(), n, i, suffix.c_str());
    return buf;
}

std::set<std::string> equality_ids(const Records& rs, const std::string& tag)
{
    std::set<std::string> out;
    for (const auto* r : rs.tagged(tag))
        if (r->equality)
            out.insert(r->instance_id);
    return out;
}

Verdict stanley()
{
    Verdict v;
    auto t0 = Clock::now();
    Records rs;
    for (int n = 3; n <= 6; ++n)
        rs.add(run("stanley-volume", n, 48));
    double secs = seconds_since(t0);
    v.require(rs.instances.size() == 200, "expected 200 posets, got " + std::to_string(rs.instances.size()));
    v.tag(rs, "Stanley", true);
    v.notes.push_back(std::to_string(secs) + "s");
    v.require(secs < kStanleySeconds, "runtime over budget");
    return v;
}

Verdict godbersen()
{
    Verdict v;
    for (int n = 2; n <= 4; ++n) {
        Records rs;
        rs.add(run("godbersen", n, 50));
        v.require(rs.instances.size() == 52, "instance count");
        for (const char* t : {"Thm1.2", "Godbersen.lower", "Prop3.3", "Prop3.5"})
            v.tag(rs, t);
        v.require(equality_ids(rs, "Thm1.2") == std::set<std::string>{id_for("ab", n, 0, "simplex")},
                  "Thm1.2 equality set at n=" + std::to_string(n));
        // boxes are the bodies equal to the down-closure of their top corner
        std::set<std::string> boxes;
        for (const auto& in : antiblocking_corpus(n, 50, kSeed)) {
            Point top(n);
            for (const auto& x : in.value.body.vertices)
                for (int i = 0; i < n; ++i)
                    top[i] = std::max(top[i], x[i]);
            if (down_closure({top}) == in.value)
                boxes.insert(in.id);
        }
        v.require(boxes.count(id_for("ab", n, 1, "cube")) == 1, "cube instance is not a box");
        v.require(equality_ids(rs, "Godbersen.lower") == boxes, "lower-bound equality set at n=" + std::to_string(n));
    }
    return v;
}

Verdict decomposition()
{
    Verdict v;
    Records rs;
    for (int n = 2; n <= 4; ++n)
        rs.add(run("decomposition", n, 32));
    v.require(rs.instances.size() >= 100, "fewer than 100 pairs");
    for (const char* t : {"Lem2.3", "Cor2.5", "Lem2.3.mixed"})
        v.tag(rs, t, true);
    return v;
}

Verdict saint_raymond()
{
    Verdict v;
    Records rs;
    for (int n = 2; n <= 4; ++n) {
        SuiteResult plain = run("saint-raymond", n, 50);
        Records one;
        one.add(plain);
        auto eq = equality_ids(one, "Thm4.1");
        v.require(eq.count(id_for("ab", n, 0, "simplex")) && eq.count(id_for("ab", n, 1, "cube")),
                  "reduced Hanner boundary instances not at equality, n=" + std::to_string(n));
        rs.add(plain);
        rs.add(run("mixed-sr", n, 50));
    }
    for (const char* t : {"Thm4.1", "Thm4.1.equality", "Thm1.3"})
        v.tag(rs, t);
    return v;
}

Verdict mahler()
{
    Verdict v;
    Records rs;
    std::map<std::string, std::size_t> forms;
    for (int n = 2; n <= 4; ++n) {
        SuiteResult r = run("mahler-locally-ab", n, 100);
        std::set<std::string> seen;
        for (const auto& rec : r.records)
            if (rec.theorem == "Cor4.2" && seen.insert(rec.instance_id).second)
                ++forms[rec.label];
        rs.add(r);
        auto eq = r.equality_cases;
        v.require(std::find(eq.begin(), eq.end(), id_for("lab", n, 1, "cube")) != eq.end(),
                  "cube instance not at equality, n=" + std::to_string(n));
    }
    for (const char* f : {"difference", "hull"})
        v.require(forms[f] >= 150, std::string("fewer than 50 bodies per dimension of form ") + f);
    for (const char* t : {"Lem2.4", "Cor4.2", "Cor4.2.equality"})
        v.tag(rs, t);
    return v;
}

Verdict cbodies()
{
    Verdict v;
    Records pairs, polar;
    pairs.add(run("cbody-volume", 2, 11));
    pairs.add(run("cbody-volume", 3, 10));
    v.require(pairs.instances.size() == 25, "expected 25 pairs");
    v.tag(pairs, "Lem4.6", true);
    for (int n = 2; n <= 3; ++n) {
        polar.add(run("cbody-polar", n, n == 2 ? 11 : 10));
        pairs.add(run("shadow", n, n == 2 ? 11 : 10));
    }
    polar.add(run("cbody-polar", 1, 3));
    polar.add(run("cbody-polar", 4, 1));
    v.tag(polar, "Thm4.9");
    v.tag(pairs, "Cor4.11", true);
    for (const char* t : {"Thm1.4.identity", "Thm1.4.chain", "Thm1.4"})
        v.tag(polar, t);
    return v;
}

Verdict kleitman()
{
    Verdict v;
    Records rk, rs;
    for (int n = 2; n <= 4; ++n)
        rk.add(run("kleitman", n, 32));
    v.require(rk.instances.size() >= 100, "fewer than 100 pairs");
    for (const char* t : {"Thm1.6", "Thm5.1", "Thm5.2"})
        v.tag(rk, t);
    rs.add(run("steiner", 2, 11));
    rs.add(run("steiner", 3, 10));
    v.require(rs.instances.size() == 25, "expected 25 Steiner pairs");
    for (const char* t : {"Lem5.3", "Lem5.3.volume", "Thm1.6.symmetral"})
        v.tag(rs, t);
    return v;
}

Verdict cones()
{
    Verdict v;
    Records rs;
    rs.add(run("cone-dissect", 2, 10));
    rs.add(run("cone-dissect", 3, 10));
    for (const char* t : {"Thm7.7", "Thm7.7.mixed"})
        v.tag(rs, t, true);
    for (const char* t : {"Thm7.7.hull", "Cor7.8", "Lem7.6", "Lem7.4", "Cor7.5"})
        v.tag(rs, t);
    // cone key "coneK-nN"
    auto cone_of = [](const std::string& id) { return id.substr(0, id.find('-', id.find('-') + 1)); };
    std::map<std::string, std::size_t> points, pairs;
    for (const auto* r : rs.tagged("Cor7.5"))
        if (r->instance_id.ends_with("-points"))
            ++points[cone_of(r->instance_id)];
    v.require(points.size() == 3, "expected point batches for 3 cones, got " + std::to_string(points.size()));
    for (const auto& [c, k] : points)
        v.require(k >= kPointsPerCone, c + " has " + std::to_string(k) + " points");
    for (const auto& id : rs.instances)
        if (!id.ends_with("-points") && !id.ends_with("-simplex") && !id.ends_with("-cube"))
            ++pairs[cone_of(id)];
    v.require(pairs.size() == 3, "random pairs missing for some cone");
    for (const auto& [c, k] : pairs)
        v.require(k >= 10, c + " has " + std::to_string(k) + " random pairs");
    return v;
}

Verdict posets(Clock::time_point start)
{
    Verdict v;
    Records lc, sid, mix, bridge;
    for (int n = 4; n <= 7; ++n)
        lc.add(run("logconcave", n, 23));
    v.require(lc.instances.size() == 100, "expected 100 double posets");
    for (const char* t : {"LogConcave", "Palindromic", "Ej.oracle"})
        v.tag(lc, t);
    sid.add(run("sidorenko", 5, std::nullopt));
    v.require(sid.instances.size() == 120, "sidorenko not exhaustive over S_5");
    for (const char* t : {"Thm6.1", "Thm6.1.equality", "Thm6.1.hanner"})
        v.tag(sid, t);
    mix.add(run("mixed-sidorenko", 4, std::nullopt));
    v.require(mix.tagged("Thm6.3").size() == 24 * 24 * 5, "mixed Sidorenko not exhaustive over S_4 x S_4 x j");
    v.tag(mix, "Thm6.3");
    for (int n = 3; n <= 5; ++n)
        bridge.add(run("bridge-ej-mixedvol", n, 10));
    v.tag(bridge, "Thm6.3.bridge", true);
    double secs = seconds_since(start);
    v.notes.push_back("all criteria " + std::to_string(secs) + "s");
    v.require(secs < kTotalSeconds, "total runtime over budget");
    return v;
}

} // namespace

int main()
{
    auto start = Clock::now();
    bool ok = true;
    auto report = [&](int k, const std::string& title, auto&& f) {
        Verdict v;
        try {
            v = f();
        } catch (const std::exception& e) {
            v.problems.push_back(std::string("error: ") + e.what());
        }
        v.print(k, title);
        ok = ok && v.ok();
    };
    report(1, "Stanley identity", stanley);
    report(2, "Godbersen", godbersen);
    report(3, "decomposition exactness", decomposition);
    report(4, "Saint-Raymond and mixed Saint-Raymond", saint_raymond);
    report(5, "Mahler for locally anti-blocking bodies", mahler);
    report(6, "C-body identities and bounds", cbodies);
    report(7, "reverse Kleitman and Steiner", kleitman);
    report(8, "cone dissection", cones);
    report(9, "poset suites", [&] { return posets(start); });
    return ok ? 0 : 1;
}
