#include "abx/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>

namespace abx {

namespace {

struct Task {
    std::string id;
    std::function<std::vector<Comparison>()> run;
    std::function<Json()> witness;
};

using Tasks = std::vector<Task>;

const std::vector<Rational> kLambdas = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
constexpr std::size_t kConePoints = 1000;

std::vector<Comparison> keep(std::vector<Comparison> cs, const std::vector<std::string>& tags)
{
    std::vector<Comparison> out;
    for (auto& c : cs)
        if (std::find(tags.begin(), tags.end(), c.tag) != tags.end())
            out.push_back(std::move(c));
    return out;
}

std::vector<Comparison> prefixed(std::vector<Comparison> cs, const std::string& prefix)
{
    for (auto& c : cs)
        c.label = c.label.empty() ? prefix : prefix + "," + c.label;
    return cs;
}

void append(std::vector<Comparison>& out, std::vector<Comparison> more)
{
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::vector<int> j_values(const SuiteConfig& cfg, int lo, int hi)
{
    if (cfg.j)
        return {*cfg.j};
    std::vector<int> js;
    for (int j = lo; j <= hi; ++j)
        js.push_back(j);
    return js;
}

std::string jlabel(int j) { return "j=" + std::to_string(j); }

std::size_t need_count(const SuiteConfig& cfg)
{
    if (!cfg.count)
        throw PreconditionError("--count all is only defined for permutation suites");
    return *cfg.count;
}

using AbCorpus = std::shared_ptr<const std::vector<Instance<AntiBlockingBody>>>;

AbCorpus ab_corpus(const SuiteConfig& cfg)
{
    return std::make_shared<const std::vector<Instance<AntiBlockingBody>>>(
        antiblocking_corpus(cfg.n, need_count(cfg), cfg.seed));
}

// Instance i is paired with instance i + 1, cyclically.
template <class F>
Tasks ab_pair_tasks(const SuiteConfig& cfg, F f)
{
    AbCorpus c = ab_corpus(cfg);
    Tasks ts;
    std::size_t m = c->size();
    for (std::size_t i = 0; i < m; ++i) {
        const auto* k = &(*c)[i].value;
        const auto* t = &(*c)[(i + 1) % m].value;
        ts.push_back({(*c)[i].id, [c, k, t, f] { return f(*k, *t); },
                      [c, k, t] { return Json{{"k", to_json(*k)}, {"t", to_json(*t)}}; }});
    }
    return ts;
}

template <class F>
Tasks ab_tasks(const SuiteConfig& cfg, F f)
{
    AbCorpus c = ab_corpus(cfg);
    Tasks ts;
    for (const auto& in : *c) {
        const auto* k = &in.value;
        ts.push_back({in.id, [c, k, f] { return f(*k); }, [c, k] { return to_json(*k); }});
    }
    return ts;
}

Tasks godbersen_tasks(const SuiteConfig& cfg)
{
    return ab_tasks(cfg, [](const AntiBlockingBody& k) { return godbersen_check(k).checks; });
}

Tasks saint_raymond_tasks(const SuiteConfig& cfg)
{
    return ab_tasks(cfg, [](const AntiBlockingBody& k) {
        return keep(saint_raymond_products(k, k, 0), {"Thm4.1", "Thm4.1.equality"});
    });
}

Tasks mixed_sr_tasks(const SuiteConfig& cfg)
{
    AbCorpus c = ab_corpus(cfg);
    std::vector<int> js = j_values(cfg, 0, cfg.n);
    int n = cfg.n;
    Tasks ts;
    std::size_t m = c->size();
    for (std::size_t i = 0; i < m; ++i) {
        auto body = [c, m](std::size_t a) -> const AntiBlockingBody& { return (*c)[a % m].value; };
        ts.push_back({(*c)[i].id,
                      [=] {
                          std::vector<Comparison> out;
                          for (int j : js) {
                              append(out, keep(saint_raymond_products(body(i), body(i + 1), j), {"Thm1.3"}));
                              // n distinct bodies through the inclusion-exclusion oracle
                              if (n <= 3) {
                                  std::vector<AntiBlockingBody> ks, tt;
                                  for (int a = 0; a < j; ++a)
                                      ks.push_back(body(i + a));
                                  for (int b = 0; b < n - j; ++b)
                                      tt.push_back(body(i + j + b));
                                  Comparison g = mixed_saint_raymond_general(ks, tt);
                                  g.label = jlabel(j);
                                  out.push_back(g);
                              }
                          }
                          return out;
                      },
                      [=] {
                          Json w = Json::array();
                          for (int a = 0; a <= n; ++a)
                              w.push_back(to_json(body(i + a)));
                          return Json{{"bodies", w}};
                      }});
    }
    return ts;
}

Tasks mahler_tasks(const SuiteConfig& cfg)
{
    auto c = std::make_shared<const std::vector<Instance<LocallyInstance>>>(locally_corpus(cfg.n, need_count(cfg), cfg.seed));
    Tasks ts;
    for (const auto& in : *c) {
        const auto* li = &in.value;
        ts.push_back({in.id, [c, li] { return prefixed(locally_ab_polar(li->body).checks, li->form); },
                      [c, li] {
                          Json j = to_json(li->body);
                          j["form"] = li->form;
                          return j;
                      }});
    }
    return ts;
}

// Vol(K - T) and Vol(K ∨ -T) from the coordinate parts, and the mixed volumes against the oracle.
Tasks decomposition_tasks(const SuiteConfig& cfg)
{
    std::vector<int> js = j_values(cfg, 0, cfg.n);
    return ab_pair_tasks(cfg, [js](const AntiBlockingBody& k, const AntiBlockingBody& t) {
        std::vector<Comparison> out;
        for (auto [mode, tag] : {std::pair{Assembly::Sum, "Lem2.3"}, std::pair{Assembly::Hull, "Cor2.5"}}) {
            Decomposition d = decompose_difference(k, t, mode);
            Rational total = 0, direct = 0;
            for (const auto& p : d.pieces) {
                total += p.formula_volume;
                direct += volume(p.piece);
            }
            out.push_back(identity(tag, "volume", volume(d.body.assembled), total));
            out.push_back(identity(tag, "pieces", direct, total));
        }
        std::vector<Rational> oracle = mixed_volume_series_oracle(k.body, negate(t.body));
        for (int j : js)
            out.push_back(identity("Lem2.3.mixed", jlabel(j), mixed_volume_ab(k, t, j), oracle[j]));
        return out;
    });
}

Tasks cbody_polar_tasks(const SuiteConfig& cfg)
{
    return ab_pair_tasks(cfg, [](const AntiBlockingBody& k, const AntiBlockingBody& t) {
        std::vector<Comparison> out = prefixed(cbody_polar(k, t).checks, "pair");
        append(out, prefixed(cbody_polar(k, k, kLambdas).checks, "self"));
        append(out, mahler_bounds_for_hull(k));
        return out;
    });
}

Tasks cbody_volume_tasks(const SuiteConfig& cfg)
{
    return ab_pair_tasks(cfg, [](const AntiBlockingBody& k, const AntiBlockingBody& t) {
        return cbody_volume_identity(k, t);
    });
}

Tasks shadow_tasks(const SuiteConfig& cfg)
{
    return ab_pair_tasks(cfg, [](const AntiBlockingBody& k, const AntiBlockingBody& t) {
        return shadow_invariance(k, t, kLambdas);
    });
}

Tasks steiner_tasks(const SuiteConfig& cfg)
{
    return ab_pair_tasks(cfg, [](const AntiBlockingBody& k, const AntiBlockingBody& t) {
        std::vector<Comparison> out;
        for (int axis = 0; axis < k.dim(); ++axis)
            append(out, prefixed(steiner_monotonicity(k, t, axis), "axis=" + std::to_string(axis)));
        out.push_back(iterated_symmetral_check(k));
        return out;
    });
}

Tasks kleitman_tasks(const SuiteConfig& cfg)
{
    int n = cfg.n;
    return ab_pair_tasks(cfg, [n](const AntiBlockingBody& k, const AntiBlockingBody& t) {
        std::vector<Comparison> out = reverse_kleitman_check(k, t);
        if (n <= 3)
            append(out, order_convex_check(k, t));
        return out;
    });
}

Point random_point(int n, Rng& rng)
{
    Point p(n);
    for (auto& x : p) {
        int q = std::uniform_int_distribution<int>(1, 8)(rng);
        x = ratio(std::uniform_int_distribution<int>(-2 * q, 2 * q)(rng), q);
    }
    return p;
}

// A point of the hat body, by rejection from a box around the body.
std::optional<Point> random_hat_point(const CABBody& k, Rng& rng)
{
    Rational r = 1;
    for (const auto& v : k.body.vertices)
        for (const auto& x : v)
            r = std::max(r, Rational(abs(x)));
    for (int attempt = 0; attempt < 200; ++attempt) {
        Point p = random_point(k.cone.dim, rng);
        for (auto& x : p)
            x *= r;
        if (in_hat(k, p))
            return p;
    }
    return std::nullopt;
}

Tasks cone_tasks(const SuiteConfig& cfg)
{
    auto c = std::make_shared<const std::vector<Instance<ConeInstance>>>(cone_corpus(cfg.n, need_count(cfg), cfg.seed));
    std::uint64_t seed = cfg.seed;
    Tasks ts;
    for (std::size_t i = 0; i < c->size(); ++i) {
        const auto* in = &(*c)[i];
        auto witness = [c, in] {
            return Json{{"cone", to_json(in->value.cone)}, {"k", to_json(in->value.k)}, {"l", to_json(in->value.l)}};
        };
        ts.push_back({in->id,
                      [c, in, seed, i] {
                          const ConeInstance& ci = in->value;
                          std::vector<Comparison> out = prefixed(cone_dissect(ci.k, ci.l, ConeAssembly::Sum).checks, "sum");
                          append(out, prefixed(cone_dissect(ci.k, ci.l, ConeAssembly::Hull).checks, "hull"));
                          if (auto cor = difference_as_hat_intersection(ci.k, ci.l))
                              out.push_back(*cor);
                          Rng rng = instance_rng(seed, "hat-points", ci.cone.dim, i);
                          for (int s = 0; s < 3; ++s)
                              if (auto p = random_hat_point(ci.k, rng))
                                  out.push_back(nearest_point_agreement(ci.k, *p));
                          return out;
                      },
                      witness});
        bool last_of_cone = i + 1 == c->size() || !((*c)[i + 1].value.cone == in->value.cone);
        if (last_of_cone) {
            std::string id = in->id.substr(0, in->id.find("-n")) + "-n" + std::to_string(cfg.n) + "-points";
            ts.push_back({id,
                          [c, in, seed, id] {
                              const PolyhedralCone& cone = in->value.cone;
                              Rng rng = instance_rng(seed, id, cone.dim, 0);
                              std::vector<Comparison> out;
                              for (std::size_t s = 0; s < kConePoints; ++s)
                                  append(out, cone_decomposition_check(cone, random_point(cone.dim, rng)));
                              return out;
                          },
                          [c, in] { return to_json(in->value.cone); }});
        }
    }
    return ts;
}

using PosetCorpus = std::shared_ptr<const std::vector<Instance<Poset>>>;

PosetCorpus posets(const SuiteConfig& cfg)
{
    if (cfg.n > 20)
        throw PreconditionError("poset suites need n <= 20");
    return std::make_shared<const std::vector<Instance<Poset>>>(poset_corpus(cfg.n, need_count(cfg), cfg.seed));
}

Tasks stanley_tasks(const SuiteConfig& cfg)
{
    PosetCorpus c = posets(cfg);
    Tasks ts;
    for (const auto& in : *c) {
        const Poset* p = &in.value;
        ts.push_back({in.id, [c, p] { return stanley_check(*p); }, [c, p] { return to_json(*p); }});
    }
    return ts;
}

template <class F>
Tasks double_poset_tasks(const SuiteConfig& cfg, F f)
{
    PosetCorpus c = posets(cfg);
    Tasks ts;
    std::size_t m = c->size();
    for (std::size_t i = 0; i < m; ++i) {
        const Poset* p = &(*c)[i].value;
        const Poset* q = &(*c)[(i + 1) % m].value;
        ts.push_back({(*c)[i].id, [c, p, q, f] { return f(*p, *q); },
                      [c, p, q] { return Json{{"p", to_json(*p)}, {"q", to_json(*q)}}; }});
    }
    return ts;
}

Tasks logconcave_tasks(const SuiteConfig& cfg)
{
    int n = cfg.n;
    return double_poset_tasks(cfg, [n](const Poset& p, const Poset& q) {
        std::vector<Comparison> out;
        for (auto [d, name] : {std::pair{DoublePoset{p, q}, "pair"}, std::pair{DoublePoset{p, p}, "self"}}) {
            append(out, prefixed(ej_sequence_props(d).checks, name));
            if (n <= 8)
                for (int j = 0; j <= n; ++j)
                    out.push_back(identity("Ej.oracle", std::string(name) + "," + jlabel(j), Rational(e_j_double(d, j)),
                                           Rational(e_j_double_brute(d, j))));
        }
        return out;
    });
}

Tasks bridge_tasks(const SuiteConfig& cfg)
{
    return double_poset_tasks(cfg, [](const Poset& p, const Poset& q) { return bridge_check({p, q}); });
}

using PermCorpus = std::shared_ptr<const std::vector<Instance<Permutation>>>;

PermCorpus perms(const SuiteConfig& cfg)
{
    return std::make_shared<const std::vector<Instance<Permutation>>>(permutation_corpus(cfg.n, cfg.count, cfg.seed));
}

Tasks sidorenko_tasks(const SuiteConfig& cfg)
{
    PermCorpus c = perms(cfg);
    int n = cfg.n;
    Tasks ts;
    for (const auto& in : *c) {
        const Permutation* pi = &in.value;
        ts.push_back({in.id,
                      [c, pi, n] {
                          std::vector<Comparison> out =
                              keep(sidorenko_suite(*pi, *pi, 0), {"Thm6.1", "Thm6.1.equality", "Thm6.1.hanner"});
                          if (n <= 6)
                              append(out, weak_order_check(*pi));
                          append(out, lovasz_check(*pi));
                          return out;
                      },
                      [c, pi] { return permutation_json(*pi); }});
    }
    return ts;
}

// All ordered pairs for --count all, else consecutive pairs of the permutation corpus.
Tasks mixed_sidorenko_tasks(const SuiteConfig& cfg)
{
    PermCorpus c = perms(cfg);
    std::vector<int> js = j_values(cfg, 0, cfg.n);
    Tasks ts;
    std::size_t m = c->size();
    auto add = [&](std::string id, std::size_t a, std::size_t b) {
        const Permutation* pi = &(*c)[a].value;
        const Permutation* sigma = &(*c)[b].value;
        ts.push_back({std::move(id),
                      [c, pi, sigma, js] {
                          std::vector<Comparison> out;
                          for (int j : js)
                              append(out, keep(sidorenko_suite(*pi, *sigma, j), {"Thm6.3"}));
                          return out;
                      },
                      [c, pi, sigma] { return Json{{"pi", permutation_json(*pi)}, {"sigma", permutation_json(*sigma)}}; }});
    };
    if (!cfg.count) {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                add((*c)[a].id + "/" + (*c)[b].id.substr((*c)[b].id.rfind('-') + 1), a, b);
    } else {
        for (std::size_t a = 0; a < m; ++a)
            add((*c)[a].id, a, (a + 1) % m);
    }
    return ts;
}

struct SuiteDef {
    SuiteInfo info;
    Tasks (*build)(const SuiteConfig&);
};

const std::vector<SuiteDef>& suite_defs()
{
    static const std::vector<SuiteDef> defs = {
        {{"godbersen", "antiblocking", {"Thm1.2", "Godbersen.lower", "Prop3.3", "Prop3.5"}, "Thm1.2"}, godbersen_tasks},
        {{"saint-raymond", "antiblocking", {"Thm4.1", "Thm4.1.equality"}, "Thm4.1"}, saint_raymond_tasks},
        {{"mixed-sr", "antiblocking", {"Thm1.3", "Thm1.3.general"}, "Thm1.3"}, mixed_sr_tasks},
        {{"mahler-locally-ab", "locally_ab", {"Lem2.4", "Cor4.2", "Cor4.2.equality"}, "Cor4.2"}, mahler_tasks},
        {{"decomposition", "antiblocking", {"Lem2.3", "Cor2.5", "Lem2.3.mixed"}, ""}, decomposition_tasks},
        {{"cbody-polar", "antiblocking",
          {"Thm4.9", "Thm1.4.identity", "Thm1.4.chain", "Thm1.4", "Thm1.4.shadow", "Prop1.5", "Prop4.12"}, "Thm1.4"},
         cbody_polar_tasks},
        {{"cbody-volume", "antiblocking", {"Lem4.6"}, ""}, cbody_volume_tasks},
        {{"shadow", "antiblocking", {"Cor4.11"}, ""}, shadow_tasks},
        {{"steiner", "antiblocking", {"Lem5.3", "Lem5.3.volume", "Thm1.6.symmetral"}, "Lem5.3"}, steiner_tasks},
        {{"kleitman", "antiblocking", {"Thm1.6", "Thm5.1", "Thm5.2"}, "Thm5.1"}, kleitman_tasks},
        {{"cone-dissect", "cone", {"Thm7.7", "Thm7.7.mixed", "Thm7.7.hull", "Cor7.8", "Lem7.6", "Cor7.5", "Lem7.4"}, ""},
         cone_tasks},
        {{"stanley-volume", "poset", {"Stanley"}, ""}, stanley_tasks},
        {{"sidorenko", "permutation",
          {"Thm6.1", "Thm6.1.equality", "Thm6.1.hanner", "WeakOrder", "ChainStable", "Lovasz"}, "Thm6.1"},
         sidorenko_tasks},
        {{"mixed-sidorenko", "permutation", {"Thm6.3"}, "Thm6.3"}, mixed_sidorenko_tasks},
        {{"logconcave", "poset",
          {"LogConcave", "Palindromic", "EjBounds.lower", "EjBounds.upper", "EjBounds.lower.equality",
           "EjBounds.upper.equality", "Ej.oracle"},
          "LogConcave"},
         logconcave_tasks},
        {{"bridge-ej-mixedvol", "poset", {"Thm6.3.bridge"}, ""}, bridge_tasks},
    };
    return defs;
}

const SuiteDef& find_suite(const std::string& name)
{
    for (const auto& d : suite_defs())
        if (d.info.name == name)
            return d;
    throw PreconditionError("unknown suite: " + name);
}

std::vector<std::vector<CheckRecord>> run_tasks(const Tasks& ts, unsigned threads)
{
    std::vector<std::vector<CheckRecord>> out(ts.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= ts.size())
                return;
            try {
                Json witness;
                bool have_witness = false;
                for (const auto& c : ts[i].run()) {
                    if (!c.holds() && !have_witness) {
                        witness = ts[i].witness();
                        have_witness = true;
                    }
                    out[i].push_back(make_record(ts[i].id, c, witness));
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next = ts.size();
            }
        }
    };
    unsigned k = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ts.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < k; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

} // namespace

const std::vector<SuiteInfo>& suite_registry()
{
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const auto& d : suite_defs())
            v.push_back(d.info);
        return v;
    }();
    return infos;
}

const SuiteInfo& suite_info(const std::string& name) { return find_suite(name).info; }

unsigned thread_budget()
{
    if (const char* env = std::getenv("ABX_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw PreconditionError("ABX_THREADS must be a positive integer");
        return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SuiteResult run_suite(const SuiteConfig& cfg)
{
    const SuiteDef& def = find_suite(cfg.suite);
    if (cfg.n < 1 || cfg.n > 16)
        throw PreconditionError("n must lie in [1, 16]");
    if (cfg.j && (*cfg.j < 0 || *cfg.j > cfg.n))
        throw PreconditionError("j must lie in [0, n]");
    Tasks ts = def.build(cfg);
    std::stable_sort(ts.begin(), ts.end(), [](const Task& a, const Task& b) { return a.id < b.id; });
    auto per_instance = run_tasks(ts, thread_budget());

    SuiteResult r;
    r.suite = cfg.suite;
    r.instances = ts.size();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        bool listed = false;
        for (auto& rec : per_instance[i]) {
            if (!rec.pass)
                ++r.failures;
            if (rec.kind == Relation::Inequality) {
                if (!r.min_slack || rec.slack < *r.min_slack)
                    r.min_slack = rec.slack;
                if (!listed && rec.equality && rec.theorem == def.info.equality_tag) {
                    r.equality_cases.push_back(rec.instance_id);
                    listed = true;
                }
            }
            r.records.push_back(std::move(rec));
        }
    }
    return r;
}

} // namespace abx
