#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "abx/cli.hpp"

namespace {

std::optional<std::size_t> parse_count(const std::string& s)
{
    if (s == "all")
        return std::nullopt;
    std::size_t pos = 0;
    long long v = -1;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
    }
    if (pos != s.size() || v < 1)
        throw abx::PreconditionError("--count must be a positive integer or \"all\"");
    return static_cast<std::size_t>(v);
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw abx::Error("cannot open " + path + " for writing");
    f << text;
    if (!f)
        throw abx::Error("write to " + path + " failed");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification harness for anti-blocking body inequalities"};
    app.require_subcommand(1);

    std::string kind, count = "1", out, suite, format = "json";
    int n = 0;
    std::uint64_t seed = 0;
    std::optional<int> j;

    auto* gen = app.add_subcommand("gen", "write a seeded instance corpus as JSON");
    gen->add_option("kind", kind, "antiblocking|locally_ab|cone|poset|permutation")
        ->required()
        ->check(CLI::IsMember({"antiblocking", "locally_ab", "cone", "poset", "permutation"}));
    gen->add_option("--n", n, "dimension or ground-set size")->required();
    gen->add_option("--count", count, "random instances, or \"all\"")->required();
    gen->add_option("--seed", seed, "64-bit seed");
    gen->add_option("--out", out, "output path (stdout when omitted)");

    auto* check = app.add_subcommand("check", "run a verification suite");
    std::vector<std::string> names;
    for (const auto& s : abx::suite_registry())
        names.push_back(s.name);
    check->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(names));
    check->add_option("--n", n, "dimension or ground-set size")->required();
    check->add_option("--count", count, "random instances, or \"all\"")->required();
    check->add_option("--seed", seed, "64-bit seed");
    check->add_option("--j", j, "restrict mixed suites to one j");
    check->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    check->add_option("--out", out, "report path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*gen) {
            abx::Json corpus = abx::gen_corpus(kind, n, parse_count(count), seed);
            emit(corpus.dump(1) + "\n", out);
            return 0;
        }
        abx::SuiteConfig cfg{suite, n, parse_count(count), seed, j, format, out};
        abx::SuiteResult r = abx::run_suite(cfg);
        emit(abx::render(r, format), out);
        // the summary goes wherever the report does not
        (out.empty() || out == "-" ? std::cerr : std::cout) << abx::summary_line(r) << "\n";
        return r.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "abx: " << e.what() << "\n";
        return 1;
    }
}
