// Command-line front end: counts, enumeration, verification suites, the
// signed-section bijection, slide-graph exports, normalization, sampling and
// counterexample searches. Machine-readable output on stdout, human tables
// on stderr under --verbose. Exit codes: 0 ok, 1 verification failure,
// 2 usage error, 3 search exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubeslides/bijection.hpp"
#include "cubeslides/enumerate.hpp"
#include "cubeslides/json_io.hpp"
#include "cubeslides/parallel.hpp"
#include "cubeslides/random_tree.hpp"
#include "cubeslides/search.hpp"
#include "cubeslides/slide_graph.hpp"
#include "cubeslides/slides.hpp"
#include "cubeslides/verify.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5eed;

using nlohmann::json;
using nlohmann::ordered_json;

int run_count(int n, const std::string& method, bool expensive, int threads) {
    std::vector<std::pair<std::string, mpz_class>> results;
    const bool all = method.empty();
    if (all || method == "formula") results.emplace_back("formula", cubeslides::formula_count(n));
    if ((all && n <= 6) || method == "kirchhoff")
        results.emplace_back("kirchhoff", cubeslides::kirchhoff_count(n));
    if ((all && (n <= 3 || (n == 4 && expensive))) || method == "enumerate")
        results.emplace_back(
            "enumerate",
            mpz_class(static_cast<unsigned long>(cubeslides::count_spanning_trees(
                n, cubeslides::EnumerateOptions{expensive, threads}))));
    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].second != results[0].second) {
            std::cerr << "count mismatch: " << results[0].first << "="
                      << results[0].second.get_str() << " but " << results[i].first
                      << "=" << results[i].second.get_str() << "\n";
            return 1;
        }
    std::cout << results.at(0).second.get_str() << "\n";
    return 0;
}

int run_enumerate(int n, const std::string& format, bool expensive, bool verbose) {
    if (format == "mask" && n != 3)
        throw CLI::ValidationError("--format mask is defined for n=3 only");
    std::size_t count = 0;
    cubeslides::for_each_spanning_tree(
        n,
        [&](const cubeslides::SpanningTree& t) {
            ++count;
            if (format == "mask")
                std::cout << cubeslides::tree_mask3(t) << "\n";
            else
                std::cout << cubeslides::tree_record(t).dump() << "\n";
        },
        cubeslides::EnumerateOptions{expensive, 1});  // serial: stable order
    if (verbose) std::cerr << count << " spanning trees\n";
    return 0;
}

int run_verify(const std::string& suite, int threads, bool verbose) {
    std::vector<cubeslides::SuiteResult> results;
    if (suite == "all")
        results = cubeslides::verify_all(threads);
    else if (suite == "weights")
        results = {cubeslides::verify_weights(threads)};
    else if (suite == "slides")
        results = {cubeslides::verify_slides(threads)};
    else if (suite == "retraction")
        results = {cubeslides::verify_retraction(threads)};
    else if (suite == "bijection")
        results = {cubeslides::verify_bijection(threads)};
    else if (suite == "graph")
        results = {cubeslides::verify_graph(threads)};
    else
        throw CLI::ValidationError("unknown suite: " + suite);

    ordered_json out = ordered_json::array();
    bool all_pass = true;
    for (const cubeslides::SuiteResult& suite_result : results) {
        ordered_json checks = ordered_json::array();
        for (const cubeslides::CheckResult& check : suite_result.checks) {
            all_pass = all_pass && check.pass;
            checks.push_back(ordered_json{{"name", check.name},
                                          {"pass", check.pass},
                                          {"details", check.details}});
            if (verbose)
                std::cerr << (check.pass ? "pass  " : "FAIL  ") << suite_result.suite
                          << "/" << check.name << "  " << check.details << "\n";
        }
        out.push_back(ordered_json{{"suite", suite_result.suite},
                                   {"checks", std::move(checks)}});
    }
    std::cout << out.dump() << "\n";
    return all_pass ? 0 : 1;
}

int run_slide_graph(const std::string& dot_file, const std::string& census_file,
                    int threads, bool verbose) {
    const cubeslides::SlideGraph graph = cubeslides::build_slide_graph(threads);
    const std::vector<cubeslides::ComponentRecord> comps =
        cubeslides::components(graph);
    if (!dot_file.empty()) {
        std::ofstream out(dot_file);
        if (!out) throw CLI::ValidationError("cannot write " + dot_file);
        out << cubeslides::to_dot(graph, comps);
    }
    if (!census_file.empty()) {
        std::ofstream out(census_file);
        if (!out) throw CLI::ValidationError("cannot write " + census_file);
        out << cubeslides::census_csv(comps);
    }
    ordered_json comp_json = ordered_json::array();
    for (const cubeslides::ComponentRecord& c : comps) {
        comp_json.push_back(ordered_json{
            {"id", c.id()},
            {"size", c.size},
            {"signature", c.signature},
            {"q4_certified", c.q4_isomorphic},
            {"upright_count", c.upright_count}});
        if (verbose)
            std::cerr << "component " << c.id() << " size " << c.size << " signature "
                      << cubeslides::signature_str(c.signature) << "\n";
    }
    std::cout << ordered_json{{"nodes", graph.nodes.size()},
                              {"edges", graph.edge_total()},
                              {"components", std::move(comp_json)}}
                     .dump()
              << "\n";
    return 0;
}

int run_bijection(std::optional<std::uint32_t> mask, bool stdin_json, bool inverse) {
    if (inverse) {
        if (!stdin_json)
            throw CLI::ValidationError("--inverse reads a signed section from stdin;"
                                       " pass --stdin-json");
        json j;
        std::cin >> j;
        const cubeslides::SpanningTree tree =
            cubeslides::tree_from_signed_section(cubeslides::signed_section_from_record(j));
        std::cout << cubeslides::tree_record(tree).dump() << "\n";
        return 0;
    }
    cubeslides::SpanningTree tree{};
    if (mask) {
        tree = cubeslides::tree_from_mask3(static_cast<std::uint16_t>(*mask));
    } else if (stdin_json) {
        json j;
        std::cin >> j;
        tree = cubeslides::tree_from_record(j);
    } else {
        throw CLI::ValidationError("need --tree MASK or --stdin-json");
    }
    std::cout << cubeslides::signed_section_record(cubeslides::to_signed_section(tree))
                     .dump()
              << "\n";
    return 0;
}

int run_normalize(int n, const std::string& tree_json, bool verbose) {
    const json j = json::parse(tree_json);
    const cubeslides::SpanningTree tree = cubeslides::tree_from_record(j);
    if (tree.n != n)
        throw CLI::ValidationError("--n disagrees with the tree record");
    const cubeslides::NormalizeResult result = cubeslides::normalize_downward(tree);
    if (verbose) std::cerr << result.slides << " downward slides\n";
    std::cout << cubeslides::tree_record(result.tree).dump() << "\n";
    return 0;
}

int run_sample(int n, std::size_t count, std::uint64_t seed, int threads) {
    const std::vector<cubeslides::SpanningTree> trees =
        cubeslides::sample_batch(n, count, seed, threads);
    for (std::size_t i = 0; i < trees.size(); ++i) {
        ordered_json record = cubeslides::tree_record(trees[i]);
        record["rng"] = cubeslides::kRngName;
        record["seed"] = seed;
        record["index"] = i;
        std::cout << record.dump() << "\n";
    }
    return 0;
}

int run_search(const std::string& kind, int n, std::uint64_t budget,
               std::uint64_t seed, const std::string& fixture, int threads,
               bool verbose) {
    const cubeslides::SearchOptions opts{budget, seed, threads};
    ordered_json record;
    if (kind == "excess") {
        const auto witness = cubeslides::search_excess_slides(n, opts);
        if (!witness) {
            std::cerr << "no excess-slide witness within " << budget << " candidates\n";
            return 3;
        }
        const std::string problem = cubeslides::check_excess_witness(*witness);
        if (!problem.empty()) {
            std::cerr << "witness failed re-validation: " << problem << "\n";
            return 1;
        }
        if (verbose)
            std::cerr << "witness at candidate " << witness->candidate_index << ": "
                      << witness->slidable.size() << " slidable edges vs k_i-1="
                      << witness->direction_edges - 1 << "\n";
        record = cubeslides::witness_record(*witness);
    } else if (kind == "dependent") {
        const auto witness = cubeslides::search_dependent_slides(n, opts);
        if (!witness) {
            std::cerr << "no dependent-slide witness within " << budget
                      << " candidates\n";
            return 3;
        }
        const std::string problem = cubeslides::check_dependent_witness(*witness);
        if (!problem.empty()) {
            std::cerr << "witness failed re-validation: " << problem << "\n";
            return 1;
        }
        if (verbose)
            std::cerr << "witness at candidate " << witness->candidate_index << "\n";
        record = cubeslides::witness_record(*witness);
    } else {
        throw CLI::ValidationError("unknown search kind: " + kind);
    }
    if (!fixture.empty()) {
        std::ofstream out(fixture);
        if (!out) throw CLI::ValidationError("cannot write " + fixture);
        out << record.dump(2) << "\n";
    }
    std::cout << record.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge slides on spanning trees of the hypercube"};
    app.require_subcommand(1);
    app.fallthrough();  // --threads/--verbose may follow the subcommand
    int threads = 0;
    bool verbose = false;
    app.add_option("--threads", threads, "max worker threads (default: CUBESLIDES_THREADS or all cores)");
    app.add_flag("--verbose", verbose, "human-readable progress on stderr");

    int n = 3;
    std::string method, format = "jsonl", suite = "all";
    std::string dot_file, census_file, tree_json, kind, fixture;
    bool expensive = false, stdin_json = false, inverse = false;
    std::optional<std::uint32_t> mask;
    std::uint64_t seed = kDefaultSeed, budget = 1'000'000;
    std::size_t count = 1;

    CLI::App* cmd_count = app.add_subcommand("count", "spanning-tree counts");
    cmd_count->add_option("--n", n, "cube dimension")->required();
    cmd_count->add_option("--method", method, "formula|kirchhoff|enumerate");
    cmd_count->add_flag("--expensive", expensive, "allow the Q_4 enumeration");

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "list all spanning trees");
    cmd_enum->add_option("--n", n, "cube dimension")->required();
    cmd_enum->add_option("--format", format, "jsonl|mask");
    cmd_enum->add_flag("--expensive", expensive, "allow the Q_4 enumeration");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run machine checks");
    cmd_verify->add_option("--n", n, "cube dimension (must be 3)")->required();
    cmd_verify->add_option("--suite", suite,
                           "weights|slides|retraction|bijection|graph|all");

    CLI::App* cmd_graph = app.add_subcommand("slide-graph", "component census");
    cmd_graph->add_option("--n", n, "cube dimension (must be 3)")->required();
    cmd_graph->add_option("--dot", dot_file, "write DOT here");
    cmd_graph->add_option("--census", census_file, "write census CSV here");

    CLI::App* cmd_bij = app.add_subcommand("bijection", "signed-section bijection");
    cmd_bij->add_option("--tree", mask, "Q_3 tree mask");
    cmd_bij->add_flag("--stdin-json", stdin_json, "read JSON from stdin");
    cmd_bij->add_flag("--inverse", inverse, "signed section to tree");

    CLI::App* cmd_norm = app.add_subcommand("normalize", "downward normalization");
    cmd_norm->add_option("--n", n, "cube dimension")->required();
    cmd_norm->add_option("--tree", tree_json, "tree record JSON")->required();

    CLI::App* cmd_sample = app.add_subcommand("sample", "uniform random trees");
    cmd_sample->add_option("--n", n, "cube dimension")->required();
    cmd_sample->add_option("--count", count, "number of samples");
    cmd_sample->add_option("--seed", seed, "random seed");

    CLI::App* cmd_search = app.add_subcommand("search", "counterexample search");
    cmd_search->add_option("--kind", kind, "excess|dependent")->required();
    cmd_search->add_option("--n", n, "4 for excess, 5 for dependent")->required();
    cmd_search->add_option("--budget", budget, "candidate trees to examine");
    cmd_search->add_option("--seed", seed, "random seed");
    cmd_search->add_option("--fixture", fixture, "persist the witness here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_count->parsed()) return run_count(n, method, expensive, threads);
        if (cmd_enum->parsed()) return run_enumerate(n, format, expensive, verbose);
        if (cmd_verify->parsed()) {
            if (n != 3) throw CLI::ValidationError("verify suites are for n=3");
            return run_verify(suite, threads, verbose);
        }
        if (cmd_graph->parsed()) {
            if (n != 3) throw CLI::ValidationError("the slide graph census is for n=3");
            return run_slide_graph(dot_file, census_file, threads, verbose);
        }
        if (cmd_bij->parsed()) return run_bijection(mask, stdin_json, inverse);
        if (cmd_norm->parsed()) return run_normalize(n, tree_json, verbose);
        if (cmd_sample->parsed()) return run_sample(n, count, seed, threads);
        if (cmd_search->parsed())
            return run_search(kind, n, budget, seed, fixture, threads, verbose);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
