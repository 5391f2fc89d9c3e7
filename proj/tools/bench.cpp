// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "cubeslides/enumerate.hpp"
#include "cubeslides/laurent.hpp"
#include "cubeslides/parallel.hpp"
#include "cubeslides/random_tree.hpp"
#include "cubeslides/search.hpp"
#include "cubeslides/slide_graph.hpp"
#include "cubeslides/slides.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(int reps, Fn&& fn) {
    const auto start = Clock::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void report(const std::string& name, double serial_ms, double parallel_ms,
            bool equal) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
                name.c_str(), serial_ms, parallel_ms, serial_ms / parallel_ms,
                equal ? "outputs equal" : "OUTPUTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel comparison"};
    int reps = 5;
    int threads = 0;
    std::size_t samples = 2000;
    std::uint64_t search_budget = 20000;
    app.add_option("--reps", reps, "repetitions per kernel");
    app.add_option("--threads", threads, "parallel thread count");
    app.add_option("--samples", samples, "random trees per sampling kernel");
    app.add_option("--search-budget", search_budget, "candidates per search kernel");
    CLI11_PARSE(app, argc, argv);
    const int nthreads = cubeslides::resolve_threads(threads);
    std::printf("threads: %d\n", nthreads);

    {
        cubeslides::SlideGraph serial_graph, parallel_graph;
        const double s = time_ms(reps, [&] { serial_graph = cubeslides::build_slide_graph_serial(); });
        const double p = time_ms(reps, [&] { parallel_graph = cubeslides::build_slide_graph(nthreads); });
        const bool equal = serial_graph.nodes == parallel_graph.nodes &&
                           serial_graph.adj == parallel_graph.adj;
        report("slide-graph build", s, p, equal);
    }

    {
        const std::vector<cubeslides::SpanningTree> trees =
            cubeslides::enumerate_spanning_trees(3);
        cubeslides::Laurent serial_sum, parallel_sum;
        const double s = time_ms(reps, [&] { serial_sum = cubeslides::weight_sum_serial(trees); });
        const double p = time_ms(reps, [&] { parallel_sum = cubeslides::weight_sum(trees, nthreads); });
        report("weight sum over Q_3", s, p, serial_sum == parallel_sum);
    }

    {
        std::vector<cubeslides::SpanningTree> serial_batch, parallel_batch;
        const double s = time_ms(
            reps, [&] { serial_batch = cubeslides::sample_batch_serial(5, samples, 7); });
        const double p = time_ms(
            reps, [&] { parallel_batch = cubeslides::sample_batch(5, samples, 7, nthreads); });
        report("Q_5 tree sampling", s, p, serial_batch == parallel_batch);
    }

    {
        // slide-move sweep over sampled Q_4 trees, the inner loop of the searches
        const std::vector<cubeslides::SpanningTree> batch =
            cubeslides::sample_batch(4, samples, 11, nthreads);
        std::size_t serial_total = 0, parallel_total = 0;
        const double s = time_ms(reps, [&] {
            serial_total = 0;
            for (const cubeslides::SpanningTree& t : batch)
                serial_total += cubeslides::all_slide_moves(t).size();
        });
        const double p = time_ms(reps, [&] {
            parallel_total = 0;
#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 32) \
    reduction(+ : parallel_total)
            for (std::size_t i = 0; i < batch.size(); ++i)
                parallel_total += cubeslides::all_slide_moves(batch[i]).size();
        });
        report("Q_4 slide-move sweep", s, p, serial_total == parallel_total);
    }

    {
        const cubeslides::SearchOptions opts{search_budget, 400, nthreads};
        std::optional<cubeslides::ExcessWitness> serial_w, parallel_w;
        const double s = time_ms(1, [&] { serial_w = cubeslides::search_excess_slides_serial(4, opts); });
        const double p = time_ms(1, [&] { parallel_w = cubeslides::search_excess_slides(4, opts); });
        const bool equal =
            serial_w.has_value() == parallel_w.has_value() &&
            (!serial_w || serial_w->candidate_index == parallel_w->candidate_index);
        report("excess-slide search", s, p, equal);
    }

    return 0;
}
