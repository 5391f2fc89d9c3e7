#include "cubeslides/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cubeslides/parallel.hpp"
#include "cubeslides/random_tree.hpp"

namespace cubeslides {
namespace {

// trees examined per random start: the start itself plus a short slide walk
constexpr std::uint64_t kWalkLength = 8;

template <typename Witness, typename Evaluate>
std::optional<Witness> run_search(int n, const SearchOptions& opts, int threads,
                                  Evaluate&& evaluate) {
    const std::uint64_t episodes = (opts.budget + kWalkLength - 1) / kWalkLength;
    const std::uint64_t block = threads == 1 ? 1024 : 256 * static_cast<std::uint64_t>(threads);
    std::optional<Witness> best;
    for (std::uint64_t base = 0; base < episodes && !best; base += block) {
        const std::uint64_t end = std::min(episodes, base + block);
        std::vector<std::optional<Witness>> hits(end - base);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 16) if (threads > 1)
        for (std::uint64_t e = base; e < end; ++e) {
            SpanningTree cur = random_spanning_tree(n, opts.seed, 2 * e);
            SplitMix64 walk_rng = split_stream(opts.seed, 2 * e + 1);
            for (std::uint64_t step = 0; step < kWalkLength; ++step) {
                const std::uint64_t candidate = e * kWalkLength + step;
                if (candidate >= opts.budget) break;
                std::optional<Witness> w = evaluate(cur, candidate);
                if (w) {
                    hits[e - base] = std::move(w);
                    break;
                }
                const std::vector<SlideMove> moves = all_slide_moves(cur);
                const SlideMove& m =
                    moves[bounded(walk_rng, static_cast<std::uint32_t>(moves.size()))];
                cur = slide(cur, m.edge, m.dir);
            }
        }
        for (auto& h : hits)
            if (h && (!best || h->candidate_index < best->candidate_index))
                best = std::move(h);
    }
    return best;
}

std::optional<ExcessWitness> evaluate_excess(const SpanningTree& tree,
                                             std::uint64_t candidate) {
    const std::vector<int> k = direction_monomial(tree);
    for (int i = 1; i <= tree.n; ++i) {
        std::vector<SlideMove> moves = slidable_edges(tree, i);
        if (moves.size() > static_cast<std::size_t>(k[static_cast<std::size_t>(i - 1)] - 1)) {
            return ExcessWitness{tree, i, k[static_cast<std::size_t>(i - 1)],
                                 std::move(moves), candidate};
        }
    }
    return std::nullopt;
}

std::optional<DependentWitness> evaluate_dependent(const SpanningTree& tree,
                                                   std::uint64_t candidate) {
    const std::vector<int> k = direction_monomial(tree);
    for (int i = 1; i <= tree.n; ++i) {
        const std::vector<SlideMove> moves = slidable_edges(tree, i);
        if (moves.size() != static_cast<std::size_t>(k[static_cast<std::size_t>(i - 1)] - 1))
            continue;
        if (moves.size() < 2 || moves.size() > 12) continue;
        // joint slides, smallest choice vectors first; pairs catch nearly all
        const std::uint32_t total = 1u << moves.size();
        for (int weight = 2; weight <= static_cast<int>(moves.size()); ++weight) {
            for (std::uint32_t eps = 0; eps < total; ++eps) {
                if (std::popcount(eps) != weight) continue;
                std::vector<CubeEdge> edges = tree.edges;
                for (std::size_t j = 0; j < moves.size(); ++j)
                    if ((eps >> j) & 1u)
                        *std::find(edges.begin(), edges.end(), moves[j].edge) =
                            CubeEdge{moves[j].edge.lower ^ direction_bit(i),
                                     moves[j].edge.dir};
                if (is_spanning_tree_edge_set(tree.n, edges)) continue;
                std::sort(edges.begin(), edges.end());
                DependentWitness w;
                w.tree = tree;
                w.dir = i;
                for (const SlideMove& m : moves) w.slidable.push_back(m.edge);
                w.epsilon = eps;
                w.cycle = cycle_certificate(tree.n, edges);
                w.candidate_index = candidate;
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ExcessWitness> search_excess_slides_serial(int n,
                                                         const SearchOptions& opts) {
    if (n != 4)
        throw std::invalid_argument(
            n == 3 ? "excess slides cannot exist for n=3: every tree has exactly "
                     "k_i-1 slidable edges per direction"
                   : "excess-slide search is calibrated for n=4");
    return run_search<ExcessWitness>(n, opts, 1, evaluate_excess);
}

std::optional<ExcessWitness> search_excess_slides(int n, const SearchOptions& opts) {
    if (n != 4)
        throw std::invalid_argument(
            n == 3 ? "excess slides cannot exist for n=3: every tree has exactly "
                     "k_i-1 slidable edges per direction"
                   : "excess-slide search is calibrated for n=4");
    return run_search<ExcessWitness>(n, opts, resolve_threads(opts.threads),
                                     evaluate_excess);
}

std::optional<DependentWitness> search_dependent_slides_serial(
    int n, const SearchOptions& opts) {
    if (n != 5)
        throw std::invalid_argument(
            n == 3 ? "dependent slides cannot exist for n=3: the slidable set is "
                     "independently slidable"
                   : "dependent-slide search is calibrated for n=5");
    return run_search<DependentWitness>(n, opts, 1, evaluate_dependent);
}

std::optional<DependentWitness> search_dependent_slides(int n,
                                                        const SearchOptions& opts) {
    if (n != 5)
        throw std::invalid_argument(
            n == 3 ? "dependent slides cannot exist for n=3: the slidable set is "
                     "independently slidable"
                   : "dependent-slide search is calibrated for n=5");
    return run_search<DependentWitness>(n, opts, resolve_threads(opts.threads),
                                        evaluate_dependent);
}

std::string check_excess_witness(const ExcessWitness& w) {
    if (w.tree.n != 4) return "witness tree is not in Q_4";
    if (!is_spanning_tree_edge_set(w.tree.n, w.tree.edges))
        return "witness edge set is not a spanning tree";
    const std::vector<int> k = direction_monomial(w.tree);
    if (w.direction_edges != k[static_cast<std::size_t>(w.dir - 1)])
        return "recorded k_i does not match the tree";
    std::vector<CubeEdge> seen;
    for (const SlideMove& m : w.slidable) {
        if (m.dir != w.dir) return "listed move is in the wrong direction";
        if (std::find(seen.begin(), seen.end(), m.edge) != seen.end())
            return "listed slidable edges repeat";
        seen.push_back(m.edge);
        if (!is_slidable(w.tree, m.edge, w.dir))
            return "listed edge " + edge_str(m.edge) + " is not slidable";
        const Vertical expect =
            m.edge.in_lower_face(w.dir) ? Vertical::up : Vertical::down;
        if (m.vertical != expect) return "vertical classification is wrong";
    }
    if (w.slidable.size() <= static_cast<std::size_t>(w.direction_edges - 1))
        return "witness does not exceed k_i - 1 slidable edges";
    return {};
}

std::string check_dependent_witness(const DependentWitness& w) {
    if (w.tree.n != 5) return "witness tree is not in Q_5";
    if (!is_spanning_tree_edge_set(w.tree.n, w.tree.edges))
        return "witness edge set is not a spanning tree";
    const std::vector<int> k = direction_monomial(w.tree);
    const std::vector<SlideMove> moves = slidable_edges(w.tree, w.dir);
    if (moves.size() != static_cast<std::size_t>(k[static_cast<std::size_t>(w.dir - 1)] - 1))
        return "slidable count is not exactly k_i - 1";
    if (w.slidable.size() != moves.size()) return "recorded slidable list is wrong";
    for (std::size_t j = 0; j < moves.size(); ++j)
        if (!(moves[j].edge == w.slidable[j]))
            return "recorded slidable list disagrees with recomputation";
    if (w.epsilon == 0 || w.epsilon >= (1u << moves.size()))
        return "choice vector out of range";
    std::vector<CubeEdge> edges = w.tree.edges;
    for (std::size_t j = 0; j < moves.size(); ++j)
        if ((w.epsilon >> j) & 1u)
            *std::find(edges.begin(), edges.end(), moves[j].edge) =
                CubeEdge{moves[j].edge.lower ^ direction_bit(w.dir),
                         moves[j].edge.dir};
    std::sort(edges.begin(), edges.end());
    if (is_spanning_tree_edge_set(w.tree.n, edges))
        return "joint slide still yields a spanning tree";
    // certify the cycle: closed, long enough, simple, every step an edge
    if (w.cycle.size() < 4) return "cycle too short";
    if (w.cycle.front() != w.cycle.back()) return "cycle is not closed";
    std::vector<Vertex> interior(w.cycle.begin(), w.cycle.end() - 1);
    std::vector<Vertex> dedup = interior;
    std::sort(dedup.begin(), dedup.end());
    if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
        return "cycle revisits a vertex";
    for (std::size_t j = 0; j + 1 < w.cycle.size(); ++j) {
        const Vertex a = w.cycle[j], b = w.cycle[j + 1];
        if (std::popcount(a ^ b) != 1) return "cycle step is not a cube edge";
        const int d = std::countr_zero(a ^ b) + 1;
        const CubeEdge step{a & ~direction_bit(d), d};
        if (!std::binary_search(edges.begin(), edges.end(), step))
            return "cycle uses an edge missing from the joint slide";
    }
    return {};
}

}  // namespace cubeslides
