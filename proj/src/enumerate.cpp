#include "cubeslides/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "cubeslides/parallel.hpp"
#include "cubeslides/union_find.hpp"

namespace cubeslides {
namespace {

void require_enumerable(int n, const EnumerateOptions& opts) {
    require_n(n);
    if (n >= 5)
        throw std::invalid_argument("enumeration of Q_" + std::to_string(n) +
                                    " refused: out of desk scale");
    if (n == 4 && !opts.expensive)
        throw std::invalid_argument(
            "enumeration of Q_4 streams 42467328 trees; pass expensive=true");
}

std::vector<CubeEdge> all_edges(int n) {
    std::vector<CubeEdge> edges;
    edges.reserve(cube_edge_count(n));
    for (std::uint32_t k = 0; k < cube_edge_count(n); ++k)
        edges.push_back(edge_at(n, k));
    return edges;
}

// n <= 3: scan the edge masks in increasing order and keep the spanning
// trees. Cheap (C(12,7) = 792 candidates for n = 3) and obviously correct.
std::vector<SpanningTree> enumerate_small(int n) {
    const std::vector<CubeEdge> edges = all_edges(n);
    const std::uint32_t ne = cube_edge_count(n);
    const std::uint32_t want = vertex_count(n) - 1;
    std::vector<SpanningTree> out;
    std::vector<CubeEdge> pick;
    for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
        if (static_cast<std::uint32_t>(std::popcount(mask)) != want) continue;
        pick.clear();
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1)
            pick.push_back(edges[static_cast<std::size_t>(std::countr_zero(bits))]);
        if (is_spanning_tree_edge_set(n, pick)) out.push_back(SpanningTree{n, pick});
    }
    return out;
}

// Backtracking enumerator over the canonical edge list: branch on taking or
// skipping each edge, keeping only branches that can still finish.
// Take requires the edge to join two components; skip requires the chosen
// forest plus the remaining suffix to stay connected. Every recursion leaf
// is therefore a spanning tree, visited exactly once.
struct Backtracker {
    int n;
    std::vector<CubeEdge> edges;
    std::uint32_t nv;

    bool suffix_connects(const UnionFind& uf, std::uint32_t pos) const {
        UnionFind probe = uf;
        for (std::uint32_t k = pos; k < edges.size() && probe.components > 1; ++k)
            probe.unite(static_cast<std::uint16_t>(edges[k].lower),
                        static_cast<std::uint16_t>(edges[k].upper()));
        return probe.components == 1;
    }

    template <typename Leaf>
    void recurse(UnionFind& uf, std::vector<CubeEdge>& chosen, std::uint32_t pos,
                 Leaf&& leaf) const {
        if (chosen.size() == nv - 1) {
            leaf(chosen);
            return;
        }
        const CubeEdge& e = edges[pos];
        const std::uint16_t a = static_cast<std::uint16_t>(e.lower);
        const std::uint16_t b = static_cast<std::uint16_t>(e.upper());
        if (uf.find(a) != uf.find(b)) {
            UnionFind next = uf;
            next.unite(a, b);
            chosen.push_back(e);
            recurse(next, chosen, pos + 1, leaf);
            chosen.pop_back();
        }
        if (suffix_connects(uf, pos + 1)) recurse(uf, chosen, pos + 1, leaf);
    }

    // Expands the branch tree breadth-first into independent subproblems so
    // the suffixes can be processed in parallel.
    struct Frontier {
        UnionFind uf;
        std::vector<CubeEdge> chosen;
        std::uint32_t pos;
    };

    std::vector<Frontier> split(std::size_t target) const {
        std::vector<Frontier> frontier{{UnionFind(nv), {}, 0}};
        while (frontier.size() < target) {
            std::vector<Frontier> next;
            bool expanded = false;
            for (const Frontier& f : frontier) {
                if (f.chosen.size() == nv - 1 || f.pos >= edges.size()) {
                    next.push_back(f);
                    continue;
                }
                expanded = true;
                const CubeEdge& e = edges[f.pos];
                const std::uint16_t a = static_cast<std::uint16_t>(e.lower);
                const std::uint16_t b = static_cast<std::uint16_t>(e.upper());
                UnionFind probe = f.uf;
                if (probe.find(a) != probe.find(b)) {
                    Frontier g{probe, f.chosen, f.pos + 1};
                    g.uf.unite(a, b);
                    g.chosen.push_back(e);
                    next.push_back(std::move(g));
                }
                if (suffix_connects(f.uf, f.pos + 1))
                    next.push_back(Frontier{f.uf, f.chosen, f.pos + 1});
            }
            frontier = std::move(next);
            if (!expanded) break;
        }
        return frontier;
    }
};

}  // namespace

std::vector<SpanningTree> enumerate_spanning_trees(int n, const EnumerateOptions& opts) {
    require_enumerable(n, opts);
    if (n == 4)
        throw std::invalid_argument(
            "Q_4 enumeration is streaming only; use for_each_spanning_tree");
    return enumerate_small(n);
}

void for_each_spanning_tree(int n, const std::function<void(const SpanningTree&)>& fn,
                            const EnumerateOptions& opts) {
    require_enumerable(n, opts);
    if (n <= 3) {
        for (const SpanningTree& t : enumerate_small(n)) fn(t);
        return;
    }
    const Backtracker bt{n, all_edges(n), vertex_count(n)};
    const int threads = resolve_threads(opts.threads);
    if (threads == 1) {
        UnionFind uf(bt.nv);
        std::vector<CubeEdge> chosen;
        bt.recurse(uf, chosen, 0,
                   [&](const std::vector<CubeEdge>& e) { fn(SpanningTree{n, e}); });
        return;
    }
    auto frontier = bt.split(static_cast<std::size_t>(threads) * 64);
#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        std::vector<CubeEdge> chosen = frontier[i].chosen;
        bt.recurse(frontier[i].uf, chosen, frontier[i].pos,
                   [&](const std::vector<CubeEdge>& e) { fn(SpanningTree{n, e}); });
    }
}

std::uint64_t count_spanning_trees_serial(int n, const EnumerateOptions& opts) {
    require_enumerable(n, opts);
    if (n <= 3) return enumerate_small(n).size();
    const Backtracker bt{n, all_edges(n), vertex_count(n)};
    std::uint64_t total = 0;
    UnionFind uf(bt.nv);
    std::vector<CubeEdge> chosen;
    bt.recurse(uf, chosen, 0, [&](const std::vector<CubeEdge>&) { ++total; });
    return total;
}

std::uint64_t count_spanning_trees(int n, const EnumerateOptions& opts) {
    require_enumerable(n, opts);
    if (n <= 3) return enumerate_small(n).size();
    const Backtracker bt{n, all_edges(n), vertex_count(n)};
    const int threads = resolve_threads(opts.threads);
    auto frontier = bt.split(static_cast<std::size_t>(threads) * 64);
    std::uint64_t total = 0;
#pragma omp parallel for num_threads(threads) schedule(dynamic) reduction(+ : total)
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        std::uint64_t local = 0;
        std::vector<CubeEdge> chosen = frontier[i].chosen;
        bt.recurse(frontier[i].uf, chosen, frontier[i].pos,
                   [&](const std::vector<CubeEdge>&) { ++local; });
        total += local;
    }
    return total;
}

mpz_class kirchhoff_count(int n) {
    require_n(n);
    if (n > 6)
        throw std::invalid_argument("kirchhoff_count supports n <= 6, got " +
                                    std::to_string(n));
    // reduced Laplacian: drop the row/column of the root vertex
    const std::uint32_t dim = vertex_count(n) - 1;
    std::vector<std::vector<mpz_class>> m(dim, std::vector<mpz_class>(dim, 0));
    for (std::uint32_t v = 1; v <= dim; ++v) {
        m[v - 1][v - 1] = n;  // Q_n is n-regular
        for (int d = 1; d <= n; ++d) {
            const std::uint32_t w = v ^ direction_bit(d);
            if (w >= 1) m[v - 1][w - 1] = -1;
        }
    }
    // Bareiss fraction-free elimination; every division is exact
    mpz_class prev = 1;
    int sign = 1;
    for (std::uint32_t i = 0; i < dim; ++i) {
        if (m[i][i] == 0) {
            std::uint32_t swap_row = i + 1;
            while (swap_row < dim && m[swap_row][i] == 0) ++swap_row;
            if (swap_row == dim) return 0;
            std::swap(m[i], m[swap_row]);
            sign = -sign;
        }
        for (std::uint32_t r = i + 1; r < dim; ++r)
            for (std::uint32_t c = i + 1; c < dim; ++c)
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
        prev = m[i][i];
    }
    return sign * m[dim - 1][dim - 1];
}

mpz_class formula_count(int n) {
    require_n(n);
    mpz_class left;
    mpz_ui_pow_ui(left.get_mpz_t(), 2, (1u << n) - static_cast<unsigned>(n) - 1);
    for (int k = 1; k <= n; ++k) {
        mpz_class binom, factor;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(k));
        mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(k),
                      binom.get_ui());
        left *= factor;
    }
    mpz_class right = 1;
    for (std::uint32_t s = 0; s < vertex_count(n); ++s)
        if (std::popcount(s) >= 2) right *= 2 * std::popcount(s);
    if (left != right)
        throw std::logic_error("closed-form tree counts disagree for n=" +
                               std::to_string(n));
    return left;
}

}  // namespace cubeslides
