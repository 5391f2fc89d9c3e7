#include "cubeslides/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "cubeslides/bijection.hpp"
#include "cubeslides/enumerate.hpp"
#include "cubeslides/laurent.hpp"
#include "cubeslides/parallel.hpp"
#include "cubeslides/slide_graph.hpp"
#include "cubeslides/slides.hpp"

namespace cubeslides {

bool SuiteResult::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

namespace {

// Runs a per-tree check across the whole family; empty return means pass.
template <typename Fn>
CheckResult check_trees(const std::string& name,
                        const std::vector<SpanningTree>& trees, int threads,
                        Fn&& fn) {
    std::vector<std::string> failures(trees.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 8)
    for (std::size_t i = 0; i < trees.size(); ++i) {
        try {
            failures[i] = fn(trees[i]);
        } catch (const std::exception& ex) {
            failures[i] = ex.what();
        }
    }
    for (std::size_t i = 0; i < trees.size(); ++i)
        if (!failures[i].empty())
            return CheckResult{name, false,
                               "tree " + encode(trees[i]) + ": " + failures[i]};
    return CheckResult{name, true,
                       "all " + std::to_string(trees.size()) + " trees"};
}

template <typename Fn>
CheckResult check_once(const std::string& name, Fn&& fn) {
    try {
        std::string failure = fn();
        if (!failure.empty()) return CheckResult{name, false, std::move(failure)};
    } catch (const std::exception& ex) {
        return CheckResult{name, false, ex.what()};
    }
    return CheckResult{name, true, "ok"};
}

std::pair<int, int> up_down_counts(const SpanningTree& tree, int dir) {
    const Orientation o = orientation(tree);
    int up = 0, down = 0;
    for (std::size_t k = 0; k < tree.edges.size(); ++k) {
        if (tree.edges[k].dir != dir) continue;
        (o.mu[k] == 1 ? up : down) += 1;
    }
    return {up, down};
}

std::vector<CubeEdge> direction_edges(const SpanningTree& tree, int dir) {
    std::vector<CubeEdge> out;
    for (const CubeEdge& e : tree.edges)
        if (e.dir == dir) out.push_back(e);
    return out;
}

std::vector<CubeEdge> path_edges(const std::vector<Vertex>& path) {
    std::vector<CubeEdge> out;
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
        const int d = std::countr_zero(path[j] ^ path[j + 1]) + 1;
        out.push_back(CubeEdge{path[j] & ~direction_bit(d), d});
    }
    return out;
}

}  // namespace

SuiteResult verify_weights(int threads) {
    const int nthreads = resolve_threads(threads);
    const std::vector<SpanningTree> trees = enumerate_spanning_trees(3);
    SuiteResult suite{"weights", {}};

    suite.checks.push_back(check_trees(
        "degree-monomial-two-routes", trees, nthreads, [](const SpanningTree& t) {
            if (dd_exponents_edgewise(t) != dd_exponents_oriented(t))
                return std::string("edgewise and oriented exponents differ");
            return std::string{};
        }));

    suite.checks.push_back(check_trees(
        "exponent-parity-and-range", trees, nthreads, [](const SpanningTree& t) {
            const std::vector<int> k = direction_monomial(t);
            const std::vector<int> x = dd_exponents_edgewise(t);
            for (int i = 0; i < t.n; ++i) {
                if (x[i] < 1 - k[i] || x[i] > k[i] - 1)
                    return "x_" + std::to_string(i + 1) + " exponent " +
                           std::to_string(x[i]) + " outside [1-k, k-1]";
                if ((x[i] + k[i]) % 2 == 0)
                    return "x_" + std::to_string(i + 1) +
                           " exponent has the parity of k";
            }
            return std::string{};
        }));

    suite.checks.push_back(check_once("weighted-count-identity", [&] {
        const Laurent lhs = weight_sum(trees, nthreads);
        const Laurent rhs = weighted_count_product(3);
        if (!(lhs == rhs))
            return "tree-weight sum and product expansion differ: " +
                   std::to_string(lhs.term_count()) + " vs " +
                   std::to_string(rhs.term_count()) + " terms";
        return std::string{};
    }));

    suite.checks.push_back(check_once("published-weight-occurs", [&] {
        const std::vector<int> q{2, 3, 2};
        const std::vector<int> x{-1, 2, 1};
        for (const SpanningTree& t : trees)
            if (direction_monomial(t) == q && dd_exponents_edgewise(t) == x)
                return std::string{};
        return std::string("no tree has weight q^(2,3,2) x^(-1,2,1)");
    }));

    return suite;
}

SuiteResult verify_slides(int threads) {
    const int nthreads = resolve_threads(threads);
    const std::vector<SpanningTree> trees = enumerate_spanning_trees(3);
    SuiteResult suite{"slides", {}};

    suite.checks.push_back(check_trees(
        "slide-counts", trees, nthreads, [](const SpanningTree& t) {
            const std::vector<int> k = direction_monomial(t);
            for (int i = 1; i <= 3; ++i) {
                const std::vector<SlideMove> moves = slidable_edges(t, i);
                const auto [u, d] = up_down_counts(t, i);
                const int downs = static_cast<int>(std::count_if(
                    moves.begin(), moves.end(),
                    [](const SlideMove& m) { return m.vertical == Vertical::down; }));
                const int ups = static_cast<int>(moves.size()) - downs;
                if (static_cast<int>(moves.size()) != k[i - 1] - 1)
                    return "direction " + std::to_string(i) + " has " +
                           std::to_string(moves.size()) + " slidable edges, want " +
                           std::to_string(k[i - 1] - 1);
                if (downs != u || ups != d - 1)
                    return "direction " + std::to_string(i) + " up/down split " +
                           std::to_string(ups) + "/" + std::to_string(downs) +
                           " does not match d-1/u = " + std::to_string(d - 1) + "/" +
                           std::to_string(u);
            }
            return std::string{};
        }));

    suite.checks.push_back(
        check_trees("four-moves-total", trees, nthreads, [](const SpanningTree& t) {
            const std::size_t total = all_slide_moves(t).size();
            return total == 4 ? std::string{}
                              : "tree has " + std::to_string(total) + " moves";
        }));

    suite.checks.push_back(check_trees(
        "path-uniqueness", trees, nthreads, [](const SpanningTree& t) {
            // vertex path strictly between two tree edges, no shortening
            auto between = [](const SpanningTree& tree, const CubeEdge& x,
                              const CubeEdge& y) {
                const RootedTree rooted = root_tree(tree);
                std::vector<Vertex> p = tree_path(rooted, x.lower, y.lower);
                if (p.size() >= 2 && path_edges({p[0], p[1]}).front() == x)
                    p.erase(p.begin());
                if (p.size() >= 2 &&
                    path_edges({p[p.size() - 2], p.back()}).front() == y)
                    p.pop_back();
                return p;
            };
            for (int i = 1; i <= 3; ++i) {
                const std::vector<CubeEdge> dir_edges = direction_edges(t, i);
                for (std::size_t a = 0; a < dir_edges.size(); ++a)
                    for (std::size_t b = a + 1; b < dir_edges.size(); ++b) {
                        const std::vector<Vertex> path =
                            between(t, dir_edges[a], dir_edges[b]);
                        const std::vector<CubeEdge> segment = path_edges(path);
                        // only pairs whose path meets no further i-edge, not
                        // even at a vertex
                        bool meets = false;
                        for (std::size_t j = 1; j + 1 < path.size(); ++j)
                            meets = meets ||
                                    t.contains(CubeEdge{
                                        path[j] & ~direction_bit(i), i});
                        if (meets) continue;
                        std::vector<CubeEdge> on_path;
                        for (const CubeEdge& f : segment)
                            if (is_slidable(t, f, i)) on_path.push_back(f);
                        if (on_path.size() != 1)
                            return "path in direction " + std::to_string(i) +
                                   " carries " + std::to_string(on_path.size()) +
                                   " slidable edges";
                        const CubeEdge found =
                            find_slidable_on_path(t, dir_edges[a], dir_edges[b], i);
                        if (!(found == on_path.front()))
                            return std::string("path-walk result differs from scan");
                        // after the slide, the reflected edge is the unique
                        // slidable edge on the corresponding path
                        const SpanningTree t2 = slide(t, found, i);
                        const CubeEdge moved{found.lower ^ direction_bit(i),
                                             found.dir};
                        std::vector<CubeEdge> on_path2;
                        for (const CubeEdge& f :
                             path_edges(between(t2, dir_edges[a], dir_edges[b])))
                            if (is_slidable(t2, f, i)) on_path2.push_back(f);
                        if (on_path2.size() != 1 || !(on_path2.front() == moved))
                            return std::string(
                                "slid edge is not the unique slidable edge "
                                "afterwards");
                    }
            }
            return std::string{};
        }));

    suite.checks.push_back(check_trees(
        "orientation-reversal", trees, nthreads, [](const SpanningTree& t) {
            for (const SlideMove& m : all_slide_moves(t)) {
                std::vector<CubeEdge> flips = flipped_edges(t, m.edge, m.dir);
                std::sort(flips.begin(), flips.end());
                const std::vector<CubeEdge> expected =
                    flip_set_via_cycle(t, m.edge, m.dir);
                if (flips != expected)
                    return "flip set differs from cycle/off-root prediction for " +
                           edge_str(m.edge);
                const int dir_flips = static_cast<int>(std::count_if(
                    flips.begin(), flips.end(),
                    [&](const CubeEdge& f) { return f.dir == m.dir; }));
                if (dir_flips != 1)
                    return "slide reverses " + std::to_string(dir_flips) +
                           " edges in its own direction";
                // the slid edge hands its orientation to its reflection, and
                // the reversed dir-edge is the one the scan found
                const SpanningTree t2 = slide(t, m.edge, m.dir);
                const CubeEdge moved{m.edge.lower ^ direction_bit(m.dir),
                                     m.edge.dir};
                if (mu_of(t, orientation(t), m.edge) !=
                    mu_of(t2, orientation(t2), moved))
                    return "slid edge " + edge_str(m.edge) +
                           " changed orientation";
                std::vector<CubeEdge> dir_only = flips;
                std::erase_if(dir_only, [&](const CubeEdge& f) {
                    return f.dir != m.dir;
                });
                if (!(reversed_edge(t, m.edge, m.dir) == dir_only.front()))
                    return std::string("reversed_edge disagrees with the scan");
            }
            return std::string{};
        }));

    suite.checks.push_back(check_trees(
        "x-monomial-effect", trees, nthreads, [](const SpanningTree& t) {
            const std::vector<int> before = dd_exponents_oriented(t);
            for (const SlideMove& m : all_slide_moves(t)) {
                const SpanningTree t2 = slide(t, m.edge, m.dir);
                if (direction_monomial(t2) != direction_monomial(t))
                    return std::string("signature changed under a slide");
                const std::vector<int> after = dd_exponents_oriented(t2);
                for (int j = 1; j <= 3; ++j) {
                    const int want =
                        j == m.dir
                            ? before[j - 1] + (m.vertical == Vertical::up ? 2 : -2)
                            : before[j - 1];
                    if (after[j - 1] != want)
                        return "x_" + std::to_string(j) + " moved from " +
                               std::to_string(before[j - 1]) + " to " +
                               std::to_string(after[j - 1]);
                }
            }
            return std::string{};
        }));

    suite.checks.push_back(check_trees(
        "class-structure", trees, nthreads, [](const SpanningTree& t) {
            const std::vector<int> k = direction_monomial(t);
            for (int i = 1; i <= 3; ++i) {
                const auto result = slide_class(t, i);
                if (!std::holds_alternative<SlideClass>(result))
                    return "class in direction " + std::to_string(i) +
                           " is not independently slidable";
                const SlideClass& cls = std::get<SlideClass>(result);
                if (cls.members.size() !=
                    (1u << static_cast<unsigned>(k[i - 1] - 1)))
                    return std::string("class size is not 2^(k_i-1)");
                std::set<std::uint16_t> masks;
                for (const SpanningTree& m : cls.members)
                    masks.insert(tree_mask3(m));
                if (masks.size() != cls.members.size())
                    return std::string("class members repeat");
                if (!masks.contains(tree_mask3(t)))
                    return std::string("class does not contain its base tree");
                // the class looks the same from each member, with slots shifted
                for (std::uint32_t eps = 0; eps < cls.members.size(); ++eps) {
                    const auto again = slide_class(cls.members[eps], i);
                    const SlideClass& cls2 = std::get<SlideClass>(again);
                    std::set<std::uint16_t> masks2;
                    for (const SpanningTree& m : cls2.members)
                        masks2.insert(tree_mask3(m));
                    if (masks2 != masks)
                        return std::string("class differs seen from a member");
                    for (std::uint32_t delta = 0; delta < cls2.members.size();
                         ++delta)
                        if (!(cls2.members[delta] == cls.members[eps ^ delta]))
                            return std::string("slide composition law fails");
                }
            }
            return std::string{};
        }));

    suite.checks.push_back(check_trees(
        "reversed-edge-class-invariance", trees, nthreads,
        [](const SpanningTree& t) {
            for (int i = 1; i <= 3; ++i) {
                const SlideClass cls = std::get<SlideClass>(slide_class(t, i));
                for (std::size_t j = 0; j < cls.slidable.size(); ++j) {
                    const CubeEdge f = reversed_edge(t, cls.slidable[j], i);
                    for (std::uint32_t eps = 0; eps < cls.members.size(); ++eps) {
                        const CubeEdge present =
                            (eps >> j) & 1u
                                ? CubeEdge{cls.slidable[j].lower ^ direction_bit(i),
                                           cls.slidable[j].dir}
                                : cls.slidable[j];
                        if (!(reversed_edge(cls.members[eps], present, i) == f))
                            return std::string(
                                "reversed edge changes across the class");
                    }
                }
            }
            return std::string{};
        }));

    return suite;
}

SuiteResult verify_retraction(int threads) {
    const int nthreads = resolve_threads(threads);
    const std::vector<SpanningTree> trees = enumerate_spanning_trees(3);
    SuiteResult suite{"retraction", {}};

    suite.checks.push_back(check_trees(
        "directional-retraction", trees, nthreads, [](const SpanningTree& t) {
            for (int i = 1; i <= 3; ++i) {
                const SpanningTree r = retract_direction(t, i);
                const Orientation o = orientation(r);
                for (std::size_t k = 0; k < r.edges.size(); ++k)
                    if (r.edges[k].dir == i && o.mu[k] != -1)
                        return "retraction left an upward edge in direction " +
                               std::to_string(i);
                if (!(retract_direction(r, i) == r))
                    return std::string("directional retraction is not idempotent");
                // the fibre over r is the whole slide class
                const SlideClass cls = std::get<SlideClass>(slide_class(t, i));
                for (const SpanningTree& m : cls.members)
                    if (!(retract_direction(m, i) == r))
                        return std::string("class members retract differently");
            }
            return std::string{};
        }));

    suite.checks.push_back(check_once("retraction-image-and-fibres", [&] {
        std::map<std::uint16_t, std::size_t> fibre;
        for (const SpanningTree& t : trees) {
            const SpanningTree u = retract(t);
            if (!is_upright(u)) return std::string("retraction missed upright");
            if (!(retract(u) == u)) return std::string("retraction not idempotent");
            ++fibre[tree_mask3(u)];
        }
        if (fibre.size() != 24)
            return "image has " + std::to_string(fibre.size()) + " trees, want 24";
        std::size_t total = 0;
        for (const auto& [mask, count] : fibre) {
            if (count != 16)
                return "fibre over " + std::to_string(mask) + " has " +
                       std::to_string(count) + " trees, want 16";
            total += count;
        }
        if (total != 384) return std::string("fibres do not cover all 384 trees");
        return std::string{};
    }));

    suite.checks.push_back(check_trees(
        "downward-normalization", trees, nthreads, [](const SpanningTree& t) {
            const NormalizeResult nr = normalize_downward(t);
            if (!is_upright(nr.tree))
                return std::string("normalization did not reach an upright tree");
            if (direction_monomial(nr.tree) != direction_monomial(t))
                return std::string("normalization changed the signature");
            auto measure = [](const SpanningTree& x) {
                std::size_t sum = 0;
                for (const CubeEdge& e : x.edges)
                    sum += static_cast<std::size_t>(std::popcount(e.lower));
                return sum;
            };
            if (nr.slides != measure(t) - measure(nr.tree))
                return std::string("slide count disagrees with the descent measure");
            return std::string{};
        }));

    return suite;
}

SuiteResult verify_bijection(int threads) {
    const int nthreads = resolve_threads(threads);
    const std::vector<SpanningTree> trees = enumerate_spanning_trees(3);
    SuiteResult suite{"bijection", {}};

    suite.checks.push_back(check_once("upright-trees-are-sections", [&] {
        std::set<std::uint16_t> upright;
        for (const SpanningTree& t : trees)
            if (is_upright(t)) upright.insert(tree_mask3(t));
        if (upright.size() != 24)
            return "found " + std::to_string(upright.size()) +
                   " upright trees, want 24";
        std::set<std::uint16_t> built;
        bool round_trip = true;
        for_each_section(3, [&](const Section& s) {
            const SpanningTree t = upright_of_section(s);
            built.insert(tree_mask3(t));
            round_trip = round_trip && section_of_upright(t) == s;
        });
        if (built != upright)
            return std::string("section-built trees differ from the upright set");
        if (!round_trip) return std::string("section round trip failed");
        return std::string{};
    }));

    suite.checks.push_back(check_trees(
        "edge-partitions", trees, nthreads, [](const SpanningTree& t) {
            for (int i = 1; i <= 3; ++i) {
                const EdgePartition part = direction_partition(t, i);
                const auto [u, d] = up_down_counts(t, i);
                if (static_cast<int>(part.down_reversible.size()) != u)
                    return std::string(
                        "downward-reversible set is not the upward edge count");
                if (static_cast<int>(part.up_reversible.size()) != d - 1)
                    return std::string("upward-reversible set is not d_i - 1");
            }
            return std::string{};
        }));

    suite.checks.push_back(check_trees(
        "weight-preservation", trees, nthreads, [](const SpanningTree& t) {
            const SignedSection ss = to_signed_section(t);
            if (section_q_exponents(ss) != direction_monomial(t))
                return std::string("q exponents not preserved");
            if (section_x_exponents(ss) != dd_exponents_edgewise(t))
                return std::string("x exponents not preserved");
            return std::string{};
        }));

    suite.checks.push_back(check_once("bijective-onto-signed-sections", [&] {
        if (count_signed_sections(3) != 384)
            return std::string("signed-section count is not 384");
        std::set<std::string> seen;
        for (const SpanningTree& t : trees) {
            const SignedSection ss = to_signed_section(t);
            std::string key;
            for (Vertex s = 0; s < 8; ++s) {
                key += std::to_string(ss.dir[s]);
                key += ss.sign[s] > 0 ? '+' : (ss.sign[s] < 0 ? '-' : '0');
            }
            seen.insert(std::move(key));
        }
        if (seen.size() != trees.size())
            return "only " + std::to_string(seen.size()) +
                   " distinct signed sections from 384 trees";
        return std::string{};
    }));

    suite.checks.push_back(check_trees(
        "inverse-round-trip", trees, nthreads, [](const SpanningTree& t) {
            if (!(tree_from_signed_section(to_signed_section(t)) == t))
                return std::string("inverse round trip failed");
            return std::string{};
        }));

    suite.checks.push_back(check_once("fibre-sign-structure", [&] {
        std::map<std::uint16_t, std::set<std::string>> signs_by_fibre;
        std::map<std::uint16_t, std::string> dirs_by_fibre;
        for (const SpanningTree& t : trees) {
            const std::uint16_t base = tree_mask3(retract(t));
            const SignedSection ss = to_signed_section(t);
            std::string dirs, signs;
            for (Vertex s = 0; s < 8; ++s) {
                if (std::popcount(s) < 2) continue;
                dirs += std::to_string(ss.dir[s]);
                signs += ss.sign[s] > 0 ? '+' : '-';
            }
            auto [it, inserted] = dirs_by_fibre.emplace(base, dirs);
            if (!inserted && it->second != dirs)
                return std::string("choice part varies within a fibre");
            signs_by_fibre[base].insert(std::move(signs));
        }
        for (const auto& [base, signs] : signs_by_fibre)
            if (signs.size() != 16)
                return "fibre over " + std::to_string(base) + " has " +
                       std::to_string(signs.size()) + " sign vectors, want 16";
        return std::string{};
    }));

    return suite;
}

SuiteResult verify_graph(int threads) {
    const int nthreads = resolve_threads(threads);
    SuiteResult suite{"graph", {}};
    const SlideGraph graph = build_slide_graph(nthreads);
    const std::vector<ComponentRecord> comps = components(graph);

    suite.checks.push_back(check_once("regular-and-symmetric", [&] {
        if (graph.nodes.size() != 384)
            return "graph has " + std::to_string(graph.nodes.size()) + " nodes";
        if (graph.edge_total() != 768)
            return "graph has " + std::to_string(graph.edge_total()) + " edges";
        for (std::uint32_t i = 0; i < graph.nodes.size(); ++i) {
            if (graph.adj[i].size() != 4)
                return "node " + std::to_string(graph.nodes[i]) + " has degree " +
                       std::to_string(graph.adj[i].size());
            const Signature sig =
                direction_monomial(tree_from_mask3(graph.nodes[i]));
            for (const std::uint32_t j : graph.adj[i]) {
                if (std::find(graph.adj[j].begin(), graph.adj[j].end(), i) ==
                    graph.adj[j].end())
                    return std::string("adjacency is not symmetric");
                if (direction_monomial(tree_from_mask3(graph.nodes[j])) != sig)
                    return std::string("a slide changed the signature");
            }
        }
        return std::string{};
    }));

    suite.checks.push_back(check_once("component-census", [&] {
        std::size_t small = 0, large = 0;
        std::map<Signature, std::size_t> tree_census;
        std::map<Signature, std::size_t> comp_census;
        for (const ComponentRecord& c : comps) {
            if (c.size == 16)
                ++small;
            else if (c.size == 64)
                ++large;
            else
                return "component of size " + std::to_string(c.size);
            if (c.size == 16 && !c.q4_isomorphic)
                return "16-tree component " + std::to_string(c.id()) +
                       " failed 4-cube certification";
            if (c.size == 64 && c.q4_isomorphic)
                return std::string("64-tree component certified as a 4-cube");
            tree_census[c.signature] += c.size;
            comp_census[c.signature] += 1;
        }
        if (small != 12 || large != 3)
            return "census " + std::to_string(small) + " x16 + " +
                   std::to_string(large) + " x64";
        auto is_perm = [](Signature sig, Signature of) {
            std::sort(sig.begin(), sig.end());
            std::sort(of.begin(), of.end());
            return sig == of;
        };
        std::size_t trees421 = 0, trees331 = 0, trees322 = 0;
        for (const auto& [sig, count] : tree_census) {
            if (is_perm(sig, {4, 2, 1}))
                trees421 += count;
            else if (is_perm(sig, {3, 3, 1}))
                trees331 += count;
            else if (is_perm(sig, {3, 2, 2}))
                trees322 += count;
            else
                return "unexpected signature " + signature_str(sig);
        }
        if (trees421 != 96 || trees331 != 96 || trees322 != 192)
            return "signature census " + std::to_string(trees421) + "/" +
                   std::to_string(trees331) + "/" + std::to_string(trees322);
        for (const auto& [sig, count] : comp_census) {
            const std::size_t want = is_perm(sig, {4, 2, 1})   ? 1
                                     : is_perm(sig, {3, 3, 1}) ? 2
                                                               : 1;
            if (count != want)
                return signature_str(sig) + " splits into " +
                       std::to_string(count) + " components, want " +
                       std::to_string(want);
        }
        return std::string{};
    }));

    suite.checks.push_back(check_once("upright-distribution", [&] {
        for (const ComponentRecord& c : comps) {
            const std::size_t want = c.size == 64 ? 4 : 1;
            if (c.upright_count != want)
                return "component " + std::to_string(c.id()) + " holds " +
                       std::to_string(c.upright_count) + " upright trees, want " +
                       std::to_string(want);
        }
        return std::string{};
    }));

    suite.checks.push_back(check_once("downward-normalization-stays-inside", [&] {
        std::map<std::uint16_t, std::size_t> comp_of;
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (const std::uint16_t mask : comps[c].members) comp_of[mask] = c;
        for (const std::uint16_t mask : graph.nodes) {
            const SpanningTree t = tree_from_mask3(mask);
            const std::uint16_t target = tree_mask3(normalize_downward(t).tree);
            if (comp_of.at(mask) != comp_of.at(target))
                return std::string("normalization left the component");
        }
        return std::string{};
    }));

    suite.checks.push_back(check_once("lower-face-signature-invariant", [&] {
        for (const ComponentRecord& c : comps) {
            for (int i = 1; i <= 3; ++i) {
                if (c.signature[static_cast<std::size_t>(i - 1)] != 1) continue;
                // trees with a single direction-i edge: the part below the
                // i-plane is a spanning tree of a square whose signature no
                // slide can change
                std::vector<int> expect;
                for (const std::uint16_t mask : c.members) {
                    const SpanningTree t = tree_from_mask3(mask);
                    std::vector<int> sub(3, 0);
                    for (const CubeEdge& e : t.edges)
                        if (e.dir != i && !has_element(e.lower, i))
                            ++sub[static_cast<std::size_t>(e.dir - 1)];
                    if (expect.empty())
                        expect = sub;
                    else if (expect != sub)
                        return std::string(
                            "lower-face signature varies inside a component");
                }
            }
        }
        return std::string{};
    }));

    (void)nthreads;
    return suite;
}

std::vector<SuiteResult> verify_all(int threads) {
    return {verify_weights(threads), verify_slides(threads),
            verify_retraction(threads), verify_bijection(threads),
            verify_graph(threads)};
}

}  // namespace cubeslides
