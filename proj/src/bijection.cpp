#include "cubeslides/bijection.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "cubeslides/union_find.hpp"

namespace cubeslides {
namespace {

void replace_edge(std::vector<CubeEdge>& edges, const CubeEdge& from,
                  const CubeEdge& to) {
    const auto it = std::find(edges.begin(), edges.end(), from);
    if (it != edges.end()) *it = to;
}

// Follow a tracked edge through a slide: only the slid edge itself moves.
void transport(EdgePartition& part, const TraceMove& mv) {
    const CubeEdge after{mv.before.lower ^ direction_bit(mv.dir), mv.before.dir};
    replace_edge(part.down_reversible, mv.before, after);
    replace_edge(part.up_reversible, mv.before, after);
    if (part.pinned == mv.before) part.pinned = after;
}

bool contains_edge(const std::vector<CubeEdge>& edges, const CubeEdge& e) {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

CubeEdge first_root_path_edge(Vertex s, int dir) {
    return CubeEdge{s & ~direction_bit(dir), dir};
}

}  // namespace

void validate_section(const Section& section) {
    require_n(section.n);
    const std::uint32_t nv = vertex_count(section.n);
    if (section.choice.size() != nv)
        throw std::invalid_argument("section table must have 2^n entries");
    for (Vertex s = 1; s < nv; ++s) {
        const int c = section.choice[s];
        if (c < 1 || c > section.n || !has_element(s, c))
            throw std::invalid_argument("section chooses " + std::to_string(c) +
                                        " outside the set " + subset_str(s));
    }
}

void validate_signed_section(const SignedSection& ss) {
    require_n(ss.n);
    const std::uint32_t nv = vertex_count(ss.n);
    if (ss.dir.size() != nv || ss.sign.size() != nv)
        throw std::invalid_argument("signed section tables must have 2^n entries");
    for (Vertex s = 0; s < nv; ++s) {
        if (std::popcount(s) >= 2) {
            const int c = ss.dir[s];
            if (c < 1 || c > ss.n || !has_element(s, c))
                throw std::invalid_argument("signed section chooses " +
                                            std::to_string(c) + " outside the set " +
                                            subset_str(s));
            if (ss.sign[s] != 1 && ss.sign[s] != -1)
                throw std::invalid_argument("signed section needs sign +-1 on " +
                                            subset_str(s));
        } else if (ss.dir[s] != 0 || ss.sign[s] != 0) {
            throw std::invalid_argument("signed section must leave " + subset_str(s) +
                                        " unset");
        }
    }
}

Section section_of_upright(const SpanningTree& tree) {
    if (!is_upright(tree))
        throw std::invalid_argument("tree is not upright; no associated section");
    const RootedTree rooted = root_tree(tree);
    Section section{tree.n, std::vector<std::uint8_t>(vertex_count(tree.n), 0)};
    for (Vertex s = 1; s < vertex_count(tree.n); ++s)
        section.choice[s] = rooted.parent_dir[s];
    return section;
}

SpanningTree upright_of_section(const Section& section) {
    validate_section(section);
    std::vector<CubeEdge> edges;
    edges.reserve(vertex_count(section.n) - 1);
    for (Vertex s = 1; s < vertex_count(section.n); ++s)
        edges.push_back(first_root_path_edge(s, section.choice[s]));
    return tree_from_edges(section.n, std::move(edges));
}

void for_each_section(int n, const std::function<void(const Section&)>& fn) {
    require_n(n);
    if (n > 4)
        throw std::invalid_argument("section enumeration is desk scale (n <= 4)");
    const std::uint32_t nv = vertex_count(n);
    // elements of each set, for the odometer
    std::vector<std::vector<std::uint8_t>> elems(nv);
    for (Vertex s = 1; s < nv; ++s)
        for (int i = 1; i <= n; ++i)
            if (has_element(s, i)) elems[s].push_back(static_cast<std::uint8_t>(i));
    std::vector<std::size_t> pick(nv, 0);
    Section section{n, std::vector<std::uint8_t>(nv, 0)};
    for (;;) {
        for (Vertex s = 1; s < nv; ++s) section.choice[s] = elems[s][pick[s]];
        fn(section);
        Vertex s = 1;
        for (; s < nv; ++s) {
            if (++pick[s] < elems[s].size()) break;
            pick[s] = 0;
        }
        if (s == nv) return;
    }
}

mpz_class count_sections(int n) {
    require_n(n);
    mpz_class total = 1;
    for (Vertex s = 1; s < vertex_count(n); ++s) total *= std::popcount(s);
    return total;
}

mpz_class count_signed_sections(int n) {
    require_n(n);
    mpz_class total = 1;
    for (Vertex s = 1; s < vertex_count(n); ++s)
        if (std::popcount(s) >= 2) total *= 2 * std::popcount(s);
    return total;
}

EdgePartition direction_partition(const SpanningTree& tree, int dir) {
    const std::vector<SlideMove> moves = slidable_edges(tree, dir);
    EdgePartition part;
    std::vector<CubeEdge> reversible;
    for (const SlideMove& m : moves) {
        const CubeEdge f = reversed_edge(tree, m.edge, dir);
        if (contains_edge(reversible, f))
            throw std::logic_error("two slides reverse the same edge " + edge_str(f));
        reversible.push_back(f);
        (m.vertical == Vertical::down ? part.down_reversible : part.up_reversible)
            .push_back(f);
    }
    // the leftover dir-edge is pinned
    std::vector<CubeEdge> pinned;
    for (const CubeEdge& e : tree.edges)
        if (e.dir == dir && !contains_edge(reversible, e)) pinned.push_back(e);
    if (pinned.size() != 1)
        throw std::logic_error("expected exactly one unreversible edge in direction " +
                               std::to_string(dir) + ", found " +
                               std::to_string(pinned.size()));
    part.pinned = pinned.front();

    // cross-check: it must be the dir-edge kept with the root once the
    // slidable edges are removed
    UnionFind uf(vertex_count(tree.n));
    for (const CubeEdge& e : tree.edges) {
        bool slid = false;
        for (const SlideMove& m : moves) slid = slid || m.edge == e;
        if (!slid)
            uf.unite(static_cast<std::uint16_t>(e.lower),
                     static_cast<std::uint16_t>(e.upper()));
    }
    const std::uint16_t root = uf.find(0);
    for (const CubeEdge& e : tree.edges) {
        if (e.dir != dir) continue;
        const bool at_root = uf.find(static_cast<std::uint16_t>(e.lower)) == root;
        if (at_root != (e == part.pinned))
            throw std::logic_error("pinned edge characterization failed at " +
                                   edge_str(e));
    }
    return part;
}

SignedSection to_signed_section(const SpanningTree& tree, SlotOrder order) {
    if (tree.n != 3)
        throw std::invalid_argument("signed-section bijection is defined for n=3");
    SpanningTree cur = tree;
    std::array<EdgePartition, 4> parts;  // index by direction, slot 0 unused
    for (const int i : {3, 2, 1}) {
        parts[static_cast<std::size_t>(i)] = direction_partition(cur, i);
        auto [next, trace] = retract_direction_traced(cur, i, order);
        for (const TraceMove& mv : trace)
            for (int j = i; j <= 3; ++j)
                transport(parts[static_cast<std::size_t>(j)], mv);
        cur = std::move(next);
    }

    // normalize each partition so the pinned edge is the root edge of its
    // direction, swapping roles if some other edge ended up pinned
    for (int i = 1; i <= 3; ++i) {
        EdgePartition& part = parts[static_cast<std::size_t>(i)];
        const CubeEdge root_edge{0, i};
        if (part.pinned == root_edge) continue;
        if (contains_edge(part.down_reversible, root_edge))
            replace_edge(part.down_reversible, root_edge, part.pinned);
        else if (contains_edge(part.up_reversible, root_edge))
            replace_edge(part.up_reversible, root_edge, part.pinned);
        else
            throw std::logic_error("root edge of direction " + std::to_string(i) +
                                   " missing from the tracked partition");
        part.pinned = root_edge;
    }

    const Section section = section_of_upright(cur);
    SignedSection ss{3, std::vector<std::uint8_t>(vertex_count(3), 0),
                     std::vector<std::int8_t>(vertex_count(3), 0)};
    for (Vertex s = 1; s < vertex_count(3); ++s) {
        if (std::popcount(s) < 2) continue;
        const int i = section.choice[s];
        const CubeEdge first = first_root_path_edge(s, i);
        const EdgePartition& part = parts[static_cast<std::size_t>(i)];
        ss.dir[s] = static_cast<std::uint8_t>(i);
        if (contains_edge(part.down_reversible, first))
            ss.sign[s] = 1;
        else if (contains_edge(part.up_reversible, first))
            ss.sign[s] = -1;
        else
            throw std::logic_error("first root-path edge of " + subset_str(s) +
                                   " is pinned; signs are undefined");
    }
    return ss;
}

SpanningTree tree_from_signed_section(const SignedSection& ss) {
    validate_signed_section(ss);
    if (ss.n != 3)
        throw std::invalid_argument("signed-section bijection is defined for n=3");

    // extend to a full section: singletons have a forced choice
    Section section{3, std::vector<std::uint8_t>(vertex_count(3), 0)};
    for (Vertex s = 1; s < vertex_count(3); ++s)
        section.choice[s] = std::popcount(s) >= 2
                                ? ss.dir[s]
                                : static_cast<std::uint8_t>(std::countr_zero(s) + 1);
    SpanningTree cur = upright_of_section(section);

    // partitions on the upright tree, read off the signs
    std::array<EdgePartition, 4> parts;
    for (int i = 1; i <= 3; ++i) {
        EdgePartition& part = parts[static_cast<std::size_t>(i)];
        part.pinned = CubeEdge{0, i};
        for (Vertex s = 1; s < vertex_count(3); ++s) {
            if (std::popcount(s) < 2 || ss.dir[s] != i) continue;
            (ss.sign[s] > 0 ? part.down_reversible : part.up_reversible)
                .push_back(first_root_path_edge(s, i));
        }
    }

    for (const int i : {1, 2, 3}) {
        const std::vector<SlideMove> moves = slidable_edges(cur, i);
        std::vector<std::pair<CubeEdge, CubeEdge>> reverser;  // reversed -> slid
        for (const SlideMove& m : moves)
            reverser.emplace_back(reversed_edge(cur, m.edge, i), m.edge);

        EdgePartition& part = parts[static_cast<std::size_t>(i)];
        std::vector<CubeEdge> target = part.down_reversible;
        // the currently unreversible dir-edge cannot be slid back; reverse the
        // tracked pinned edge in its place, undoing the normalization swap
        for (const CubeEdge& e : cur.edges) {
            if (e.dir != i) continue;
            bool reversible = false;
            for (const auto& [f, slid] : reverser) reversible = reversible || f == e;
            if (reversible) continue;
            const auto it = std::find(target.begin(), target.end(), e);
            if (it != target.end()) {
                *it = part.pinned;
            }
        }
        std::sort(target.begin(), target.end());
        for (const CubeEdge& f : target) {
            const auto it = std::find_if(
                reverser.begin(), reverser.end(),
                [&](const std::pair<CubeEdge, CubeEdge>& r) { return r.first == f; });
            if (it == reverser.end())
                throw std::invalid_argument("signed section asks to reverse " +
                                            edge_str(f) +
                                            ", which no slide can reach");
            const TraceMove mv{it->second, i};
            cur = slide(cur, it->second, i);
            for (int j = 1; j <= 3; ++j)
                transport(parts[static_cast<std::size_t>(j)], mv);
        }
    }

    if (!(to_signed_section(cur) == ss))
        throw std::invalid_argument("inconsistent signed section: round trip failed");
    return cur;
}

std::vector<int> section_q_exponents(const SignedSection& ss) {
    std::vector<int> q(static_cast<std::size_t>(ss.n), 1);
    for (Vertex s = 1; s < vertex_count(ss.n); ++s)
        if (std::popcount(s) >= 2) ++q[static_cast<std::size_t>(ss.dir[s] - 1)];
    return q;
}

std::vector<int> section_x_exponents(const SignedSection& ss) {
    std::vector<int> x(static_cast<std::size_t>(ss.n), 0);
    for (Vertex s = 1; s < vertex_count(ss.n); ++s)
        if (std::popcount(s) >= 2) x[static_cast<std::size_t>(ss.dir[s] - 1)] += ss.sign[s];
    return x;
}

}  // namespace cubeslides
