#include "cubeslides/slides.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cubeslides/union_find.hpp"

namespace cubeslides {
namespace {

CubeEdge reflect_edge_unchecked(const CubeEdge& e, int dir) {
    return CubeEdge{e.lower ^ direction_bit(dir), e.dir};
}

CubeEdge path_edge(Vertex a, Vertex b) {
    const int dir = std::countr_zero(a ^ b) + 1;
    return CubeEdge{a & ~direction_bit(dir), dir};
}

void require_tree_edge(const SpanningTree& tree, const CubeEdge& e) {
    if (!tree.contains(e))
        throw std::invalid_argument("edge " + edge_str(e) + " is not in the tree");
}

void require_slide_dir(const CubeEdge& e, int dir) {
    if (dir == e.dir)
        throw std::invalid_argument("cannot slide edge " + edge_str(e) +
                                    " in its own direction " + std::to_string(dir));
}

// tree - e has exactly two components; the replacement works iff it rejoins
// them, i.e. its endpoints land on opposite sides.
bool replacement_reconnects(const SpanningTree& tree, const CubeEdge& removed,
                            const CubeEdge& added) {
    UnionFind uf(vertex_count(tree.n));
    for (const CubeEdge& f : tree.edges) {
        if (f == removed) continue;
        uf.unite(static_cast<std::uint16_t>(f.lower),
                 static_cast<std::uint16_t>(f.upper()));
    }
    return uf.find(static_cast<std::uint16_t>(added.lower)) !=
           uf.find(static_cast<std::uint16_t>(added.upper()));
}

// Vertices of the component of tree - e not containing the root.
std::vector<bool> offroot_component(const SpanningTree& tree, const RootedTree& rooted,
                                    const CubeEdge& e) {
    const Vertex child =
        rooted.parent[e.lower] == e.upper() ? e.lower : e.upper();
    std::vector<bool> in_plus(vertex_count(tree.n), false);
    std::vector<Vertex> queue{child};
    in_plus[child] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (std::uint32_t bits = rooted.adj[v]; bits != 0; bits &= bits - 1) {
            const int d = std::countr_zero(bits) + 1;
            const Vertex w = v ^ direction_bit(d);
            if (in_plus[w] || path_edge(v, w) == e) continue;
            in_plus[w] = true;
            queue.push_back(w);
        }
    }
    return in_plus;
}

}  // namespace

// Walks the first edge joining two already-connected vertices, plus the
// forest path between its endpoints.
std::vector<Vertex> cycle_certificate(int n, const std::vector<CubeEdge>& edges) {
    UnionFind uf(vertex_count(n));
    std::vector<CubeEdge> forest;
    for (const CubeEdge& e : edges) {
        if (uf.unite(static_cast<std::uint16_t>(e.lower),
                     static_cast<std::uint16_t>(e.upper()))) {
            forest.push_back(e);
            continue;
        }
        // BFS through the forest from one endpoint to the other
        std::vector<std::uint8_t> adj(vertex_count(n), 0);
        for (const CubeEdge& f : forest) {
            adj[f.lower] |= static_cast<std::uint8_t>(1u << (f.dir - 1));
            adj[f.upper()] |= static_cast<std::uint8_t>(1u << (f.dir - 1));
        }
        std::vector<Vertex> prev(vertex_count(n), vertex_count(n));
        std::vector<Vertex> queue{e.lower};
        prev[e.lower] = e.lower;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            for (std::uint32_t bits = adj[v]; bits != 0; bits &= bits - 1) {
                const int d = std::countr_zero(bits) + 1;
                const Vertex w = v ^ direction_bit(d);
                if (prev[w] != vertex_count(n)) continue;
                prev[w] = v;
                queue.push_back(w);
            }
        }
        std::vector<Vertex> path;
        for (Vertex v = e.upper(); v != e.lower; v = prev[v]) path.push_back(v);
        path.push_back(e.lower);
        std::reverse(path.begin(), path.end());  // lower .. upper
        path.push_back(e.lower);                 // close through e
        return path;
    }
    throw std::logic_error("cycle_certificate called on an acyclic edge set");
}

bool is_slidable(const SpanningTree& tree, const CubeEdge& e, int dir) {
    require_tree_edge(tree, e);
    require_direction(tree.n, dir);
    require_slide_dir(e, dir);
    const CubeEdge moved = reflect_edge_unchecked(e, dir);
    if (tree.contains(moved)) return false;
    return replacement_reconnects(tree, e, moved);
}

std::vector<SlideMove> slidable_edges(const SpanningTree& tree, int dir) {
    require_direction(tree.n, dir);
    std::vector<SlideMove> moves;
    for (const CubeEdge& e : tree.edges) {
        if (e.dir == dir) continue;
        const CubeEdge moved = reflect_edge_unchecked(e, dir);
        if (tree.contains(moved)) continue;
        if (!replacement_reconnects(tree, e, moved)) continue;
        moves.push_back(SlideMove{
            e, dir, e.in_lower_face(dir) ? Vertical::up : Vertical::down});
    }
    // order by the reflection orbit so the list is stable across the class
    std::sort(moves.begin(), moves.end(),
              [dir](const SlideMove& a, const SlideMove& b) {
                  const CubeEdge ra{a.edge.lower & ~direction_bit(dir), a.edge.dir};
                  const CubeEdge rb{b.edge.lower & ~direction_bit(dir), b.edge.dir};
                  return ra < rb;
              });
    return moves;
}

std::vector<SlideMove> all_slide_moves(const SpanningTree& tree) {
    std::vector<SlideMove> moves;
    for (int dir = 1; dir <= tree.n; ++dir) {
        std::vector<SlideMove> part = slidable_edges(tree, dir);
        std::sort(part.begin(), part.end(), [](const SlideMove& a, const SlideMove& b) {
            return a.edge < b.edge;
        });
        moves.insert(moves.end(), part.begin(), part.end());
    }
    return moves;
}

SpanningTree slide(const SpanningTree& tree, const CubeEdge& e, int dir) {
    require_tree_edge(tree, e);
    require_direction(tree.n, dir);
    require_slide_dir(e, dir);
    const CubeEdge moved = reflect_edge_unchecked(e, dir);
    if (tree.contains(moved))
        throw std::invalid_argument("cannot slide " + edge_str(e) + " in direction " +
                                    std::to_string(dir) + ": replacement edge " +
                                    edge_str(moved) + " already in tree");
    if (!replacement_reconnects(tree, e, moved))
        throw std::invalid_argument(
            "cannot slide " + edge_str(e) + " in direction " + std::to_string(dir) +
            ": result has a cycle through " + edge_str(moved) +
            " and disconnects the far side of " + edge_str(e));
    std::vector<CubeEdge> edges;
    edges.reserve(tree.edges.size());
    for (const CubeEdge& f : tree.edges)
        if (!(f == e)) edges.push_back(f);
    edges.insert(std::upper_bound(edges.begin(), edges.end(), moved), moved);
    return SpanningTree{tree.n, std::move(edges)};
}

std::vector<CubeEdge> flipped_edges(const SpanningTree& tree, const CubeEdge& e,
                                    int dir) {
    const SpanningTree after = slide(tree, e, dir);
    const Orientation before_o = orientation(tree);
    const Orientation after_o = orientation(after);
    std::vector<CubeEdge> flips;
    for (std::size_t k = 0; k < tree.edges.size(); ++k) {
        const CubeEdge& f = tree.edges[k];
        if (f == e) continue;
        if (before_o.mu[k] != mu_of(after, after_o, f)) flips.push_back(f);
    }
    return flips;
}

std::vector<CubeEdge> flip_set_via_cycle(const SpanningTree& tree, const CubeEdge& e,
                                         int dir) {
    require_tree_edge(tree, e);
    const CubeEdge moved = reflect_edge_unchecked(e, dir);
    const RootedTree rooted = root_tree(tree);
    const std::vector<bool> in_plus = offroot_component(tree, rooted, e);
    const std::vector<Vertex> cycle_path =
        tree_path(rooted, moved.lower, moved.upper());
    std::vector<CubeEdge> flips;
    for (std::size_t j = 0; j + 1 < cycle_path.size(); ++j) {
        const CubeEdge f = path_edge(cycle_path[j], cycle_path[j + 1]);
        if (f == e) continue;
        if (in_plus[f.lower] && in_plus[f.upper()]) flips.push_back(f);
    }
    std::sort(flips.begin(), flips.end());
    return flips;
}

CubeEdge reversed_edge(const SpanningTree& tree, const CubeEdge& e, int dir) {
    const SpanningTree after = slide(tree, e, dir);
    const Orientation before_o = orientation(tree);
    const Orientation after_o = orientation(after);
    const CubeEdge moved = reflect_edge_unchecked(e, dir);
    // in the square faces of Q_3 the slid edge always hands its orientation
    // to its reflection; for n >= 4 that can fail, and so can uniqueness
    if (mu_of(tree, before_o, e) != mu_of(after, after_o, moved))
        throw std::logic_error("slid edge " + edge_str(e) +
                               " did not keep its orientation");
    std::vector<CubeEdge> flips;
    for (std::size_t k = 0; k < tree.edges.size(); ++k) {
        const CubeEdge& f = tree.edges[k];
        if (f.dir != dir || f == e) continue;
        if (before_o.mu[k] != mu_of(after, after_o, f)) flips.push_back(f);
    }
    if (flips.size() != 1)
        throw std::logic_error("slide of " + edge_str(e) + " in direction " +
                               std::to_string(dir) + " reversed " +
                               std::to_string(flips.size()) +
                               " direction edges, expected exactly one");
    return flips.front();
}

std::vector<Vertex> path_between_edges(const SpanningTree& tree, const CubeEdge& e1,
                                       const CubeEdge& e2, int dir) {
    require_direction(tree.n, dir);
    require_tree_edge(tree, e1);
    require_tree_edge(tree, e2);
    if (e1.dir != dir || e2.dir != dir)
        throw std::invalid_argument("both edges must be in direction " +
                                    std::to_string(dir));
    if (e1 == e2) throw std::invalid_argument("need two distinct edges");

    const RootedTree rooted = root_tree(tree);
    std::vector<Vertex> path = tree_path(rooted, e1.lower, e2.lower);
    // keep the segment strictly between the two edges
    if (path.size() >= 2 && path_edge(path[0], path[1]) == e1)
        path.erase(path.begin());
    if (path.size() >= 2 && path_edge(path[path.size() - 2], path.back()) == e2)
        path.pop_back();
    // "meeting" a dir-edge includes touching it at a vertex; cut the segment
    // at the first vertex carrying one (each vertex has at most one, and the
    // segment ends belong to e1/e2 themselves)
    for (std::size_t j = 1; j + 1 < path.size(); ++j)
        if (tree.contains(CubeEdge{path[j] & ~direction_bit(dir), dir})) {
            path.resize(j + 1);
            break;
        }
    // distinct direction edges are vertex disjoint, so at least one edge remains
    if (path.size() < 2)
        throw std::logic_error("degenerate path between direction edges");
    return path;
}

CubeEdge find_slidable_on_path(const SpanningTree& tree, const CubeEdge& e1,
                               const CubeEdge& e2, int dir) {
    const std::vector<Vertex> path = path_between_edges(tree, e1, e2, dir);
    const RootedTree rooted = root_tree(tree);

    std::vector<std::uint32_t> pos(vertex_count(tree.n), UINT32_MAX);
    for (std::size_t j = 0; j < path.size(); ++j)
        pos[path[j]] = static_cast<std::uint32_t>(j);

    // first path vertex reached from the reflected copy of each path vertex
    std::vector<std::uint32_t> landing(path.size(), UINT32_MAX);
    for (std::size_t j = 0; j < path.size(); ++j) {
        const std::vector<Vertex> back =
            tree_path(rooted, path[j] ^ direction_bit(dir), path[j]);
        for (const Vertex v : back)
            if (pos[v] != UINT32_MAX) {
                landing[j] = pos[v];
                break;
            }
    }

    for (std::size_t l = 0; l + 1 < path.size(); ++l) {
        const bool left_side = landing[l] <= l;
        const bool right_side = landing[l + 1] <= l;
        if (left_side == right_side) continue;
        const CubeEdge f = path_edge(path[l], path[l + 1]);
        if (tree.contains(reflect_edge_unchecked(f, dir))) continue;
        if (is_slidable(tree, f, dir)) return f;
    }
    throw std::logic_error("no slidable edge found on the path between " +
                           edge_str(e1) + " and " + edge_str(e2));
}

std::variant<SlideClass, DependenceReport> slide_class(const SpanningTree& tree,
                                                       int dir) {
    const std::vector<SlideMove> moves = slidable_edges(tree, dir);
    if (moves.size() > 20)
        throw std::invalid_argument("slide class with " +
                                    std::to_string(moves.size()) +
                                    " slots is too large to materialize");
    SlideClass cls;
    cls.base = tree;
    cls.dir = dir;
    for (const SlideMove& m : moves) cls.slidable.push_back(m.edge);
    const std::uint32_t total = 1u << moves.size();
    for (std::uint32_t eps = 0; eps < total; ++eps) {
        std::vector<CubeEdge> edges = tree.edges;
        for (std::size_t j = 0; j < moves.size(); ++j) {
            if (!((eps >> j) & 1u)) continue;
            const CubeEdge& from = moves[j].edge;
            *std::find(edges.begin(), edges.end(), from) =
                reflect_edge_unchecked(from, dir);
        }
        std::sort(edges.begin(), edges.end());
        if (!is_spanning_tree_edge_set(tree.n, edges))
            return DependenceReport{eps, cycle_certificate(tree.n, edges)};
        cls.members.push_back(SpanningTree{tree.n, std::move(edges)});
    }
    return cls;
}

std::pair<SpanningTree, std::vector<TraceMove>> retract_direction_traced(
    const SpanningTree& tree, int dir, SlotOrder order) {
    if (tree.n != 3)
        throw std::invalid_argument("directional retraction is defined for n=3 only");
    std::vector<SlideMove> moves = slidable_edges(tree, dir);
    if (order == SlotOrder::descending) std::reverse(moves.begin(), moves.end());
    std::vector<TraceMove> trace;
    SpanningTree cur = tree;
    for (const SlideMove& m : moves) {
        if (m.vertical != Vertical::down) continue;
        cur = slide(cur, m.edge, dir);  // independent slides, order immaterial
        trace.push_back(TraceMove{m.edge, dir});
    }
    return {std::move(cur), std::move(trace)};
}

SpanningTree retract_direction(const SpanningTree& tree, int dir) {
    return retract_direction_traced(tree, dir).first;
}

SpanningTree retract(const SpanningTree& tree) {
    return retract_direction(retract_direction(retract_direction(tree, 3), 2), 1);
}

NormalizeResult normalize_downward(const SpanningTree& tree) {
    SpanningTree cur = tree;
    std::size_t count = 0;
    for (;;) {
        const std::vector<SlideMove> moves = all_slide_moves(cur);
        const auto it = std::find_if(moves.begin(), moves.end(), [](const SlideMove& m) {
            return m.vertical == Vertical::down;
        });
        if (it == moves.end()) break;
        cur = slide(cur, it->edge, it->dir);
        ++count;
    }
    return NormalizeResult{std::move(cur), count};
}

}  // namespace cubeslides
