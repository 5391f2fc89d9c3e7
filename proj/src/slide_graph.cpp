#include "cubeslides/slide_graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cubeslides/enumerate.hpp"
#include "cubeslides/parallel.hpp"

namespace cubeslides {
namespace {

void fill_node(const std::vector<std::uint16_t>& nodes,
               const std::vector<std::uint16_t>& node_index, std::uint32_t i,
               std::vector<std::uint32_t>& adj, std::vector<SlideMove>& moves) {
    const SpanningTree tree = tree_from_mask3(nodes[i]);
    for (const SlideMove& m : all_slide_moves(tree)) {
        const std::uint16_t neighbour = tree_mask3(slide(tree, m.edge, m.dir));
        adj.push_back(node_index[neighbour]);
        moves.push_back(m);
    }
}

}  // namespace

std::size_t SlideGraph::edge_total() const {
    std::size_t degree_sum = 0;
    for (const auto& a : adj) degree_sum += a.size();
    return degree_sum / 2;
}

std::uint32_t SlideGraph::index_of(std::uint16_t mask) const {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), mask);
    if (it == nodes.end() || *it != mask)
        throw std::invalid_argument("mask " + std::to_string(mask) +
                                    " is not a spanning tree of Q_3");
    return static_cast<std::uint32_t>(it - nodes.begin());
}

namespace {

SlideGraph build_impl(int threads) {
    SlideGraph g;
    for (const SpanningTree& t : enumerate_spanning_trees(3))
        g.nodes.push_back(tree_mask3(t));
    // enumeration order is ascending mask order already
    std::vector<std::uint16_t> node_index(1u << 12, 0);
    for (std::uint32_t i = 0; i < g.nodes.size(); ++i)
        node_index[g.nodes[i]] = static_cast<std::uint16_t>(i);
    g.adj.resize(g.nodes.size());
    g.moves.resize(g.nodes.size());
    if (threads == 1) {
        for (std::uint32_t i = 0; i < g.nodes.size(); ++i)
            fill_node(g.nodes, node_index, i, g.adj[i], g.moves[i]);
    } else {
#pragma omp parallel for num_threads(threads) schedule(dynamic, 8)
        for (std::uint32_t i = 0; i < g.nodes.size(); ++i)
            fill_node(g.nodes, node_index, i, g.adj[i], g.moves[i]);
    }
    return g;
}

}  // namespace

SlideGraph build_slide_graph_serial() { return build_impl(1); }

SlideGraph build_slide_graph(int threads) {
    return build_impl(resolve_threads(threads));
}

std::vector<ComponentRecord> components(const SlideGraph& graph) {
    std::vector<bool> seen(graph.nodes.size(), false);
    std::vector<ComponentRecord> records;
    for (std::uint32_t start = 0; start < graph.nodes.size(); ++start) {
        if (seen[start]) continue;
        ComponentRecord rec;
        std::vector<std::uint32_t> queue{start};
        seen[start] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t v = queue[head];
            rec.members.push_back(graph.nodes[v]);
            for (const std::uint32_t w : graph.adj[v]) {
                if (seen[w]) continue;
                seen[w] = true;
                queue.push_back(w);
            }
        }
        std::sort(rec.members.begin(), rec.members.end());
        rec.size = rec.members.size();
        const SpanningTree first = tree_from_mask3(rec.members.front());
        rec.signature = direction_monomial(first);
        for (const std::uint16_t mask : rec.members)
            if (is_upright(tree_from_mask3(mask))) ++rec.upright_count;
        rec.q4_isomorphic = rec.size == 16 && certify_q4_component(graph, rec);
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(),
              [](const ComponentRecord& a, const ComponentRecord& b) {
                  return a.id() < b.id();
              });
    return records;
}

bool certify_q4_component(const SlideGraph& graph, const ComponentRecord& comp) {
    if (comp.size != 16)
        throw std::invalid_argument("4-cube certification needs a 16-tree component");
    const SpanningTree base = tree_from_mask3(comp.members.front());
    const std::vector<SlideMove> moves = all_slide_moves(base);
    if (moves.size() != 4) return false;

    // group the moves into slots by the edge they slide; a slot may carry
    // several slide directions (the vertical edge of a k_i = 1 tree slides
    // two ways), applied as composed reflections
    std::vector<CubeEdge> slot_edge;
    std::vector<std::vector<int>> slot_dirs;
    std::vector<std::size_t> move_slot;
    for (const SlideMove& m : moves) {
        std::size_t s = 0;
        while (s < slot_edge.size() && !(slot_edge[s] == m.edge)) ++s;
        if (s == slot_edge.size()) {
            slot_edge.push_back(m.edge);
            slot_dirs.emplace_back();
        }
        slot_dirs[s].push_back(m.dir);
        move_slot.push_back(s);
    }

    std::vector<std::uint16_t> by_eps(16, 0);
    for (std::uint32_t eps = 0; eps < 16; ++eps) {
        std::vector<CubeEdge> edges = base.edges;
        for (std::size_t s = 0; s < slot_edge.size(); ++s) {
            Vertex flip = 0;
            for (std::size_t m = 0; m < moves.size(); ++m)
                if (move_slot[m] == s && ((eps >> m) & 1u))
                    flip ^= direction_bit(moves[m].dir);
            if (flip == 0) continue;
            const CubeEdge target{slot_edge[s].lower ^ flip, slot_edge[s].dir};
            *std::find(edges.begin(), edges.end(), slot_edge[s]) = target;
        }
        std::sort(edges.begin(), edges.end());
        if (!is_spanning_tree_edge_set(3, edges)) return false;
        by_eps[eps] = tree_mask3(SpanningTree{3, std::move(edges)});
    }

    // bijective onto the component
    std::vector<std::uint16_t> sorted = by_eps;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted != comp.members) return false;

    // adjacency must be exactly Hamming distance one in the choice cube
    for (std::uint32_t a = 0; a < 16; ++a) {
        const std::uint32_t ia = graph.index_of(by_eps[a]);
        for (std::uint32_t b = 0; b < 16; ++b) {
            const bool hamming1 = std::popcount(a ^ b) == 1;
            const bool adjacent =
                std::find(graph.adj[ia].begin(), graph.adj[ia].end(),
                          graph.index_of(by_eps[b])) != graph.adj[ia].end();
            if (hamming1 != adjacent) return false;
        }
    }
    return true;
}

std::string to_dot(const SlideGraph& graph) {
    std::vector<ComponentRecord> comps = components(graph);
    return to_dot(graph, comps);
}

std::string to_dot(const SlideGraph& graph, std::span<const ComponentRecord> comps) {
    std::string out = "graph edge_slide_graph {\n";
    std::vector<std::uint16_t> selected;
    for (const ComponentRecord& c : comps)
        selected.insert(selected.end(), c.members.begin(), c.members.end());
    std::sort(selected.begin(), selected.end());
    for (const std::uint16_t mask : selected) {
        const SpanningTree t = tree_from_mask3(mask);
        out += "  \"T" + std::to_string(mask) + "\" [label=\"T" + std::to_string(mask) +
               " " + signature_str(direction_monomial(t)) + "\"];\n";
    }
    for (const std::uint16_t mask : selected) {
        const std::uint32_t i = graph.index_of(mask);
        for (const std::uint32_t j : graph.adj[i]) {
            const std::uint16_t other = graph.nodes[j];
            if (other <= mask) continue;  // one line per undirected edge
            out += "  \"T" + std::to_string(mask) + "\" -- \"T" +
                   std::to_string(other) + "\";\n";
        }
    }
    out += "}\n";
    return out;
}

std::string census_csv(std::span<const ComponentRecord> comps) {
    std::string out = "signature,component_id,size,q4_certified,upright_count\n";
    for (const ComponentRecord& c : comps) {
        out += "\"" + signature_str(c.signature) + "\"," + std::to_string(c.id()) +
               "," + std::to_string(c.size) + "," +
               (c.q4_isomorphic ? "true" : "false") + "," +
               std::to_string(c.upright_count) + "\n";
    }
    return out;
}

}  // namespace cubeslides
