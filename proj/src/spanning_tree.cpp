#include "cubeslides/spanning_tree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cubeslides/union_find.hpp"

namespace cubeslides {

bool SpanningTree::contains(const CubeEdge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

SpanningTree tree_from_edges(int n, std::vector<CubeEdge> edges) {
    require_n(n);
    for (const CubeEdge& e : edges) require_edge(n, e);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    UnionFind uf(vertex_count(n));
    for (const CubeEdge& e : edges)
        if (!uf.unite(static_cast<std::uint16_t>(e.lower),
                      static_cast<std::uint16_t>(e.upper())))
            throw std::invalid_argument("edge set contains a cycle through " +
                                        edge_str(e));

    const std::uint32_t want = vertex_count(n) - 1;
    if (edges.size() != want)
        throw std::invalid_argument("spanning tree of Q_" + std::to_string(n) +
                                    " needs " + std::to_string(want) + " edges, got " +
                                    std::to_string(edges.size()));
    if (uf.components != 1)
        throw std::invalid_argument("edge set does not connect Q_" +
                                    std::to_string(n));
    return SpanningTree{n, std::move(edges)};
}

bool is_spanning_tree_edge_set(int n, const std::vector<CubeEdge>& edges) {
    if (edges.size() != vertex_count(n) - 1) return false;
    UnionFind uf(vertex_count(n));
    for (const CubeEdge& e : edges)
        if (!uf.unite(static_cast<std::uint16_t>(e.lower),
                      static_cast<std::uint16_t>(e.upper())))
            return false;
    return uf.components == 1;
}

RootedTree root_tree(const SpanningTree& tree) {
    const std::uint32_t nv = vertex_count(tree.n);
    RootedTree rt;
    rt.parent.assign(nv, 0);
    rt.parent_dir.assign(nv, 0);
    rt.depth.assign(nv, 0);
    rt.adj.assign(nv, 0);
    for (const CubeEdge& e : tree.edges) {
        rt.adj[e.lower] |= static_cast<std::uint8_t>(1u << (e.dir - 1));
        rt.adj[e.upper()] |= static_cast<std::uint8_t>(1u << (e.dir - 1));
    }
    // BFS from the root; the tree is connected so a plain queue sweep works
    std::vector<Vertex> queue;
    std::vector<bool> seen(nv, false);
    queue.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (std::uint32_t bits = rt.adj[v]; bits != 0; bits &= bits - 1) {
            const int d = std::countr_zero(bits) + 1;
            const Vertex w = v ^ direction_bit(d);
            if (seen[w]) continue;
            seen[w] = true;
            rt.parent[w] = v;
            rt.parent_dir[w] = static_cast<std::uint8_t>(d);
            rt.depth[w] = static_cast<std::uint16_t>(rt.depth[v] + 1);
            queue.push_back(w);
        }
    }
    return rt;
}

std::vector<Vertex> tree_path(const RootedTree& rooted, Vertex from, Vertex to) {
    std::vector<Vertex> head{from};
    std::vector<Vertex> tail{to};
    Vertex a = from, b = to;
    while (a != b) {
        if (rooted.depth[a] >= rooted.depth[b]) {
            a = rooted.parent[a];
            head.push_back(a);
        } else {
            b = rooted.parent[b];
            tail.push_back(b);
        }
    }
    head.pop_back();  // meeting vertex is already in tail
    head.insert(head.end(), tail.rbegin(), tail.rend());
    return head;
}

Orientation orientation(const SpanningTree& tree) {
    return orientation(tree, root_tree(tree));
}

Orientation orientation(const SpanningTree& tree, const RootedTree& rooted) {
    Orientation o;
    o.mu.reserve(tree.edges.size());
    for (const CubeEdge& e : tree.edges) {
        // exactly one endpoint is the parent of the other
        const bool lower_is_child = rooted.parent[e.lower] == e.upper();
        o.mu.push_back(lower_is_child ? std::int8_t{+1} : std::int8_t{-1});
    }
    return o;
}

std::int8_t mu_of(const SpanningTree& tree, const Orientation& orient,
                  const CubeEdge& e) {
    const auto it = std::lower_bound(tree.edges.begin(), tree.edges.end(), e);
    if (it == tree.edges.end() || !(*it == e))
        throw std::invalid_argument("edge " + edge_str(e) + " not in tree");
    return orient.mu[static_cast<std::size_t>(it - tree.edges.begin())];
}

std::vector<int> direction_monomial(const SpanningTree& tree) {
    std::vector<int> k(static_cast<std::size_t>(tree.n), 0);
    for (const CubeEdge& e : tree.edges) ++k[static_cast<std::size_t>(e.dir - 1)];
    return k;
}

std::string signature_str(const Signature& sig) {
    std::string out = "(";
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sig[i]);
    }
    out += ')';
    return out;
}

std::vector<int> dd_exponents_edgewise(const SpanningTree& tree) {
    std::vector<int> x(static_cast<std::size_t>(tree.n), 0);
    for (const CubeEdge& e : tree.edges)
        for (int j = 1; j <= tree.n; ++j) {
            if (j == e.dir) continue;
            x[static_cast<std::size_t>(j - 1)] += has_element(e.lower, j) ? 1 : -1;
        }
    return x;
}

std::vector<int> dd_exponents_oriented(const SpanningTree& tree) {
    const Orientation o = orientation(tree);
    std::vector<int> x(static_cast<std::size_t>(tree.n), 1);
    for (std::size_t i = 0; i < tree.edges.size(); ++i)
        x[static_cast<std::size_t>(tree.edges[i].dir - 1)] += o.mu[i];
    return x;
}

bool is_upright(const SpanningTree& tree) {
    const Orientation o = orientation(tree);
    return std::all_of(o.mu.begin(), o.mu.end(),
                       [](std::int8_t m) { return m == -1; });
}

std::uint16_t tree_mask3(const SpanningTree& tree) {
    if (tree.n != 3)
        throw std::invalid_argument("tree_mask3 requires n=3, got n=" +
                                    std::to_string(tree.n));
    std::uint16_t mask = 0;
    for (const CubeEdge& e : tree.edges)
        mask |= static_cast<std::uint16_t>(1u << edge_index(3, e));
    return mask;
}

SpanningTree tree_from_mask3(std::uint16_t mask) {
    if (mask >= (1u << 12))
        throw std::invalid_argument("Q_3 edge mask must fit in 12 bits");
    std::vector<CubeEdge> edges;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1)
        edges.push_back(edge_at(3, static_cast<std::uint32_t>(std::countr_zero(bits))));
    return tree_from_edges(3, std::move(edges));
}

std::string encode(const SpanningTree& tree) {
    if (tree.n == 3) return std::to_string(tree_mask3(tree));
    std::string out;
    for (std::size_t i = 0; i < tree.edges.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(edge_index(tree.n, tree.edges[i]));
    }
    return out;
}

SpanningTree decode(int n, const std::string& payload) {
    require_n(n);
    std::vector<CubeEdge> edges;
    if (n == 3) {
        std::size_t pos = 0;
        const unsigned long mask = std::stoul(payload, &pos);
        if (pos != payload.size() || mask >= (1u << 12))
            throw std::invalid_argument("bad Q_3 mask payload: " + payload);
        return tree_from_mask3(static_cast<std::uint16_t>(mask));
    }
    std::size_t start = 0;
    while (start < payload.size()) {
        std::size_t used = 0;
        const unsigned long k = std::stoul(payload.substr(start), &used);
        edges.push_back(edge_at(n, static_cast<std::uint32_t>(k)));
        start += used;
        if (start < payload.size()) {
            if (payload[start] != ',')
                throw std::invalid_argument("bad edge list payload: " + payload);
            ++start;
        }
    }
    return tree_from_edges(n, std::move(edges));
}

}  // namespace cubeslides
