#include "cubeslides/json_io.hpp"

#include <bit>
#include <stdexcept>

namespace cubeslides {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json tree_record(const SpanningTree& tree) {
    ordered_json edges = ordered_json::array();
    for (const CubeEdge& e : tree.edges)
        edges.push_back(ordered_json::array({e.lower, e.dir}));
    return ordered_json{{"n", tree.n}, {"edges", std::move(edges)}};
}

ordered_json tree_record_mask(const SpanningTree& tree) {
    return ordered_json{{"n", 3}, {"mask", tree_mask3(tree)}};
}

SpanningTree tree_from_record(const json& j) {
    const int n = j.at("n").get<int>();
    if (j.contains("mask")) {
        if (n != 3)
            throw std::invalid_argument("mask form is only defined for n=3");
        return tree_from_mask3(j.at("mask").get<std::uint16_t>());
    }
    std::vector<CubeEdge> edges;
    for (const auto& pair : j.at("edges")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("tree record edges must be [lower, dir] pairs");
        edges.push_back(CubeEdge{pair[0].get<Vertex>(), pair[1].get<int>()});
    }
    return tree_from_edges(n, std::move(edges));
}

ordered_json signed_section_record(const SignedSection& ss) {
    validate_signed_section(ss);
    ordered_json choices = ordered_json::array();
    for (Vertex s = 0; s < vertex_count(ss.n); ++s) {
        if (std::popcount(s) < 2) continue;
        choices.push_back(ordered_json{{"set", s},
                                       {"dir", ss.dir[s]},
                                       {"sign", static_cast<int>(ss.sign[s])}});
    }
    return ordered_json{{"n", ss.n}, {"choices", std::move(choices)}};
}

SignedSection signed_section_from_record(const json& j) {
    const int n = j.at("n").get<int>();
    require_n(n);
    SignedSection ss{n, std::vector<std::uint8_t>(vertex_count(n), 0),
                     std::vector<std::int8_t>(vertex_count(n), 0)};
    for (const auto& choice : j.at("choices")) {
        const Vertex s = choice.at("set").get<Vertex>();
        require_vertex(n, s);
        if (std::popcount(s) < 2)
            throw std::invalid_argument("signed section sets need size >= 2");
        ss.dir[s] = choice.at("dir").get<std::uint8_t>();
        ss.sign[s] = static_cast<std::int8_t>(choice.at("sign").get<int>());
    }
    validate_signed_section(ss);
    return ss;
}

ordered_json witness_record(const ExcessWitness& w) {
    ordered_json tree = ordered_json::array();
    for (const CubeEdge& e : w.tree.edges)
        tree.push_back(ordered_json::array({e.lower, e.dir}));
    return ordered_json{
        {"n", w.tree.n}, {"tree", std::move(tree)}, {"dir", w.dir}, {"kind", "excess"}};
}

ordered_json witness_record(const DependentWitness& w) {
    ordered_json tree = ordered_json::array();
    for (const CubeEdge& e : w.tree.edges)
        tree.push_back(ordered_json::array({e.lower, e.dir}));
    ordered_json epsilon = ordered_json::array();
    for (std::size_t j = 0; j < w.slidable.size(); ++j)
        epsilon.push_back((w.epsilon >> j) & 1u);
    ordered_json cycle = ordered_json::array();
    for (const Vertex v : w.cycle) cycle.push_back(v);
    return ordered_json{{"n", w.tree.n},   {"tree", std::move(tree)},
                        {"dir", w.dir},    {"kind", "dependent"},
                        {"epsilon", std::move(epsilon)}, {"cycle", std::move(cycle)}};
}

namespace {

SpanningTree witness_tree(const json& j) {
    const int n = j.at("n").get<int>();
    std::vector<CubeEdge> edges;
    for (const auto& pair : j.at("tree"))
        edges.push_back(CubeEdge{pair[0].get<Vertex>(), pair[1].get<int>()});
    return tree_from_edges(n, std::move(edges));
}

}  // namespace

ExcessWitness excess_witness_from_record(const json& j) {
    if (j.at("kind").get<std::string>() != "excess")
        throw std::invalid_argument("fixture kind is not 'excess'");
    ExcessWitness w;
    w.tree = witness_tree(j);
    w.dir = j.at("dir").get<int>();
    require_direction(w.tree.n, w.dir);
    w.direction_edges = direction_monomial(w.tree)[static_cast<std::size_t>(w.dir - 1)];
    w.slidable = slidable_edges(w.tree, w.dir);
    return w;
}

DependentWitness dependent_witness_from_record(const json& j) {
    if (j.at("kind").get<std::string>() != "dependent")
        throw std::invalid_argument("fixture kind is not 'dependent'");
    DependentWitness w;
    w.tree = witness_tree(j);
    w.dir = j.at("dir").get<int>();
    require_direction(w.tree.n, w.dir);
    for (const SlideMove& m : slidable_edges(w.tree, w.dir))
        w.slidable.push_back(m.edge);
    const auto& epsilon = j.at("epsilon");
    if (epsilon.size() != w.slidable.size())
        throw std::invalid_argument("epsilon length does not match the slidable set");
    for (std::size_t k = 0; k < epsilon.size(); ++k)
        if (epsilon[k].get<int>() != 0) w.epsilon |= 1u << k;
    for (const auto& v : j.at("cycle")) w.cycle.push_back(v.get<Vertex>());
    return w;
}

}  // namespace cubeslides
