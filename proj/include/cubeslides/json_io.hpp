#pragma once

#include <json.hpp>

#include "cubeslides/bijection.hpp"
#include "cubeslides/search.hpp"
#include "cubeslides/spanning_tree.hpp"

namespace cubeslides {

// Wire formats. Tree record: {"n": int, "edges": [[lowerBits, dir], ...]}
// with dir 1-based and edges in canonical index order; Q_3 short form
// {"n": 3, "mask": int}. Signed section: {"n": 3, "choices": [{"set": bits,
// "dir": i, "sign": +-1}, ...]} sorted by set bits. Witness fixture:
// {"n", "tree", "dir", "kind", "epsilon"?, "cycle"?}.

nlohmann::ordered_json tree_record(const SpanningTree& tree);
nlohmann::ordered_json tree_record_mask(const SpanningTree& tree);  // n = 3
SpanningTree tree_from_record(const nlohmann::json& j);

nlohmann::ordered_json signed_section_record(const SignedSection& ss);
SignedSection signed_section_from_record(const nlohmann::json& j);

nlohmann::ordered_json witness_record(const ExcessWitness& w);
nlohmann::ordered_json witness_record(const DependentWitness& w);
ExcessWitness excess_witness_from_record(const nlohmann::json& j);
DependentWitness dependent_witness_from_record(const nlohmann::json& j);

}  // namespace cubeslides
