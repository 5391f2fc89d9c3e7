#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "cubeslides/slides.hpp"
#include "cubeslides/spanning_tree.hpp"

namespace cubeslides {

// A choice function on the nonempty subsets of {1,...,n}: choice[s] is an
// element of s. choice[0] is unused. Upright trees carry exactly this data:
// choice[s] is the direction of the first edge on the path from s to the root.
struct Section {
    int n = 1;
    std::vector<std::uint8_t> choice;

    friend bool operator==(const Section&, const Section&) = default;
};

void validate_section(const Section& section);

// Same choice data restricted to subsets of size >= 2, plus a sign each.
// dir[s] and sign[s] are meaningful only when popcount(s) >= 2; other slots
// stay zero.
struct SignedSection {
    int n = 1;
    std::vector<std::uint8_t> dir;
    std::vector<std::int8_t> sign;

    friend bool operator==(const SignedSection&, const SignedSection&) = default;
};

void validate_signed_section(const SignedSection& ss);

Section section_of_upright(const SpanningTree& tree);
SpanningTree upright_of_section(const Section& section);

// Enumerates every section of the nonempty subsets (prod |S| of them) in a
// fixed odometer order. Desk scale: n <= 4.
void for_each_section(int n, const std::function<void(const Section&)>& fn);

mpz_class count_sections(int n);         // prod_{S nonempty} |S|
mpz_class count_signed_sections(int n);  // prod_{|S| >= 2} 2|S|

// How the directional retraction treats the dir-edges of a tree:
//   down_reversible: reversed by the downward slides the retraction performs
//   up_reversible:   reversible, but only by upward slides
//   pinned:          the single dir-edge no slide reverses; equivalently the
//                    dir-edge left in the root component once the slidable
//                    edges are deleted (checked, not assumed).
struct EdgePartition {
    std::vector<CubeEdge> down_reversible;
    std::vector<CubeEdge> up_reversible;
    CubeEdge pinned;
};

EdgePartition direction_partition(const SpanningTree& tree, int dir);

// The weight-preserving bijection between spanning trees of Q_3 and signed
// sections, and its inverse. tree_from_signed_section round-trips through
// to_signed_section and throws if the input is inconsistent. The slide order
// used inside the retractions must not matter; passing SlotOrder::descending
// lets tests confirm that.
SignedSection to_signed_section(const SpanningTree& tree,
                                SlotOrder order = SlotOrder::ascending);
SpanningTree tree_from_signed_section(const SignedSection& ss);

// Weight of a signed section: q_i picks up one factor per set choosing i
// (plus the global q_1..q_n), x_i one signed factor per set choosing i.
std::vector<int> section_q_exponents(const SignedSection& ss);
std::vector<int> section_x_exponents(const SignedSection& ss);

}  // namespace cubeslides
