#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cubeslides/spanning_tree.hpp"

namespace cubeslides {

// Multivariate Laurent polynomial with exact integer coefficients, keyed by
// exponent vectors. For tree weights the variables are q_1..q_n, x_1..x_n in
// that order, so keys have length 2n. No floating point anywhere.
class Laurent {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, long long>;

    Laurent() = default;
    static Laurent monomial(Exponents exps, long long coeff = 1);

    Laurent& operator+=(const Laurent& other);
    Laurent operator*(const Laurent& other) const;

    friend bool operator==(const Laurent&, const Laurent&) = default;

    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    std::string str() const;  // sorted, for diagnostics

private:
    Terms terms_;
};

// q^(dir T) x^(dd T) as a single monomial in q_1..q_n, x_1..x_n.
Laurent tree_weight_monomial(const SpanningTree& tree);

// Sum of tree weights over a family of trees; serial reference and OpenMP
// kernel (per-thread partial sums, merged by exact addition).
Laurent weight_sum_serial(std::span<const SpanningTree> trees);
Laurent weight_sum(std::span<const SpanningTree> trees, int threads = 0);

// The weighted-count product
//   q_1...q_n * prod_{|S| >= 2} sum_{i in S} q_i (x_i^{-1} + x_i)
// expanded as an exact Laurent polynomial.
Laurent weighted_count_product(int n);

}  // namespace cubeslides
