#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "cubeslides/spanning_tree.hpp"

namespace cubeslides {

// Exhaustive tree enumeration. n <= 3 is always allowed and returns trees in
// ascending edge-mask order. n = 4 (42 467 328 trees) must be requested with
// expensive = true and is only available in streaming form. n >= 5 is refused.
struct EnumerateOptions {
    bool expensive = false;
    int threads = 0;  // 0 = library default (CUBESLIDES_THREADS / OpenMP)
};

std::vector<SpanningTree> enumerate_spanning_trees(int n,
                                                   const EnumerateOptions& opts = {});

// Streams every spanning tree exactly once. For n <= 3 the callback runs on
// the calling thread in canonical order; for n = 4 with threads != 1 the
// callback may be invoked concurrently from several threads, in no
// particular order.
void for_each_spanning_tree(int n, const std::function<void(const SpanningTree&)>& fn,
                            const EnumerateOptions& opts = {});

// Tree count by explicit enumeration (backtracking over the edge list).
// Serial reference and OpenMP pair; both count the same set.
std::uint64_t count_spanning_trees_serial(int n, const EnumerateOptions& opts = {});
std::uint64_t count_spanning_trees(int n, const EnumerateOptions& opts = {});

// Exact spanning-tree count of Q_n via the reduced-Laplacian determinant,
// computed with fraction-free (Bareiss) integer elimination. n <= 6.
mpz_class kirchhoff_count(int n);

// Closed-form count. Evaluates both product forms
//   2^(2^n - n - 1) * prod_k k^C(n,k)   and   prod_{|S| >= 2} 2|S|
// and insists they agree before returning.
mpz_class formula_count(int n);

}  // namespace cubeslides
