#include "cubeslides/laurent.hpp"

#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cubeslides/parallel.hpp"

namespace cubeslides {

Laurent Laurent::monomial(Exponents exps, long long coeff) {
    Laurent p;
    if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
    return p;
}

Laurent& Laurent::operator+=(const Laurent& other) {
    for (const auto& [exps, coeff] : other.terms_) {
        auto [it, inserted] = terms_.emplace(exps, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Laurent Laurent::operator*(const Laurent& other) const {
    Laurent out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            Exponents exps(ea.size());
            for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
            auto [it, inserted] = out.terms_.emplace(std::move(exps), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

std::string Laurent::str() const {
    std::string out;
    for (const auto& [exps, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        out += std::to_string(coeff) + "*[";
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(exps[i]);
        }
        out += ']';
    }
    return out.empty() ? "0" : out;
}

Laurent tree_weight_monomial(const SpanningTree& tree) {
    const std::vector<int> q = direction_monomial(tree);
    const std::vector<int> x = dd_exponents_oriented(tree);
    Laurent::Exponents exps;
    exps.reserve(q.size() + x.size());
    exps.insert(exps.end(), q.begin(), q.end());
    exps.insert(exps.end(), x.begin(), x.end());
    return Laurent::monomial(std::move(exps));
}

Laurent weight_sum_serial(std::span<const SpanningTree> trees) {
    Laurent sum;
    for (const SpanningTree& t : trees) sum += tree_weight_monomial(t);
    return sum;
}

Laurent weight_sum(std::span<const SpanningTree> trees, int threads) {
    const int nthreads = resolve_threads(threads);
    std::vector<Laurent> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel for num_threads(nthreads) schedule(static)
    for (std::size_t i = 0; i < trees.size(); ++i) {
#ifdef _OPENMP
        Laurent& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
        Laurent& mine = partial[0];
#endif
        mine += tree_weight_monomial(trees[i]);
    }
    Laurent sum;
    for (Laurent& p : partial) sum += p;
    return sum;
}

Laurent weighted_count_product(int n) {
    require_n(n);
    // leading q_1...q_n
    Laurent::Exponents lead(static_cast<std::size_t>(2 * n), 0);
    for (int i = 0; i < n; ++i) lead[static_cast<std::size_t>(i)] = 1;
    Laurent product = Laurent::monomial(std::move(lead));
    for (Vertex s = 0; s < vertex_count(n); ++s) {
        if (std::popcount(s) < 2) continue;
        Laurent factor;
        for (int i = 1; i <= n; ++i) {
            if (!has_element(s, i)) continue;
            for (int sign : {-1, +1}) {
                Laurent::Exponents exps(static_cast<std::size_t>(2 * n), 0);
                exps[static_cast<std::size_t>(i - 1)] = 1;       // q_i
                exps[static_cast<std::size_t>(n + i - 1)] = sign;  // x_i^{+-1}
                factor += Laurent::monomial(std::move(exps));
            }
        }
        product = product * factor;
    }
    return product;
}

}  // namespace cubeslides
