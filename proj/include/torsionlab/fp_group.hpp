#pragma once

// Finitely presented abelian groups: generator symbols plus an integer
// relation matrix, with Smith-normal-form structure data. Element orders
// and torsion structure fall out of the SNF diagonal.

#include <torsionlab/matrix.hpp>

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torsionlab {

struct GroupElement {
    std::vector<Int> coeffs;
};

struct FPAbelianGroup {
    std::vector<std::string> generator_names;
    IntMatrix relations;  // rows are relations
    SmithForm snf;

    FPAbelianGroup(std::vector<std::string> names, IntMatrix rels)
        : generator_names(std::move(names)), relations(std::move(rels)), snf(smith_normal_form(relations)) {
        if (relations.cols != generator_names.size())
            throw std::invalid_argument("FPAbelianGroup: relation width must match generator count");
        if (!verify_smith(relations, snf)) throw std::logic_error("FPAbelianGroup: SNF reconstruction failed");
    }

    std::size_t rank_free() const { return generator_names.size() - snf.rank; }

    // Nontrivial invariant factors d_i > 1.
    std::vector<Int> torsion_factors() const {
        std::vector<Int> fs;
        for (std::size_t i = 0; i < snf.rank; ++i) {
            Int d = snf.D(i, i);
            if (d > 1) fs.push_back(d);
        }
        return fs;
    }

    GroupElement element(const std::vector<Int>& coeffs) const {
        if (coeffs.size() != generator_names.size())
            throw std::invalid_argument("FPAbelianGroup: coefficient length mismatch");
        return GroupElement{coeffs};
    }
};

// Least n > 0 with n*x in the relation lattice; nullopt = infinite order.
// With x' = x V, the lattice condition reads d_i | n*x'_i per diagonal
// slot, and x'_i = 0 where the diagonal is exhausted or zero.
inline std::optional<Int> element_order(const FPAbelianGroup& G, const GroupElement& x) {
    std::size_t m = G.generator_names.size();
    std::vector<Int> y(m, 0);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) y[j] += x.coeffs[i] * G.snf.V(i, j);
    Int order = 1;
    std::size_t diag = std::min(G.relations.rows, G.relations.cols);
    for (std::size_t i = 0; i < m; ++i) {
        Int d = i < diag ? G.snf.D(i, i) : Int(0);
        if (d == 0) {
            if (y[i] != 0) return std::nullopt;
            continue;
        }
        Int g = gcd(d, y[i]);
        Int ni = d / g;
        order = order / gcd(order, ni) * ni;  // lcm
    }
    return order;
}

}  // namespace torsionlab
