#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qsvand/dense.hpp"
#include "qsvand/displacement.hpp"

namespace qsvand {

// R = P L U with P = P_1 P_2 ... P_n, P_k swapping rows k and swaps[k-1] (0-based targets).
struct PluFactorization {
    std::vector<std::size_t> swaps;
    DenseMatrix L;  // unit lower triangular
    DenseMatrix U;  // upper triangular
    std::vector<double> pivoted_nodes;
    // Multiply-add count of the elimination loop; deterministic for a given n and alpha.
    std::uint64_t flops = 0;

    std::size_t size() const noexcept { return swaps.size(); }
};

// Generators of the Schur complement R^{(k)} at the start of elimination step k
// (before the step-k row swap), rows/columns k..n.
struct SchurState {
    std::size_t k = 0;
    DenseMatrix G;
    DenseMatrix B;
    std::vector<double> x;
};

using SchurObserver = std::function<void(const SchurState&)>;

// Gaussian elimination with partial pivoting on the generators of a Vandermonde-like
// matrix, O(alpha n^2). Pivot ties go to the smallest row index. Throws SingularMatrix.
PluFactorization gepp(const DisplacementInstance& inst, const SchurObserver& observer = {});

// Dense P L U.
DenseMatrix assemble(const PluFactorization& fact);
DenseMatrix permutation_matrix(std::span<const std::size_t> swaps);

// R z = rhs
std::vector<double> solve(const PluFactorization& fact, std::span<const double> rhs);
// R^T y = rhs
std::vector<double> solve_transposed(const PluFactorization& fact, std::span<const double> rhs);

}  // namespace qsvand
