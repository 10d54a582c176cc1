#pragma once

#include <cstddef>

#include "qsvand/dense.hpp"
#include "qsvand/poly_systems.hpp"

namespace qsvand {

// R defined by D_{1/x} R - R W_Q = G B.
struct DisplacementInstance {
    PolySystem sys;
    NodeSet nodes;
    DenseMatrix G;  // n x alpha
    DenseMatrix B;  // alpha x n

    std::size_t size() const noexcept { return sys.size(); }
    std::size_t alpha_rank() const noexcept { return G.cols(); }
};

// Checks shapes and that nodes and system agree in size; throws DimensionMismatch.
DisplacementInstance make_instance(PolySystem sys, NodeSet nodes, DenseMatrix G, DenseMatrix B);

// W_Q = N_Q M_Q^{-1}, strictly upper triangular. Rows come from O(n) structured solves.
DenseMatrix wq_dense(const PolySystem& sys);

// Dense R by a column sweep: column j of R is D_x (G B + R W_Q) column j, which only
// references columns before j. O(n^3); reference use only.
DenseMatrix materialize(const DisplacementInstance& inst);

// Rank-one generators of V_Q(x): G = (1/x_i), B = tau0 * e_1^T M_Q^{-1}.
DisplacementInstance canonical_vq_generators(const PolySystem& sys, const NodeSet& nodes);

// ||D_{1/x} R - R W_Q - G B||_inf
double displacement_residual(const DisplacementInstance& inst, const DenseMatrix& R);

}  // namespace qsvand
