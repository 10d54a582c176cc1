#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qsvand/dense.hpp"
#include "qsvand/poly_systems.hpp"

namespace qsvand {

// Column j of S holds the monomial coefficients of Q_{j}; T (when the family has one)
// holds those of the auxiliary G_j.
struct BasisMatrix {
    DenseMatrix S;
    std::optional<DenseMatrix> T;

    std::size_t size() const noexcept { return S.rows(); }
};

BasisMatrix spq_qs(const PolySystem& sys);
BasisMatrix spq_ss(const PolySystem& sys);
BasisMatrix spq_wf(const PolySystem& sys);
BasisMatrix spq(const PolySystem& sys);

// S_PQ transposed: row k holds the coefficients of Q_k. Skips T.
DenseMatrix coefficient_rows(const PolySystem& sys);

// Row vector v with v S = rhs.
std::vector<double> back_substitute(const BasisMatrix& basis, std::span<const double> rhs);
// Row vector v with v S = rhs, given S^T from coefficient_rows.
std::vector<double> back_substitute_rows(const DenseMatrix& st, std::span<const double> rhs);
// Column vector w with S w = rhs.
std::vector<double> back_substitute_column(const BasisMatrix& basis, std::span<const double> rhs);

}  // namespace qsvand
