#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qsvand/dense.hpp"

// Structure-ignoring O(n^3) reference routines.
namespace qsvand::oracle {

struct DensePlu {
    std::vector<std::size_t> swaps;  // same convention as PluFactorization::swaps
    DenseMatrix L;
    DenseMatrix U;
};

// Textbook partial pivoting; ties go to the smallest row index.
DensePlu dense_gepp(const DenseMatrix& a);
std::vector<double> dense_solve(const DenseMatrix& a, std::span<const double> b);
DenseMatrix dense_inverse(const DenseMatrix& a);
DenseMatrix dense_matmul(const DenseMatrix& a, const DenseMatrix& b);
// sum_k d_k W^{k-1}
DenseMatrix matrix_power_sum(const DenseMatrix& w, std::span<const double> d);
// ||A||_inf ||A^{-1}||_inf
double cond_estimate(const DenseMatrix& a);
// Singular values, one-sided Jacobi; descending.
std::vector<double> singular_values(const DenseMatrix& a);

}  // namespace qsvand::oracle
