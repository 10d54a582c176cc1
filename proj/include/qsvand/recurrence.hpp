#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "qsvand/dense.hpp"
#include "qsvand/poly_systems.hpp"

namespace qsvand {

// Dense recurrence matrices of the general recurrence
//   Q_k = tau_k x Q_{k-1} - sum_{j<k} a_{jk} Q_j:
// mq is unit upper triangular with mq(j,k) = a_{jk}, nq carries tau_k at (k-1,k).
struct RecurrenceMatrices {
    DenseMatrix mq;
    DenseMatrix nq;
};

RecurrenceMatrices build_mn(const PolySystem& sys);

// The general-recurrence coefficient a_{jk} (0 <= j < k <= n-1), straight from the family formula.
double recurrence_coefficient(const PolySystem& sys, std::size_t j, std::size_t k);

using Row2 = std::array<double, 2>;
// Row-major 2x2.
using Mat2 = std::array<double, 4>;

// Upper-triangular matrix with quasiseparable order 2:
//   A(j,j) = d_j,  A(j,j+1) = g_j h_{j+1},  A(j,k) = g_j b_{j+1} ... b_{k-1} h_k  (k > j+1).
// All arrays have length n and are indexed by the 0-based row/column position; the
// slots g[n-1], b[0], b[n-1] and h[0] are never read.
struct QsUpperGenerators {
    std::vector<double> d;
    std::vector<Row2> g;
    std::vector<Mat2> b;
    std::vector<Row2> h;

    std::size_t size() const noexcept { return d.size(); }
};

// Generators of M_Q - xi N_Q.
struct ShiftedM {
    QsUpperGenerators gens;
    double xi = 0.0;
};

ShiftedM shifted_generators(const PolySystem& sys, double xi);

// Dense matrix described by the generators, O(n^2).
DenseMatrix reconstruct(const QsUpperGenerators& gens);

// Row vector v with v * A = rhs, O(n).
std::vector<double> qs_solve(const QsUpperGenerators& gens, std::span<const double> rhs);
void qs_solve(const QsUpperGenerators& gens, std::span<const double> rhs, std::span<double> out);
inline std::vector<double> qs_solve(const ShiftedM& m, std::span<const double> rhs) {
    return qs_solve(m.gens, rhs);
}

// Same on the trailing block that starts at position offset; rhs and out have n - offset entries.
void qs_solve(const QsUpperGenerators& gens, std::span<const double> rhs, std::span<double> out,
              std::size_t offset);

// Row vector v * A, O(n).
std::vector<double> qs_matvec(const QsUpperGenerators& gens, std::span<const double> v);
void qs_matvec(const QsUpperGenerators& gens, std::span<const double> v, std::span<double> out);
void qs_matvec(const QsUpperGenerators& gens, std::span<const double> v, std::span<double> out,
               std::size_t offset);
inline std::vector<double> qs_matvec(const ShiftedM& m, std::span<const double> v) {
    return qs_matvec(m.gens, v);
}

// Row vector (v M)(M - xi N)^{-1} in one pass, where gens describe M (xi = 0) and tau[p]
// is N's entry at (p, p+1). Equals v (I - xi W)^{-1} when offset = 0; otherwise works on the
// trailing blocks that start at position offset.
void qs_resolvent(const QsUpperGenerators& gens, std::span<const double> tau, double xi, std::span<const double> v,
                  std::span<double> out, std::size_t offset = 0);

// Generators of M_Q have d = 1, h = (1, 0) and b = [0 0; b2 b3] at every position that is
// read, so products with (I - xi W_Q)^{-1} need only two scalars of state. Structure-of-arrays
// copy of g, (b2, b3) and N_Q's superdiagonal (tau[p] at (p, p+1), tau[n-1] = 0).
struct RecurrenceKernel {
    std::vector<double> g0, g1, b2, b3, tau;

    std::size_t size() const noexcept { return tau.size(); }
};

RecurrenceKernel recurrence_kernel(const PolySystem& sys);

// qs_resolvent on the kernel: (v M)(M - xi N)^{-1} on the trailing blocks at offset.
void kernel_resolvent(const RecurrenceKernel& kern, double xi, std::span<const double> v, std::span<double> out,
                      std::size_t offset = 0);

// (M_Q - xi N_Q)^{(k)}: rows and columns k..n (1-based), i.e. the first k-1 dropped.
ShiftedM trailing_submatrix(const ShiftedM& m, std::size_t k);

}  // namespace qsvand
