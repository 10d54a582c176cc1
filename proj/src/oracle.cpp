#include "qsvand/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qsvand/error.hpp"

namespace qsvand::oracle {

DensePlu dense_gepp(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("dense_gepp needs a square matrix");
    const std::size_t n = a.rows();
    DenseMatrix w = a;
    DensePlu out{std::vector<std::size_t>(n), DenseMatrix::identity(n), DenseMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(w(i, k)) > std::abs(w(piv, k))) piv = i;
        out.swaps[k] = piv;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(piv, j));
            for (std::size_t j = 0; j < k; ++j) std::swap(out.L(k, j), out.L(piv, j));
        }
        const double d = w(k, k);
        if (d == 0.0) throw SingularMatrix(k + 1, "zero pivot at step " + std::to_string(k + 1));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double l = w(i, k) / d;
            out.L(i, k) = l;
            w(i, k) = 0.0;
            if (l == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) w(i, j) -= l * w(k, j);
        }
        for (std::size_t j = k; j < n; ++j) out.U(k, j) = w(k, j);
    }
    return out;
}

namespace {

void lu_solve_inplace(const DensePlu& f, std::span<double> z) {
    const std::size_t n = z.size();
    for (std::size_t k = 0; k < n; ++k) std::swap(z[k], z[f.swaps[k]]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) z[i] -= f.L(i, j) * z[j];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) z[i] -= f.U(i, j) * z[j];
        z[i] /= f.U(i, i);
    }
}

}  // namespace

std::vector<double> dense_solve(const DenseMatrix& a, std::span<const double> b) {
    if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length must equal n");
    const DensePlu f = dense_gepp(a);
    std::vector<double> z(b.begin(), b.end());
    lu_solve_inplace(f, z);
    return z;
}

DenseMatrix dense_inverse(const DenseMatrix& a) {
    const std::size_t n = a.rows();
    const DensePlu f = dense_gepp(a);
    // Solve for the columns of the inverse, stored as rows of the transpose.
    DenseMatrix inv_t = DenseMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) lu_solve_inplace(f, inv_t.row(j));
    return inv_t.transposed();
}

DenseMatrix dense_matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("inner dimensions differ");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ci = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const auto bk = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

DenseMatrix matrix_power_sum(const DenseMatrix& w, std::span<const double> d) {
    const std::size_t n = w.rows();
    if (w.cols() != n) throw DimensionMismatch("matrix_power_sum needs a square matrix");
    DenseMatrix acc(n, n);
    for (std::size_t k = d.size(); k-- > 0;) {
        acc = dense_matmul(w, acc);
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += d[k];
    }
    return acc;
}

double cond_estimate(const DenseMatrix& a) { return norm_inf(a) * norm_inf(dense_inverse(a)); }

std::vector<double> singular_values(const DenseMatrix& a) {
    // One-sided Jacobi on the columns of a copy.
    DenseMatrix u = a;
    const std::size_t m = u.rows(), n = u.cols();
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += u(i, p) * u(i, p);
                    beta += u(i, q) * u(i, q);
                    gamma += u(i, p) * u(i, q);
                }
                if (gamma == 0.0) continue;
                const double rel = std::abs(gamma) / std::sqrt(alpha * beta);
                off = std::max(off, rel);
                if (rel < 1e-15) continue;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double up = u(i, p), uq = u(i, q);
                    u(i, p) = c * up - s * uq;
                    u(i, q) = s * up + c * uq;
                }
            }
        }
        if (off < 1e-15) break;
    }
    std::vector<double> sv(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += u(i, j) * u(i, j);
        sv[j] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

}  // namespace qsvand::oracle
