#include "qsvand/fast_gepp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qsvand/error.hpp"
#include "qsvand/recurrence.hpp"

namespace qsvand {

namespace {

// Relative pivot threshold against the largest pivot-column entry seen so far.
constexpr double kSingularRatio = 1e-13;

// Multipliers are staged for this many consecutive steps and written to L a row at a time;
// writing each column straight into row-major L walks it with a power-of-two stride.
constexpr std::size_t kLBlock = 8;

}  // namespace

PluFactorization gepp(const DisplacementInstance& inst, const SchurObserver& observer) {
    const std::size_t n = inst.size();
    const std::size_t a = inst.alpha_rank();

    // Working generators; rows of G and entries of x shrink from the front as k advances.
    DenseMatrix G = inst.G;
    DenseMatrix B = inst.B;
    std::vector<double> x(inst.nodes.values().begin(), inst.nodes.values().end());

    const RecurrenceKernel kern = recurrence_kernel(inst.sys);

    PluFactorization f;
    f.swaps.resize(n);
    // Multipliers of step k belong in column k of L; a row swap at step k also swaps the
    // multipliers already stored in the two rows. stage(c, i) holds column k0 + c.
    f.L = DenseMatrix::identity(n);
    DenseMatrix stage(kLBlock, n);
    std::size_t k0 = 0;
    auto flush = [&](std::size_t k_end) {
        for (std::size_t i = k0 + 1; i < n; ++i) {
            auto li = f.L.row(i);
            for (std::size_t c = 0; c < k_end - k0 && k0 + c < i; ++c) li[k0 + c] = stage(c, i);
        }
        k0 = k_end;
    };
    f.U = DenseMatrix(n, n);

    double scale = 0.0;
    std::uint64_t flops = 0;

    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t len = n - k;
        if (observer) {
            SchurState st;
            st.k = k + 1;
            st.G = DenseMatrix(len, a);
            st.B = DenseMatrix(a, len);
            for (std::size_t i = 0; i < len; ++i)
                for (std::size_t t = 0; t < a; ++t) st.G(i, t) = G(k + i, t);
            for (std::size_t t = 0; t < a; ++t)
                for (std::size_t j = 0; j < len; ++j) st.B(t, j) = B(t, k + j);
            st.x.assign(x.begin() + static_cast<std::ptrdiff_t>(k), x.end());
            observer(st);
        }

        // First column of the Schur complement: W is strictly upper triangular, so
        // (1/x_i) c_i = G_i b_1. It is built in the staging row and scaled into multipliers.
        auto col = stage.row(k - k0);
        std::size_t piv = k;
        double best = -1.0;
        for (std::size_t i = k; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t t = 0; t < a; ++t) acc += G(i, t) * B(t, k);
            col[i] = x[i] * acc;
            const double mag = std::abs(col[i]);
            if (mag > best) {
                best = mag;
                piv = i;
            }
        }
        flops += static_cast<std::uint64_t>(len) * (a + 1);
        if (!std::isfinite(best)) throw SingularMatrix(k + 1, "non-finite pivot column at step " + std::to_string(k + 1));
        scale = std::max(scale, best);
        const double d = col[piv];
        if (d == 0.0 || std::abs(d) < kSingularRatio * scale)
            throw SingularMatrix(k + 1, "pivot below singularity threshold at step " + std::to_string(k + 1));

        f.swaps[k] = piv;
        if (piv != k) {
            std::swap(x[k], x[piv]);
            for (std::size_t t = 0; t < a; ++t) std::swap(G(k, t), G(piv, t));
            std::swap_ranges(f.L.row(k).begin(), f.L.row(k).begin() + static_cast<std::ptrdiff_t>(k0),
                             f.L.row(piv).begin());
            for (std::size_t c = 0; c <= k - k0; ++c) std::swap(stage(c, k), stage(c, piv));
        }

        // First row r: r (M - x_k N) = x_k g_1 B M on the trailing block, solved in place in U.
        auto urow = f.U.row(k).subspan(k, len);
        for (std::size_t j = 0; j < len; ++j) {
            double acc = 0.0;
            for (std::size_t t = 0; t < a; ++t) acc += G(k, t) * B(t, k + j);
            urow[j] = x[k] * acc;
        }
        kernel_resolvent(kern, x[k], urow, urow, k);
        flops += static_cast<std::uint64_t>(len) * (a + 7);
        urow[0] = d;
        f.pivoted_nodes.push_back(x[k]);

        // Multipliers and Schur complement generators.
        const double inv_d = 1.0 / d;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double l = col[i] / d;
            col[i] = l;
            for (std::size_t t = 0; t < a; ++t) G(i, t) -= l * G(k, t);
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            const double u = urow[j - k] * inv_d;
            for (std::size_t t = 0; t < a; ++t) B(t, j) -= B(t, k) * u;
        }
        if (k + 1 - k0 == kLBlock) flush(k + 1);
        flops += static_cast<std::uint64_t>(2 * (len - 1)) * (a + 1);
    }
    flush(n);
    f.flops = flops;
    return f;
}

DenseMatrix permutation_matrix(std::span<const std::size_t> swaps) {
    const std::size_t n = swaps.size();
    // Apply P_1 ... P_n to the identity from the right-most factor outward.
    DenseMatrix p = DenseMatrix::identity(n);
    for (std::size_t k = n; k-- > 0;) {
        const std::size_t t = swaps[k];
        if (t >= n) throw DimensionMismatch("swap target out of range");
        if (t != k)
            for (std::size_t j = 0; j < n; ++j) std::swap(p(k, j), p(t, j));
    }
    return p;
}

DenseMatrix assemble(const PluFactorization& fact) {
    const std::size_t n = fact.size();
    DenseMatrix lu(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t m = 0; m <= std::min(i, j); ++m) acc += fact.L(i, m) * fact.U(m, j);
            lu(i, j) = acc;
        }
    // Rows of P L U: apply P_n first, then up to P_1.
    for (std::size_t k = n; k-- > 0;) {
        const std::size_t t = fact.swaps[k];
        if (t != k)
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(t, j));
    }
    return lu;
}

std::vector<double> solve(const PluFactorization& fact, std::span<const double> rhs) {
    const std::size_t n = fact.size();
    if (rhs.size() != n) throw DimensionMismatch("right-hand side length must equal n");
    std::vector<double> z(rhs.begin(), rhs.end());
    for (std::size_t k = 0; k < n; ++k) std::swap(z[k], z[fact.swaps[k]]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) z[i] -= fact.L(i, j) * z[j];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) z[i] -= fact.U(i, j) * z[j];
        z[i] /= fact.U(i, i);
    }
    return z;
}

std::vector<double> solve_transposed(const PluFactorization& fact, std::span<const double> rhs) {
    const std::size_t n = fact.size();
    if (rhs.size() != n) throw DimensionMismatch("right-hand side length must equal n");
    // Row-oriented sweeps over U and L, so both factors are read contiguously.
    std::vector<double> y(rhs.begin(), rhs.end());
    for (std::size_t j = 0; j < n; ++j) {
        y[j] /= fact.U(j, j);
        const auto uj = fact.U.row(j);
        for (std::size_t i = j + 1; i < n; ++i) y[i] -= uj[i] * y[j];
    }
    for (std::size_t j = n; j-- > 0;) {
        const auto lj = fact.L.row(j);
        for (std::size_t i = 0; i < j; ++i) y[i] -= lj[i] * y[j];
    }
    for (std::size_t k = n; k-- > 0;) std::swap(y[k], y[fact.swaps[k]]);
    return y;
}

}  // namespace qsvand
