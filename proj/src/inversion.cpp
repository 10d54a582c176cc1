#include "qsvand/inversion.hpp"

#include <algorithm>

#include "qsvand/error.hpp"
#include "qsvand/horner.hpp"
#include "qsvand/oracle.hpp"
#include "qsvand/recurrence.hpp"

namespace qsvand {

VfMatrix build_vf(const NodeSet& nodes, const SumCoefficients& d) {
    const std::size_t n = d.d.size();
    if (nodes.size() != n) throw DimensionMismatch("coefficient count must equal node count");
    DenseMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = 1.0 / nodes[i];
        for (std::size_t k = n - 1; k-- > 0;) v(i, k) = y * (v(i, k + 1) + d.d[k + 1]);
    }
    return {std::move(v)};
}

namespace {

// p(y) = sum_k d_k y^{k-1}, by Horner.
double horner_eval(std::span<const double> d, double y) {
    double acc = 0.0;
    for (std::size_t k = d.size(); k-- > 0;) acc = acc * y + d[k];
    return acc;
}

// Sweeps c = 0..n-1 and hands emit(c, a) the column a = V_Q(x) p(W_Q) e_c, using
//   V_Q p(W_Q) = diag(p(1/x)) V_Q - V_F S_PQ.
// sigma_c = V_F S e_c and q_c = V_Q e_c both follow the system's own recurrence, so
// neither V_Q nor V_F is stored. st is S_PQ transposed.
template <class Emit>
void sum_product_sweep(const PolySystem& sys, const NodeSet& nodes, std::span<const double> d,
                       const DenseMatrix& st, Emit&& emit) {
    const std::size_t n = sys.size();

    // ds[c] = sum_{r <= n-2} d_{r+2} S(r, c): the constant dropped when V_F is shifted by x.
    std::vector<double> ds(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        const auto sc = st.row(c);
        double acc = 0.0;
        for (std::size_t r = 0; r <= c && r + 1 < n; ++r) acc += d[r + 1] * sc[r];
        ds[c] = acc;
    }

    std::vector<double> px(n), x(n);
    std::vector<double> sig(n), sig_prev(n, 0.0), nu(n, 0.0), next(n);
    std::vector<double> q(n), q_prev(n, 0.0), g(n, 0.0), col(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = nodes[i];
        px[i] = horner_eval(d, 1.0 / x[i]);
        sig[i] = sys.tau0() * (px[i] - d[0]);  // F_0 = p - d_1
        q[i] = sys.tau0();
    }
    if (sys.family() == PolyFamily::Semiseparable) {
        nu = sig;
        std::fill(g.begin(), g.end(), sys.tau0());
    }

    auto flush = [&](std::size_t c) {
        for (std::size_t i = 0; i < n; ++i) col[i] = px[i] * q[i] - sig[i];
        emit(c, std::span<const double>(col));
    };
    flush(0);
    for (std::size_t k = 1; k < n; ++k) {
        const double shift = ds[k - 1];
        switch (sys.family()) {
            case PolyFamily::Quasiseparable: {
                const double a = sys.alpha(k), b = sys.beta(k), gm = sys.gamma(k), dl = sys.delta(k),
                             t = sys.theta(k);
                for (std::size_t i = 0; i < n; ++i) {
                    const double s = sig[i];
                    next[i] = gm * nu[i] + dl * (x[i] * s - shift) + t * s;
                    nu[i] = a * nu[i] + b * s;
                    const double qi = q[i];
                    q[i] = gm * g[i] + (dl * x[i] + t) * qi;
                    g[i] = a * g[i] + b * qi;
                }
                break;
            }
            case PolyFamily::Semiseparable: {
                const double a = sys.alpha(k), b = sys.beta(k), gm = sys.gamma(k), dl = sys.delta(k),
                             t = sys.theta(k);
                for (std::size_t i = 0; i < n; ++i) {
                    const double s = sig[i];
                    const double w = dl * (x[i] * s - shift) + t * s;
                    next[i] = gm * nu[i] + w;
                    nu[i] = a * nu[i] + b * w;
                    const double p = (dl * x[i] + t) * q[i];
                    q[i] = gm * g[i] + p;
                    g[i] = a * g[i] + b * p;
                }
                break;
            }
            case PolyFamily::WellFree: {
                const double a = sys.alpha(k), dl = sys.delta(k);
                const double b = k >= 2 ? sys.beta(k) : 0.0, gm = k >= 2 ? sys.gamma(k) : 0.0;
                const double shift_prev = k >= 2 ? ds[k - 2] : 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    next[i] = a * (x[i] * sig[i] - shift) - dl * sig[i] -
                              (b * (x[i] * sig_prev[i] - shift_prev) + gm * sig_prev[i]);
                    const double qi = q[i];
                    q[i] = (a * x[i] - dl) * qi - (b * x[i] + gm) * q_prev[i];
                    q_prev[i] = qi;
                }
                break;
            }
        }
        std::swap(sig_prev, sig);
        std::swap(sig, next);
        flush(k);
    }
}

}  // namespace

DenseMatrix fast_sum_product(const PolySystem& sys, const NodeSet& nodes, const SumCoefficients& d,
                             const BasisMatrix& basis) {
    const std::size_t n = sys.size();
    if (d.d.size() != n || nodes.size() != n || basis.size() != n)
        throw DimensionMismatch("fast_sum_product operands disagree in size");
    DenseMatrix out(n, n);
    sum_product_sweep(sys, nodes, d.d, basis.S.transposed(), [&](std::size_t c, std::span<const double> a) {
        for (std::size_t i = 0; i < n; ++i) out(i, c) = a[i];
    });
    return out;
}

DenseMatrix fast_sum_product(const PolySystem& sys, const NodeSet& nodes, const SumCoefficients& d) {
    return fast_sum_product(sys, nodes, d, spq(sys));
}

namespace {

template <class LeftSolve>
CidikResult cidik_with(const DisplacementInstance& inst, const PluFactorization& fact, Exchange exchange,
                       LeftSolve&& left_solve) {
    const std::size_t n = inst.size();
    const std::size_t a = inst.alpha_rank();
    CidikResult out{DenseMatrix(n, a), DenseMatrix(a, n)};
    std::vector<double> v(n);
    for (std::size_t i = 0; i < a; ++i) {
        // c_i = D_x R^{-T} B^T e_i
        for (std::size_t j = 0; j < n; ++j) v[j] = inst.B(i, j);
        const auto z = solve_transposed(fact, v);
        for (std::size_t j = 0; j < n; ++j) out.c(j, i) = inst.nodes[j] * z[j];

        // d_i = y_i^T I~ S^{-1}, y_i = R^{-1} G e_i
        for (std::size_t j = 0; j < n; ++j) v[j] = inst.G(j, i);
        auto y = solve(fact, v);
        if (exchange == Exchange::Reversal) std::reverse(y.begin(), y.end());
        const auto di = left_solve(y);
        std::copy(di.begin(), di.end(), out.dmat.row(i).begin());
    }
    return out;
}

}  // namespace

CidikResult cidik(const DisplacementInstance& inst, const PluFactorization& fact, const BasisMatrix& s_hat,
                  Exchange exchange) {
    if (fact.size() != inst.size() || s_hat.size() != inst.size())
        throw DimensionMismatch("factorization or basis size differs from n");
    return cidik_with(inst, fact, exchange, [&](std::span<const double> y) { return back_substitute(s_hat, y); });
}

namespace {

PolySystem quasiseparable_form(const PolySystem& sys) {
    switch (sys.family()) {
        case PolyFamily::Quasiseparable: return sys;
        case PolyFamily::Semiseparable: return ss_to_qs(sys);
        case PolyFamily::WellFree: return wf_to_qs(sys);
    }
    throw InvalidSystem("unknown family");
}

// Column c of A_i = V p_i(W) lands in row n-1-c of R^{-1} (row c without the reversal),
// scaled entrywise by c_i.
DenseMatrix assemble_monomial(const DisplacementInstance& inst, const PluFactorization& fact, const PolySystem& hat,
                              Exchange exchange) {
    const std::size_t n = inst.size();
    const DenseMatrix st_hat = coefficient_rows(hat);
    const CidikResult cd =
        cidik_with(inst, fact, exchange, [&](std::span<const double> y) { return back_substitute_rows(st_hat, y); });
    DenseMatrix rinv(n, n);
    std::vector<double> ci(n);
    for (std::size_t i = 0; i < inst.alpha_rank(); ++i) {
        for (std::size_t j = 0; j < n; ++j) ci[j] = cd.c(j, i);
        sum_product_sweep(hat, inst.nodes, cd.dmat.row(i), st_hat, [&](std::size_t c, std::span<const double> col) {
            auto out = rinv.row(exchange == Exchange::Reversal ? n - 1 - c : c);
            for (std::size_t j = 0; j < n; ++j) out[j] += col[j] * ci[j];
        });
    }
    return rinv;
}

// V_Q(x) rows are tau0 e_1^T (M - x N)^{-1} and the rows of S_PQ are b W^k, so row j of
// V p(W) with d^T S = u is u (I - x_j W)^{-1} = (u M)(M - x_j N)^{-1}. Rows for the alpha
// terms combine before the solve: w_j = sum_i c_i[j] u_i.
//
// The n solves run side by side, position-major: position k of every solve is computed
// before position k+1, which yields R^{-1} one row at a time. (e0, e1)[j] is the state of
// kernel_resolvent for node j.
DenseMatrix assemble_resolvent(const DisplacementInstance& inst, const PluFactorization& fact, const PolySystem& hat,
                               Exchange exchange) {
    const std::size_t n = inst.size();
    const std::size_t a = inst.alpha_rank();
    const CidikResult cd = cidik_with(inst, fact, exchange, [](std::span<const double> y) {
        return std::vector<double>(y.begin(), y.end());
    });
    const RecurrenceKernel kern = recurrence_kernel(hat);
    const auto x = inst.nodes.values();
    // Column-major copy of c so the combination loop below runs over contiguous memory.
    const DenseMatrix ct = cd.c.transposed();

    DenseMatrix rinv(n, n);
    std::vector<double> v(n), e0(n, 0.0), e1(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::fill(v.begin(), v.end(), 0.0);
        for (std::size_t i = 0; i < a; ++i) {
            const double uik = cd.dmat(i, k);
            const auto ci = ct.row(i);
            for (std::size_t j = 0; j < n; ++j) v[j] += ci[j] * uik;
        }
        const double g0 = kern.g0[k], g1 = kern.g1[k], b2 = kern.b2[k], b3 = kern.b3[k], tk = kern.tau[k];
        auto out = rinv.row(exchange == Exchange::Reversal ? n - 1 - k : k);
        for (std::size_t j = 0; j < n; ++j) {
            const double z = v[j] + e0[j];
            out[j] = z;
            const double next = e1[j] * b2 - e0[j] * g0 + x[j] * tk * z;
            e1[j] = e1[j] * b3 - e0[j] * g1;
            e0[j] = next;
        }
    }
    return rinv;
}

}  // namespace

InverseResult invert(const DisplacementInstance& inst, const InvertOptions& options) {
    const PluFactorization fact = gepp(inst);

    const HornerSystem horner = options.route == HornerRoute::ThreeTerm
                                    ? hat_wf(quasiseparable_form(inst.sys), options.hat_tau0)
                                    : horner_system(inst.sys, options.hat_tau0);
    DenseMatrix rinv = options.evaluation == SumEvaluation::Resolvent
                           ? assemble_resolvent(inst, fact, horner.hat, options.exchange)
                           : assemble_monomial(inst, fact, horner.hat, options.exchange);

    InverseResult result{std::move(rinv), std::nullopt};
    if (options.compute_residuals) result.residuals = residual_report(materialize(inst), result.rinv);
    return result;
}

ResidualReport residual_report(const DenseMatrix& R, const DenseMatrix& rinv) {
    const DenseMatrix I = DenseMatrix::identity(R.rows());
    return {norm_inf(oracle::dense_matmul(R, rinv) - I), norm_inf(oracle::dense_matmul(rinv, R) - I)};
}

}  // namespace qsvand
