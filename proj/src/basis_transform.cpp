#include "qsvand/basis_transform.hpp"

#include "qsvand/error.hpp"

namespace qsvand {

namespace {

// Coefficient sweep. Row k of st (and tt) holds the monomial coefficients of Q_k (and G_k);
// multiplication by x shifts a coefficient vector up one degree.
void sweep(const PolySystem& sys, DenseMatrix& st, DenseMatrix* tt) {
    const std::size_t n = sys.size();
    st = DenseMatrix(n, n);
    st(0, 0) = sys.tau0();
    const PolyFamily fam = sys.family();
    // The auxiliary coefficients only need the previous row unless tt is requested.
    const bool keep = tt != nullptr && fam != PolyFamily::WellFree;
    DenseMatrix aux(keep ? n : 2, fam == PolyFamily::WellFree ? 0 : n);
    if (fam == PolyFamily::Semiseparable) aux(0, 0) = sys.tau0();
    auto aux_row = [&](std::size_t k) { return aux.row(keep ? k : k % 2); };
    for (std::size_t k = 1; k < n; ++k) {
        const double a = sys.alpha(k), d = sys.delta(k);
        const auto sp = st.row(k - 1);
        auto sk = st.row(k);
        switch (fam) {
            case PolyFamily::Quasiseparable: {
                const double b = sys.beta(k), g = sys.gamma(k), t = sys.theta(k);
                const auto tp = aux_row(k - 1);
                auto tk = aux_row(k);
                for (std::size_t r = 0; r <= k; ++r) {
                    const double s_prev = r < k ? sp[r] : 0.0;
                    const double zs = r > 0 ? sp[r - 1] : 0.0;
                    const double t_prev = r < k ? tp[r] : 0.0;
                    sk[r] = g * t_prev + d * zs + t * s_prev;
                    tk[r] = a * t_prev + b * s_prev;
                }
                break;
            }
            case PolyFamily::Semiseparable: {
                const double b = sys.beta(k), g = sys.gamma(k), t = sys.theta(k);
                const auto tp = aux_row(k - 1);
                auto tk = aux_row(k);
                for (std::size_t r = 0; r <= k; ++r) {
                    const double s_prev = r < k ? sp[r] : 0.0;
                    const double zs = r > 0 ? sp[r - 1] : 0.0;
                    const double t_prev = r < k ? tp[r] : 0.0;
                    const double p = d * zs + t * s_prev;
                    sk[r] = g * t_prev + p;
                    tk[r] = a * t_prev + b * p;
                }
                break;
            }
            case PolyFamily::WellFree: {
                const auto p2 = st.row(k >= 2 ? k - 2 : 0);
                const double b = k >= 2 ? sys.beta(k) : 0.0, g = k >= 2 ? sys.gamma(k) : 0.0;
                for (std::size_t r = 0; r <= k; ++r) {
                    const double s1 = r < k ? sp[r] : 0.0;
                    const double zs1 = r > 0 ? sp[r - 1] : 0.0;
                    double v = a * zs1 - d * s1;
                    if (k >= 2) {
                        const double s2 = r + 1 < k ? p2[r] : 0.0;
                        const double zs2 = r > 0 && r < k ? p2[r - 1] : 0.0;
                        v -= b * zs2 + g * s2;
                    }
                    sk[r] = v;
                }
                break;
            }
        }
    }
    if (tt) *tt = std::move(aux);
}

BasisMatrix basis_of(const PolySystem& sys, PolyFamily fam) {
    if (sys.family() != fam) throw InvalidSystem("basis transform called with the wrong family");
    DenseMatrix st, tt;
    sweep(sys, st, &tt);
    if (fam == PolyFamily::WellFree) return {st.transposed(), std::nullopt};
    return {st.transposed(), tt.transposed()};
}

}  // namespace

BasisMatrix spq_qs(const PolySystem& sys) { return basis_of(sys, PolyFamily::Quasiseparable); }
BasisMatrix spq_ss(const PolySystem& sys) { return basis_of(sys, PolyFamily::Semiseparable); }
BasisMatrix spq_wf(const PolySystem& sys) { return basis_of(sys, PolyFamily::WellFree); }
BasisMatrix spq(const PolySystem& sys) { return basis_of(sys, sys.family()); }

DenseMatrix coefficient_rows(const PolySystem& sys) {
    DenseMatrix st;
    sweep(sys, st, nullptr);
    return st;
}

std::vector<double> back_substitute(const BasisMatrix& basis, std::span<const double> rhs) {
    const DenseMatrix& S = basis.S;
    const std::size_t n = S.rows();
    if (rhs.size() != n) throw DimensionMismatch("right-hand side length must equal n");
    // Once v_r is known, strip its contribution from the remaining entries (row-wise over S).
    std::vector<double> v(rhs.begin(), rhs.end());
    for (std::size_t r = 0; r < n; ++r) {
        v[r] /= S(r, r);
        const auto sr = S.row(r);
        const double vr = v[r];
        for (std::size_t c = r + 1; c < n; ++c) v[c] -= vr * sr[c];
    }
    return v;
}

std::vector<double> back_substitute_rows(const DenseMatrix& st, std::span<const double> rhs) {
    const std::size_t n = st.rows();
    if (rhs.size() != n) throw DimensionMismatch("right-hand side length must equal n");
    std::vector<double> v(n);
    for (std::size_t c = 0; c < n; ++c) {
        const auto sc = st.row(c);
        double acc = rhs[c];
        for (std::size_t r = 0; r < c; ++r) acc -= v[r] * sc[r];
        v[c] = acc / sc[c];
    }
    return v;
}

std::vector<double> back_substitute_column(const BasisMatrix& basis, std::span<const double> rhs) {
    const DenseMatrix& S = basis.S;
    const std::size_t n = S.rows();
    if (rhs.size() != n) throw DimensionMismatch("right-hand side length must equal n");
    std::vector<double> w(rhs.begin(), rhs.end());
    for (std::size_t r = n; r-- > 0;) {
        for (std::size_t c = r + 1; c < n; ++c) w[r] -= S(r, c) * w[c];
        w[r] /= S(r, r);
    }
    return w;
}

}  // namespace qsvand
