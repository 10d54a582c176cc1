#include "qsvand/recurrence.hpp"

#include <string>

#include "qsvand/error.hpp"

namespace qsvand {

namespace {

// beta_0 = 1 for semiseparable systems.
double ss_beta(const PolySystem& sys, std::size_t i) { return i == 0 ? 1.0 : sys.beta(i); }
// alpha_0 = 1, beta_1 = 0 for well-free systems.
double wf_alpha(const PolySystem& sys, std::size_t i) { return i == 0 ? 1.0 : sys.alpha(i); }
double wf_beta(const PolySystem& sys, std::size_t i) { return i <= 1 ? 0.0 : sys.beta(i); }

// d_m = delta_m / alpha_m + beta_m / (alpha_{m-1} alpha_m)
double wf_d(const PolySystem& sys, std::size_t m) {
    return sys.delta(m) / sys.alpha(m) + wf_beta(sys, m) / (wf_alpha(sys, m - 1) * sys.alpha(m));
}

// Superdiagonal coefficient a_{k-1,k} of a well-free system.
double wf_super(const PolySystem& sys, std::size_t k) {
    return sys.delta(k) + wf_beta(sys, k) / wf_alpha(sys, k - 1);
}

}  // namespace

double recurrence_coefficient(const PolySystem& sys, std::size_t j, std::size_t k) {
    if (!(j < k && k < sys.size())) throw DimensionMismatch("recurrence coefficient needs 0 <= j < k <= n-1");
    switch (sys.family()) {
        case PolyFamily::Quasiseparable: {
            if (j + 1 == k) return -sys.theta(k);
            double p = sys.beta(j + 1) * sys.gamma(k);
            for (std::size_t i = j + 2; i < k; ++i) p *= sys.alpha(i);
            return -p;
        }
        case PolyFamily::Semiseparable: {
            if (j + 1 == k) return -(sys.theta(k) + sys.gamma(k) * ss_beta(sys, k - 1));
            double p = ss_beta(sys, j) * sys.gamma(k);
            for (std::size_t i = j + 1; i < k; ++i) p *= sys.alpha(i) - sys.beta(i) * sys.gamma(i);
            return -p;
        }
        case PolyFamily::WellFree: {
            if (j + 1 == k) return wf_super(sys, k);
            double p = sys.alpha(k) / sys.alpha(j + 2) * (wf_d(sys, j + 1) * wf_beta(sys, j + 2) + sys.gamma(j + 2));
            for (std::size_t i = j + 2; i < k; ++i) p *= wf_beta(sys, i + 1) / sys.alpha(i + 1);
            return p;
        }
    }
    return 0.0;
}

RecurrenceMatrices build_mn(const PolySystem& sys) {
    const std::size_t n = sys.size();
    RecurrenceMatrices r{DenseMatrix::identity(n), DenseMatrix(n, n)};
    for (std::size_t k = 1; k < n; ++k) {
        r.nq(k - 1, k) = sys.tau(k);
        for (std::size_t j = 0; j < k; ++j) r.mq(j, k) = recurrence_coefficient(sys, j, k);
    }
    return r;
}

ShiftedM shifted_generators(const PolySystem& sys, double xi) {
    const std::size_t n = sys.size();
    ShiftedM out;
    out.xi = xi;
    auto& q = out.gens;
    q.d.assign(n, 1.0);
    q.g.assign(n, Row2{0.0, 0.0});
    q.b.assign(n, Mat2{0.0, 0.0, 0.0, 0.0});
    q.h.assign(n, Row2{1.0, 0.0});
    q.h[0] = Row2{0.0, 0.0};

    // Position p (0-based) holds the generators of system index p+1.
    for (std::size_t p = 0; p + 1 < n; ++p) {
        const std::size_t j = p + 1;
        switch (sys.family()) {
            case PolyFamily::Quasiseparable:
                q.g[p] = {-sys.theta(j) - xi * sys.delta(j), -sys.beta(j)};
                break;
            case PolyFamily::Semiseparable: {
                const double bp = ss_beta(sys, j - 1);
                q.g[p] = {-(sys.theta(j) + sys.gamma(j) * bp) - xi * sys.delta(j), -bp};
                break;
            }
            case PolyFamily::WellFree: {
                const double m = wf_super(sys, j);
                const double second = j + 1 < n ? m * sys.beta(j + 1) / sys.alpha(j) + sys.gamma(j + 1) : 0.0;
                q.g[p] = {m - xi * sys.alpha(j), second};
                break;
            }
        }
    }
    for (std::size_t p = 1; p + 1 < n; ++p) {
        const std::size_t i = p + 1;
        switch (sys.family()) {
            case PolyFamily::Quasiseparable:
                q.b[p] = {0.0, 0.0, sys.gamma(i), sys.alpha(i)};
                break;
            case PolyFamily::Semiseparable: {
                const double c = sys.alpha(i - 1) - sys.beta(i - 1) * sys.gamma(i - 1);
                q.b[p] = {0.0, 0.0, sys.gamma(i) * c, c};
                break;
            }
            case PolyFamily::WellFree:
                q.b[p] = {0.0, 0.0, 1.0, i + 1 < n ? sys.beta(i + 1) / sys.alpha(i) : 0.0};
                break;
        }
    }
    return out;
}

namespace {

inline double dot(const Row2& a, const Row2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline Row2 times(const Row2& v, const Mat2& m) {
    return {v[0] * m[0] + v[1] * m[2], v[0] * m[1] + v[1] * m[3]};
}

void check_len(const QsUpperGenerators& gens, std::size_t offset, std::size_t a, std::size_t b) {
    if (offset > gens.size() || a != gens.size() - offset || b != a)
        throw DimensionMismatch("vector length must equal generator size");
}

}  // namespace

DenseMatrix reconstruct(const QsUpperGenerators& gens) {
    const std::size_t n = gens.size();
    DenseMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        a(j, j) = gens.d[j];
        Row2 v = gens.g[j];
        for (std::size_t k = j + 1; k < n; ++k) {
            a(j, k) = dot(v, gens.h[k]);
            v = times(v, gens.b[k]);
        }
    }
    return a;
}

// State s carries sum_{p<k} v_p g_p b_{p+1} ... b_{k-1}, so column k only needs s h_k.

void qs_solve(const QsUpperGenerators& gens, std::span<const double> rhs, std::span<double> out,
              std::size_t offset) {
    check_len(gens, offset, rhs.size(), out.size());
    const std::size_t m = rhs.size();
    Row2 s{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t k = offset + j;
        const double v = (rhs[j] - (j == 0 ? 0.0 : dot(s, gens.h[k]))) / gens.d[k];
        out[j] = v;
        if (j + 1 < m) {
            s = j == 0 ? Row2{0.0, 0.0} : times(s, gens.b[k]);
            s[0] += v * gens.g[k][0];
            s[1] += v * gens.g[k][1];
        }
    }
}

void qs_solve(const QsUpperGenerators& gens, std::span<const double> rhs, std::span<double> out) {
    qs_solve(gens, rhs, out, 0);
}

std::vector<double> qs_solve(const QsUpperGenerators& gens, std::span<const double> rhs) {
    std::vector<double> out(gens.size());
    qs_solve(gens, rhs, out, 0);
    return out;
}

void qs_matvec(const QsUpperGenerators& gens, std::span<const double> v, std::span<double> out,
               std::size_t offset) {
    check_len(gens, offset, v.size(), out.size());
    const std::size_t m = v.size();
    Row2 s{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t k = offset + j;
        out[j] = (j == 0 ? 0.0 : dot(s, gens.h[k])) + v[j] * gens.d[k];
        if (j + 1 < m) {
            s = j == 0 ? Row2{0.0, 0.0} : times(s, gens.b[k]);
            s[0] += v[j] * gens.g[k][0];
            s[1] += v[j] * gens.g[k][1];
        }
    }
}

void qs_matvec(const QsUpperGenerators& gens, std::span<const double> v, std::span<double> out) {
    qs_matvec(gens, v, out, 0);
}

std::vector<double> qs_matvec(const QsUpperGenerators& gens, std::span<const double> v) {
    std::vector<double> out(gens.size());
    qs_matvec(gens, v, out, 0);
    return out;
}

void qs_resolvent(const QsUpperGenerators& gens, std::span<const double> tau, double xi, std::span<const double> v,
                  std::span<double> out, std::size_t offset) {
    check_len(gens, offset, v.size(), out.size());
    if (tau.size() < gens.size()) throw DimensionMismatch("tau needs one entry per position");
    const std::size_t m = v.size();
    // sm accumulates the product with M, ss the solve with M - xi N; they share b and h.
    Row2 sm{0.0, 0.0}, ss{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t k = offset + j;
        const double w = (j == 0 ? 0.0 : dot(sm, gens.h[k])) + v[j] * gens.d[k];
        const double z = (w - (j == 0 ? 0.0 : dot(ss, gens.h[k]))) / gens.d[k];
        out[j] = z;
        if (j + 1 < m) {
            if (j == 0) {
                sm = Row2{0.0, 0.0};
                ss = Row2{0.0, 0.0};
            } else {
                sm = times(sm, gens.b[k]);
                ss = times(ss, gens.b[k]);
            }
            const Row2 g = gens.g[k];
            sm[0] += v[j] * g[0];
            sm[1] += v[j] * g[1];
            ss[0] += z * (g[0] - xi * tau[k]);
            ss[1] += z * g[1];
        }
    }
}

RecurrenceKernel recurrence_kernel(const PolySystem& sys) {
    const std::size_t n = sys.size();
    const QsUpperGenerators m = shifted_generators(sys, 0.0).gens;
    RecurrenceKernel k;
    k.g0.resize(n);
    k.g1.resize(n);
    k.b2.resize(n);
    k.b3.resize(n);
    k.tau.assign(n, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
        k.g0[p] = m.g[p][0];
        k.g1[p] = m.g[p][1];
        k.b2[p] = m.b[p][2];
        k.b3[p] = m.b[p][3];
        if (p + 1 < n) k.tau[p] = sys.tau(p + 1);
    }
    return k;
}

void kernel_resolvent(const RecurrenceKernel& kern, double xi, std::span<const double> v, std::span<double> out,
                      std::size_t offset) {
    const std::size_t n = kern.size();
    if (offset > n || v.size() != n - offset || out.size() != v.size())
        throw DimensionMismatch("vector length must match the trailing block");
    // e is the product state minus the solve state; the output is v + e_0 at each position.
    double e0 = 0.0, e1 = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const std::size_t k = offset + j;
        const double z = v[j] + e0;
        out[j] = z;
        const double next = e1 * kern.b2[k] - e0 * kern.g0[k] + xi * kern.tau[k] * z;
        e1 = e1 * kern.b3[k] - e0 * kern.g1[k];
        e0 = next;
    }
}

ShiftedM trailing_submatrix(const ShiftedM& m, std::size_t k) {
    const std::size_t n = m.gens.size();
    if (k == 0 || k > n) throw DimensionMismatch("trailing submatrix index out of range");
    const std::size_t off = k - 1;
    ShiftedM out;
    out.xi = m.xi;
    out.gens.d.assign(m.gens.d.begin() + off, m.gens.d.end());
    out.gens.g.assign(m.gens.g.begin() + off, m.gens.g.end());
    out.gens.b.assign(m.gens.b.begin() + off, m.gens.b.end());
    out.gens.h.assign(m.gens.h.begin() + off, m.gens.h.end());
    return out;
}

}  // namespace qsvand
