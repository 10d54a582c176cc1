#include "qsvand/horner.hpp"

#include <string>
#include <vector>

#include "qsvand/error.hpp"

namespace qsvand {

namespace {

// Source generators extended past index n-1 with the boundary defaults.
struct Extended {
    const PolySystem& s;
    const HatBoundary& e;
    std::size_t n;

    double pick(std::span<const double> arr, std::size_t i, double at_n, double at_n1) const {
        if (i >= 1 && i < n) return arr[i - 1];
        if (i == n) return at_n;
        if (i == n + 1) return at_n1;
        throw DimensionMismatch("generator index out of extension range");
    }
    double alpha(std::size_t i) const { return pick(s.alphas(), i, e.alpha_n, e.alpha_n1); }
    double beta(std::size_t i) const { return pick(s.betas(), i, e.beta_n, e.beta_n1); }
    double gamma(std::size_t i) const { return pick(s.gammas(), i, e.gamma_n, e.gamma_n); }
    double delta(std::size_t i) const { return pick(s.deltas(), i, e.delta_n, e.delta_n); }
    double theta(std::size_t i) const { return pick(s.thetas(), i, e.theta_n, e.theta_n); }
};

struct Arrays {
    std::vector<double> a, b, g, d, t;
    explicit Arrays(std::size_t m) : a(m), b(m), g(m), d(m), t(m) {}
};

void require_family(const PolySystem& sys, PolyFamily fam, const char* op) {
    if (sys.family() != fam)
        throw InvalidSystem(std::string(op) + " needs a " + std::string(to_string(fam)) + " source system");
}

}  // namespace

double hat_tau0(const PolySystem&) { return 1.0; }

HornerSystem hat_qs(const PolySystem& sys, double tau0_hat, const HatBoundary& ext) {
    require_family(sys, PolyFamily::Quasiseparable, "hat_qs");
    const std::size_t n = sys.size();
    const Extended x{sys, ext, n};
    Arrays h(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        const std::size_t i = n - k + 1;
        h.a[k - 1] = x.alpha(i);
        h.b[k - 1] = x.gamma(i) / x.delta(i);
        h.g[k - 1] = x.beta(i) * x.delta(n - k);
        h.d[k - 1] = x.delta(n - k);
        h.t[k - 1] = x.delta(n - k) * x.theta(i) / x.delta(i);
    }
    return {PolySystem(PolyFamily::Quasiseparable, tau0_hat, std::move(h.a), std::move(h.b), std::move(h.g),
                       std::move(h.d), std::move(h.t)),
            n};
}

HornerSystem hat_ss(const PolySystem& sys, double tau0_hat, const HatBoundary& ext) {
    require_family(sys, PolyFamily::Semiseparable, "hat_ss");
    const std::size_t n = sys.size();
    const Extended x{sys, ext, n};
    Arrays h(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        const std::size_t i = n - k;
        h.a[k - 1] = x.alpha(i);
        h.b[k - 1] = x.gamma(i) / x.delta(i);
        h.g[k - 1] = x.beta(i) * x.delta(i);
        h.d[k - 1] = x.delta(i);
        h.t[k - 1] = x.delta(i) * x.theta(i + 1) / x.delta(i + 1);
    }
    return {PolySystem(PolyFamily::Semiseparable, tau0_hat, std::move(h.a), std::move(h.b), std::move(h.g),
                       std::move(h.d), std::move(h.t)),
            n};
}

HornerSystem hat_wf(const PolySystem& sys, double tau0_hat, const HatBoundary& ext) {
    require_family(sys, PolyFamily::Quasiseparable, "hat_wf");
    const std::size_t n = sys.size();
    for (std::size_t k = 1; k < n; ++k)
        if (sys.beta(k) == 0.0)
            throw InvalidSystem("three-term Horner system needs beta_" + std::to_string(k) + " != 0");
    const Extended x{sys, ext, n};
    Arrays h(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        const std::size_t i = n - k + 1;  // beta_{i} / beta_{i+1} ratios
        const double ratio = x.beta(i) / x.beta(i + 1);
        h.a[k - 1] = x.delta(n - k);
        h.d[k - 1] = -(x.delta(n - k) / x.delta(i)) * (x.theta(i) + x.alpha(i + 1) * ratio);
        if (k >= 2) {
            h.b[k - 1] = x.delta(n - k) * x.alpha(i + 1) * ratio;
            h.g[k - 1] = (x.delta(n - k) / x.delta(i + 1)) * ratio *
                         (x.theta(i + 1) * x.alpha(i + 1) - x.beta(i + 1) * x.gamma(i + 1));
        }
    }
    return {PolySystem(PolyFamily::WellFree, tau0_hat, std::move(h.a), std::move(h.b), std::move(h.g),
                       std::move(h.d), std::move(h.t)),
            n};
}

PolySystem ss_to_qs(const PolySystem& sys) {
    require_family(sys, PolyFamily::Semiseparable, "ss_to_qs");
    const std::size_t n = sys.size();
    Arrays q(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        const double at = k == 1 ? 1.0 : sys.alpha(k - 1) - sys.beta(k - 1) * sys.gamma(k - 1);
        q.a[k - 1] = at;
        q.b[k - 1] = k == 1 ? 1.0 : sys.beta(k - 1);
        q.g[k - 1] = k == 1 ? 0.0 : sys.gamma(k) * at;
        q.d[k - 1] = sys.delta(k);
        q.t[k - 1] = sys.theta(k) + sys.gamma(k) * (k == 1 ? 1.0 : sys.beta(k - 1));
    }
    return PolySystem(PolyFamily::Quasiseparable, sys.tau0(), std::move(q.a), std::move(q.b), std::move(q.g),
                      std::move(q.d), std::move(q.t));
}

PolySystem wf_to_qs(const PolySystem& sys) {
    require_family(sys, PolyFamily::WellFree, "wf_to_qs");
    const std::size_t n = sys.size();
    auto aa = [&](std::size_t i) { return i == 0 ? 1.0 : sys.alpha(i); };
    auto bw = [&](std::size_t i) { return i <= 1 ? 0.0 : sys.beta(i); };
    Arrays q(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        q.d[k - 1] = sys.alpha(k);
        q.g[k - 1] = sys.alpha(k);
        q.t[k - 1] = -(sys.delta(k) + bw(k) / aa(k - 1));
        const double dk = sys.delta(k) / sys.alpha(k) + bw(k) / (aa(k - 1) * sys.alpha(k));
        if (k + 1 < n) {
            q.a[k - 1] = sys.beta(k + 1) / sys.alpha(k + 1);
            q.b[k - 1] = -(dk * sys.beta(k + 1) + sys.gamma(k + 1)) / sys.alpha(k + 1);
        }
    }
    return PolySystem(PolyFamily::Quasiseparable, sys.tau0(), std::move(q.a), std::move(q.b), std::move(q.g),
                      std::move(q.d), std::move(q.t));
}

HornerSystem horner_system(const PolySystem& sys, double tau0_hat) {
    switch (sys.family()) {
        case PolyFamily::Quasiseparable: return hat_qs(sys, tau0_hat);
        case PolyFamily::Semiseparable: return hat_ss(sys, tau0_hat);
        case PolyFamily::WellFree: return hat_qs(wf_to_qs(sys), tau0_hat);
    }
    throw InvalidSystem("unknown family");
}

}  // namespace qsvand
