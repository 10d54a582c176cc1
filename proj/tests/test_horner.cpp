#include <doctest.h>

#include "qsvand/error.hpp"
#include "qsvand/horner.hpp"
#include "test_support.hpp"

using namespace qsvand;
using namespace qsvand::testing;

namespace {

// tau-hat_k = tau_{n-k}, a-hat_{jk} = tau_{n-k} / tau_{n-j} a_{n-k, n-j}, for k >= 1 and j >= 1.
// Row j = 0 and tau-hat_0 reach outside the source system and are not constrained.
double hat_law_error(const PolySystem& src, const PolySystem& hat) {
    const std::size_t n = src.size();
    double err = 0.0, scale = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        err = std::max(err, std::abs(hat.tau(k) - src.tau(n - k)));
        for (std::size_t j = 1; j < k; ++j) {
            const double want = src.tau(n - k) / src.tau(n - j) * recurrence_coefficient(src, n - k, n - j);
            err = std::max(err, std::abs(recurrence_coefficient(hat, j, k) - want));
            scale = std::max(scale, std::abs(want));
        }
    }
    return err / scale;
}

HornerSystem hat_for(const PolySystem& sys) {
    return sys.family() == PolyFamily::Semiseparable ? hat_ss(sys) : hat_qs(sys);
}

}  // namespace

TEST_CASE("hat-coefficient law for every family") {
    Rng rng(31);
    for (auto fam : kFamilies) {
        for (std::size_t n : {2, 3, 7, 10}) {
            const auto sys = random_system(fam, n, rng);
            const auto h = horner_system(sys);
            CHECK(h.source_n == n);
            CHECK(h.hat.size() == n);
            CHECK(hat_law_error(sys, h.hat) <= 1e-12);
        }
    }
}

TEST_CASE("W of the Horner system is the flipped transpose of W_Q") {
    Rng rng(32);
    for (auto fam : kFamilies) {
        const auto sys = random_system(fam, 8, rng);
        const auto j = reversal(8);
        const auto flipped = oracle::dense_matmul(j, oracle::dense_matmul(dense_wq(sys).transposed(), j));
        CHECK(max_abs_diff(dense_wq(horner_system(sys).hat), flipped) <= 1e-12 * std::max(1.0, max_abs(flipped)));
    }
}

TEST_CASE("monomial Horner system is monomial") {
    const auto h = hat_qs(monomial_preset(6));
    const auto q = evaluate_system(h.hat, 1.7);
    for (std::size_t k = 0; k < 6; ++k) CHECK(q[k] == doctest::Approx(std::pow(1.7, k)));
}

TEST_CASE("boundary extension and tau-hat_0 do not reach W") {
    Rng rng(33);
    const auto sys = random_system(PolyFamily::Quasiseparable, 7, rng);
    HatBoundary other;
    other.alpha_n = 0.3;
    other.beta_n = -2.0;
    other.gamma_n = 0.7;
    other.delta_n = 1.9;
    other.theta_n = -0.4;
    other.alpha_n1 = 3.0;
    other.beta_n1 = 0.25;
    const auto a = hat_qs(sys).hat;
    const auto b = hat_qs(sys, 2.5, other).hat;
    CHECK(b.tau0() == 2.5);
    CHECK(hat_tau0(sys) == 1.0);
    CHECK(max_abs_diff(wq_dense(a), wq_dense(b)) <= 1e-13);
    CHECK(hat_law_error(sys, b) <= 1e-12);

    const auto ss = random_system(PolyFamily::Semiseparable, 7, rng);
    CHECK(max_abs_diff(wq_dense(hat_ss(ss).hat), wq_dense(hat_ss(ss, 0.5, other).hat)) <= 1e-13);
}

TEST_CASE("three-term route agrees with the quasiseparable route") {
    Rng rng(34);
    for (std::size_t n : {3, 6, 10}) {
        const auto sys = random_system(PolyFamily::Quasiseparable, n, rng);
        const auto wf = hat_wf(sys).hat;
        const auto qs = hat_qs(sys).hat;
        CHECK(wf.family() == PolyFamily::WellFree);
        CHECK(hat_law_error(sys, wf) <= 1e-12);
        const auto mw = build_mn(wf), mq = build_mn(qs);
        for (std::size_t k = 1; k < n; ++k) {
            CHECK(mw.nq(k - 1, k) == doctest::Approx(mq.nq(k - 1, k)));
            for (std::size_t j = 1; j < k; ++j) CHECK(mw.mq(j, k) == doctest::Approx(mq.mq(j, k)).epsilon(1e-12));
        }
        CHECK(max_abs_diff(wq_dense(wf), wq_dense(qs)) <= 1e-12 * std::max(1.0, max_abs(wq_dense(qs))));
    }
}

TEST_CASE("hat preconditions") {
    Rng rng(35);
    auto qs = random_system(PolyFamily::Quasiseparable, 5, rng);
    const auto ss = random_system(PolyFamily::Semiseparable, 5, rng);
    const auto wf = random_system(PolyFamily::WellFree, 5, rng);
    CHECK_THROWS_AS(hat_qs(ss), InvalidSystem);
    CHECK_THROWS_AS(hat_ss(qs), InvalidSystem);
    CHECK_THROWS_AS(hat_wf(wf), InvalidSystem);
    CHECK_THROWS_AS(ss_to_qs(qs), InvalidSystem);
    CHECK_THROWS_AS(wf_to_qs(ss), InvalidSystem);
    std::vector<double> beta(qs.betas().begin(), qs.betas().end());
    beta[2] = 0.0;
    const PolySystem degenerate(PolyFamily::Quasiseparable, 1.0, std::vector<double>(qs.alphas().begin(), qs.alphas().end()),
                                beta, std::vector<double>(qs.gammas().begin(), qs.gammas().end()),
                                std::vector<double>(qs.deltas().begin(), qs.deltas().end()),
                                std::vector<double>(qs.thetas().begin(), qs.thetas().end()));
    CHECK_THROWS_AS(hat_wf(degenerate), InvalidSystem);
    CHECK_NOTHROW(hat_qs(degenerate));
}

TEST_CASE("quasiseparable rewrites keep the polynomials") {
    Rng rng(36);
    const auto ss = random_system(PolyFamily::Semiseparable, 9, rng);
    const auto wf = random_system(PolyFamily::WellFree, 9, rng);
    const auto a = ss_to_qs(ss), b = wf_to_qs(wf);
    CHECK(a.family() == PolyFamily::Quasiseparable);
    CHECK(b.family() == PolyFamily::Quasiseparable);
    for (double x : {0.4, 1.2, 1.8}) {
        const auto p = evaluate_system(ss, x), q = evaluate_system(a, x);
        const auto r = evaluate_system(wf, x), s = evaluate_system(b, x);
        for (std::size_t k = 0; k < 9; ++k) {
            CHECK(q[k] == doctest::Approx(p[k]).epsilon(1e-12));
            CHECK(s[k] == doctest::Approx(r[k]).epsilon(1e-12));
        }
    }
    // The Chebyshev system survives the round into quasiseparable form.
    const auto cheb = wf_to_qs(chebyshev_preset(6));
    CHECK(evaluate_system(cheb, 0.5)[3] == doctest::Approx(std::cos(3 * std::acos(0.5))));
}
