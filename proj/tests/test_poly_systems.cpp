#include <doctest.h>

#include <cmath>
#include <limits>

#include "qsvand/error.hpp"
#include "qsvand/poly_systems.hpp"
#include "test_support.hpp"

using namespace qsvand;
using namespace qsvand::testing;

TEST_CASE("family names") {
    CHECK(parse_family("qs") == PolyFamily::Quasiseparable);
    CHECK(parse_family("semiseparable") == PolyFamily::Semiseparable);
    CHECK(parse_family("well-free") == PolyFamily::WellFree);
    CHECK(to_string(PolyFamily::WellFree) == "wf");
    CHECK_THROWS_AS(parse_family("chebyshev"), InvalidSystem);
}

TEST_CASE("system validation") {
    const std::vector<double> one{1.0}, zero{0.0};
    CHECK_NOTHROW(PolySystem(PolyFamily::Quasiseparable, 1.0, {}, {}, {}, {}, {}));
    CHECK_THROWS_AS(PolySystem(PolyFamily::Quasiseparable, 1.0, one, one, one, {}, one), InvalidSystem);
    // deg Q_k = k needs delta_k != 0 (QS/SS) or alpha_k != 0 (WF)
    CHECK_THROWS_AS(PolySystem(PolyFamily::Quasiseparable, 1.0, one, one, one, zero, one), InvalidSystem);
    CHECK_THROWS_AS(PolySystem(PolyFamily::Semiseparable, 1.0, one, one, one, zero, one), InvalidSystem);
    CHECK_THROWS_AS(PolySystem(PolyFamily::WellFree, 1.0, zero, one, one, one, one), InvalidSystem);
    CHECK_NOTHROW(PolySystem(PolyFamily::WellFree, 1.0, one, one, one, zero, one));
    CHECK_THROWS_AS(PolySystem(PolyFamily::Quasiseparable, 0.0, one, one, one, one, one), InvalidSystem);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(PolySystem(PolyFamily::Quasiseparable, 1.0, {nan}, one, one, one, one), InvalidSystem);
}

TEST_CASE("node validation") {
    CHECK_NOTHROW(NodeSet({0.5, 1.0, 2.0}));
    CHECK_THROWS_AS(NodeSet({0.5, 0.0}), InvalidNodes);
    CHECK_THROWS_AS(NodeSet({0.5, 1.0, 0.5}), InvalidNodes);
    CHECK_THROWS_AS(NodeSet({std::numeric_limits<double>::infinity()}), InvalidNodes);
    CHECK(NodeSet::unchecked({1.0, 1.0}).size() == 2);
}

TEST_CASE("monomial preset evaluates x^k") {
    const auto sys = monomial_preset(6);
    const auto q = evaluate_system(sys, 1.5);
    for (std::size_t k = 0; k < 6; ++k) CHECK(q[k] == doctest::Approx(std::pow(1.5, k)));
    CHECK(monomial_preset(3, 2.0).tau0() == 2.0);
    CHECK_THROWS_AS(monomial_preset(0), InvalidSystem);
}

TEST_CASE("chebyshev preset evaluates T_k") {
    const auto sys = chebyshev_preset(9);
    for (double x : {-0.9, -0.2, 0.35, 0.8}) {
        const auto q = evaluate_system(sys, x);
        for (std::size_t k = 0; k < 9; ++k) CHECK(q[k] == doctest::Approx(std::cos(k * std::acos(x))).epsilon(1e-12));
    }
}

TEST_CASE("three-term preset") {
    // Legendre: k P_k = (2k-1) x P_{k-1} - (k-1) P_{k-2}, rescaled to monic-free form.
    std::vector<double> a, d, g;
    for (int k = 1; k < 7; ++k) {
        a.push_back((2.0 * k - 1.0) / k);
        d.push_back(0.0);
        g.push_back((k - 1.0) / k);
    }
    const auto sys = three_term_preset(a, d, g);
    const auto q = evaluate_system(sys, 0.3);
    CHECK(q[2] == doctest::Approx(0.5 * (3 * 0.09 - 1)));
    CHECK(q[3] == doctest::Approx(0.5 * (5 * 0.027 - 3 * 0.3)));
    CHECK_THROWS_AS(three_term_preset({1.0, 0.0}, {0, 0}, {0, 0}), InvalidSystem);
    CHECK_THROWS_AS(three_term_preset({1.0}, {0, 0}, {0}), InvalidSystem);
}

TEST_CASE("szego preset follows the two-term Szego recurrence") {
    const std::vector<double> rho{0.3, -0.45, 0.2, 0.6, -0.1};
    const auto sys = szego_preset(rho);
    CHECK(sys.family() == PolyFamily::Semiseparable);
    for (double x : {0.4, 1.3}) {
        // phi_k = (phi_{k-1} - rho_k x phi#_{k-1}) / mu_k,  phi#_k = (-rho_k phi_{k-1} + x phi#_{k-1}) / mu_k
        double phi = 1.0, phis = 1.0;
        const auto q = evaluate_system(sys, x);
        CHECK(q[0] == 1.0);
        for (std::size_t k = 0; k < rho.size(); ++k) {
            const double mu = std::sqrt(1 - rho[k] * rho[k]);
            const double nphi = (phi - rho[k] * x * phis) / mu;
            phis = (-rho[k] * phi + x * phis) / mu;
            phi = nphi;
            CHECK(q[k + 1] == doctest::Approx(phis).epsilon(1e-13));
        }
    }
    CHECK_THROWS_AS(szego_preset(std::vector<double>{1.0}), InvalidSystem);
}

TEST_CASE("evaluation matches the general recurrence for every family") {
    Rng rng(101);
    for (auto fam : kFamilies) {
        const auto sys = random_system(fam, 9, rng);
        for (double x : {0.3, 1.1, 1.9}) {
            const auto a = evaluate_system(sys, x);
            const auto b = general_recurrence_values(sys, x);
            for (std::size_t k = 0; k < 9; ++k) CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-12));
        }
    }
}

TEST_CASE("vandermonde layout and size checks") {
    const auto sys = monomial_preset(3);
    const auto v = build_vandermonde(sys, NodeSet({1.0, 2.0, 3.0}));
    CHECK(v == DenseMatrix{{1, 1, 1}, {1, 2, 4}, {1, 3, 9}});
    CHECK_THROWS_AS(build_vandermonde(sys, NodeSet({1.0, 2.0})), DimensionMismatch);
    std::vector<double> out(2);
    CHECK_THROWS_AS(evaluate_system(sys, 1.0, out), DimensionMismatch);
}

TEST_CASE("random systems follow the test distributions") {
    Rng rng(5);
    const auto wf = random_system(PolyFamily::WellFree, 6, rng);
    CHECK(wf.beta(1) == 0.0);
    CHECK(wf.gamma(1) == 0.0);
    const auto qs = random_system(PolyFamily::Quasiseparable, 40, rng);
    for (std::size_t k = 1; k < 40; ++k) {
        CHECK(qs.delta(k) >= 0.5);
        CHECK(qs.delta(k) <= 1.5);
        CHECK(std::abs(qs.theta(k)) <= 0.5);
    }
    const auto x = random_nodes(30, rng);
    for (std::size_t i = 0; i < 30; ++i) {
        CHECK(x[i] >= 0.3);
        CHECK(x[i] <= 2.0);
        for (std::size_t j = 0; j < i; ++j) CHECK(std::abs(x[i] - x[j]) >= 1e-3);
    }
    Rng r1(9), r2(9);
    CHECK(random_system(PolyFamily::Semiseparable, 5, r1) == random_system(PolyFamily::Semiseparable, 5, r2));
}
