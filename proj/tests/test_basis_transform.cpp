#include <doctest.h>

#include "qsvand/basis_transform.hpp"
#include "qsvand/error.hpp"
#include "test_support.hpp"

using namespace qsvand;
using namespace qsvand::testing;

TEST_CASE("chebyshev coefficient columns") {
    const auto b = spq_wf(chebyshev_preset(5));
    const DenseMatrix want{{1, 0, -1, 0, 1}, {0, 1, 0, -3, 0}, {0, 0, 2, 0, -8}, {0, 0, 0, 4, 0}, {0, 0, 0, 0, 8}};
    CHECK(b.S == want);
    CHECK_FALSE(b.T.has_value());
}

TEST_CASE("monomial basis is the identity") {
    const auto b = spq(monomial_preset(5));
    CHECK(b.S == DenseMatrix::identity(5));
    CHECK(*b.T == DenseMatrix(5, 5));
    CHECK(spq(monomial_preset(3, 2.0)).S == 2.0 * DenseMatrix::identity(3));
}

TEST_CASE("coefficients match interpolation, V_Q = V_P S_PQ") {
    Rng rng(41);
    for (auto fam : kFamilies) {
        const auto sys = random_system(fam, 9, rng);
        const auto b = spq(sys);
        CHECK(rel_diff(b.S, coefficients_by_interpolation(sys)) <= 1e-9);
        const auto x = random_nodes(9, rng);
        DenseMatrix vp(9, 9);
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 9; ++j) vp(i, j) = std::pow(x[i], static_cast<double>(j));
        const auto v = build_vandermonde(sys, x);
        CHECK(rel_diff(oracle::dense_matmul(vp, b.S), v) <= 1e-12);
        CHECK(coefficient_rows(sys) == b.S.transposed());
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < i; ++j) CHECK(b.S(i, j) == 0.0);
    }
}

TEST_CASE("auxiliary coefficients") {
    Rng rng(42);
    // Semiseparable G_0 = tau0; quasiseparable G_0 = 0.
    const auto ss = random_system(PolyFamily::Semiseparable, 4, rng);
    CHECK((*spq_ss(ss).T)(0, 0) == ss.tau0());
    const auto qs = random_system(PolyFamily::Quasiseparable, 4, rng);
    CHECK((*spq_qs(qs).T)(0, 0) == 0.0);
    CHECK((*spq_qs(qs).T)(0, 1) == doctest::Approx(qs.beta(1) * qs.tau0()));
    CHECK_THROWS_AS(spq_qs(ss), InvalidSystem);
    CHECK_THROWS_AS(spq_wf(qs), InvalidSystem);
    CHECK_THROWS_AS(spq_ss(qs), InvalidSystem);
}

TEST_CASE("triangular solves with S") {
    Rng rng(43);
    const auto sys = random_system(PolyFamily::Semiseparable, 8, rng);
    const auto b = spq(sys);
    std::vector<double> rhs(8);
    for (std::size_t i = 0; i < 8; ++i) rhs[i] = 1.0 + static_cast<double>(i);
    const auto v = back_substitute(b, rhs);
    const auto v2 = back_substitute_rows(coefficient_rows(sys), rhs);
    const auto w = back_substitute_column(b, rhs);
    for (std::size_t c = 0; c < 8; ++c) {
        double left = 0.0, right = 0.0;
        for (std::size_t r = 0; r < 8; ++r) {
            left += v[r] * b.S(r, c);
            right += b.S(c, r) * w[r];
        }
        CHECK(left == doctest::Approx(rhs[c]).epsilon(1e-10));
        CHECK(right == doctest::Approx(rhs[c]).epsilon(1e-10));
        CHECK(v2[c] == doctest::Approx(v[c]).epsilon(1e-12));
    }
    CHECK_THROWS_AS(back_substitute(b, std::vector<double>(3)), DimensionMismatch);
    CHECK_THROWS_AS(back_substitute_column(b, std::vector<double>(3)), DimensionMismatch);
    CHECK_THROWS_AS(back_substitute_rows(b.S, std::vector<double>(3)), DimensionMismatch);
}
