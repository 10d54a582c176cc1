#include <doctest.h>

#include "qsvand/displacement.hpp"
#include "qsvand/error.hpp"
#include "test_support.hpp"

using namespace qsvand;
using namespace qsvand::testing;

TEST_CASE("W_Q from structured solves matches N_Q M_Q^{-1}") {
    Rng rng(11);
    for (auto fam : kFamilies) {
        const auto sys = random_system(fam, 9, rng);
        const auto w = wq_dense(sys);
        CHECK(max_abs_diff(w, dense_wq(sys)) <= 1e-13 * std::max(1.0, max_abs(w)));
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j <= i; ++j) CHECK(w(i, j) == 0.0);
    }
}

TEST_CASE("W_Q of the monomial system is the up-shift") {
    const auto w = wq_dense(monomial_preset(4));
    CHECK(w == DenseMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
}

TEST_CASE("canonical generators materialize to V_Q") {
    Rng rng(12);
    for (auto fam : kFamilies) {
        const auto sys = random_system(fam, 8, rng);
        const auto x = random_nodes(8, rng);
        const auto inst = canonical_vq_generators(sys, x);
        CHECK(inst.alpha_rank() == 1);
        const auto v = build_vandermonde(sys, x);
        CHECK(rel_diff(materialize(inst), v) <= 1e-13);
        CHECK(displacement_residual(inst, v) <= 1e-12 * norm_inf(v));
    }
}

TEST_CASE("materialize satisfies the displacement equation") {
    Rng rng(13);
    for (auto fam : kFamilies) {
        for (std::size_t a : {1, 2, 3}) {
            const auto inst = random_instance(fam, 7, a, rng);
            const auto r = materialize(inst);
            CHECK(dense_displacement(r, inst.nodes.values(), dense_wq(inst.sys), inst.G, inst.B) <=
                  1e-12 * norm_inf(r));
        }
    }
}

TEST_CASE("instance shape checks") {
    const auto sys = monomial_preset(3);
    const NodeSet x({1.0, 2.0, 3.0});
    CHECK_NOTHROW(make_instance(sys, x, DenseMatrix(3, 2), DenseMatrix(2, 3)));
    CHECK_THROWS_AS(make_instance(sys, NodeSet({1.0, 2.0}), DenseMatrix(3, 1), DenseMatrix(1, 3)), DimensionMismatch);
    CHECK_THROWS_AS(make_instance(sys, x, DenseMatrix(2, 1), DenseMatrix(1, 3)), DimensionMismatch);
    CHECK_THROWS_AS(make_instance(sys, x, DenseMatrix(3, 2), DenseMatrix(1, 3)), DimensionMismatch);
    CHECK_THROWS_AS(make_instance(sys, x, DenseMatrix(3, 0), DenseMatrix(0, 3)), DimensionMismatch);
    const auto inst = make_instance(sys, x, DenseMatrix(3, 1), DenseMatrix(1, 3));
    CHECK_THROWS_AS(displacement_residual(inst, DenseMatrix(2, 2)), DimensionMismatch);
}
