#include <doctest.h>

#include "qsvand/dense.hpp"
#include "qsvand/error.hpp"

using namespace qsvand;

TEST_CASE("dense matrix construction and access") {
    DenseMatrix a{{1, 2, 3}, {4, 5, 6}};
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);
    CHECK(a(1, 2) == 6);
    CHECK(a.col(1) == std::vector<double>{2, 5});
    CHECK(a.row(1)[0] == 4);
    CHECK_THROWS_AS((DenseMatrix{{1, 2}, {3}}), DimensionMismatch);
    CHECK_THROWS_AS(DenseMatrix::from_rows(2, 2, {1, 2, 3}), DimensionMismatch);
    CHECK(DenseMatrix::identity(3)(2, 2) == 1.0);
    CHECK(DenseMatrix::identity(3)(0, 2) == 0.0);
}

TEST_CASE("transpose, including sizes past one tile") {
    DenseMatrix a{{1, 2, 3}, {4, 5, 6}};
    CHECK(a.transposed() == DenseMatrix{{1, 4}, {2, 5}, {3, 6}});
    DenseMatrix big(70, 45);
    for (std::size_t i = 0; i < 70; ++i)
        for (std::size_t j = 0; j < 45; ++j) big(i, j) = static_cast<double>(i * 100 + j);
    const DenseMatrix t = big.transposed();
    CHECK(t.rows() == 45);
    CHECK(t(44, 69) == big(69, 44));
    CHECK(t.transposed() == big);
}

TEST_CASE("norms and arithmetic") {
    DenseMatrix a{{1, -2}, {-3, 4}};
    CHECK(norm_inf(a) == 7.0);
    CHECK(max_abs(a) == 4.0);
    CHECK(norm_inf(std::vector<double>{-5.0, 2.0}) == 5.0);
    CHECK(a + a == 2.0 * a);
    CHECK(max_abs(a - a) == 0.0);
    CHECK(max_abs_diff(a, DenseMatrix{{1, -2}, {-3, 4.5}}) == 0.5);
    CHECK_THROWS_AS(a + DenseMatrix(3, 3), DimensionMismatch);
    CHECK_THROWS_AS(max_abs_diff(a, DenseMatrix(2, 3)), DimensionMismatch);
}
