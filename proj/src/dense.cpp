#include "qsvand/dense.hpp"

#include <algorithm>
#include <cmath>

#include "qsvand/error.hpp"

namespace qsvand {

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::size_t rows, std::size_t cols, std::vector<double> data) {
    if (data.size() != rows * cols) throw DimensionMismatch("flat data does not match rows*cols");
    DenseMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(data);
    return m;
}

std::vector<double> DenseMatrix::col(std::size_t j) const {
    std::vector<double> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

DenseMatrix DenseMatrix::transposed() const {
    // Tiled, so power-of-two strides do not thrash the cache.
    constexpr std::size_t kTile = 32;
    DenseMatrix t(cols_, rows_);
    for (std::size_t i0 = 0; i0 < rows_; i0 += kTile)
        for (std::size_t j0 = 0; j0 < cols_; j0 += kTile) {
            const std::size_t i1 = std::min(rows_, i0 + kTile), j1 = std::min(cols_, j0 + kTile);
            for (std::size_t i = i0; i < i1; ++i)
                for (std::size_t j = j0; j < j1; ++j) t(j, i) = (*this)(i, j);
        }
    return t;
}

namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix shapes differ");
}

}  // namespace

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b);
    DenseMatrix r = a;
    auto rd = r.data();
    auto bd = b.data();
    for (std::size_t i = 0; i < rd.size(); ++i) rd[i] += bd[i];
    return r;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b);
    DenseMatrix r = a;
    auto rd = r.data();
    auto bd = b.data();
    for (std::size_t i = 0; i < rd.size(); ++i) rd[i] -= bd[i];
    return r;
}

DenseMatrix operator*(double s, const DenseMatrix& a) {
    DenseMatrix r = a;
    for (double& v : r.data()) v *= s;
    return r;
}

double norm_inf(const DenseMatrix& a) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double sum = 0.0;
        for (double v : a.row(i)) sum += std::abs(v);
        best = std::max(best, sum);
    }
    return best;
}

double norm_inf(std::span<const double> v) {
    double best = 0.0;
    for (double x : v) best = std::max(best, std::abs(x));
    return best;
}

double max_abs(const DenseMatrix& a) { return norm_inf(a.data()); }

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b);
    double best = 0.0;
    auto ad = a.data();
    auto bd = b.data();
    for (std::size_t i = 0; i < ad.size(); ++i) best = std::max(best, std::abs(ad[i] - bd[i]));
    return best;
}

}  // namespace qsvand
