#include "qsvand/displacement.hpp"

#include "qsvand/error.hpp"
#include "qsvand/recurrence.hpp"

namespace qsvand {

DisplacementInstance make_instance(PolySystem sys, NodeSet nodes, DenseMatrix G, DenseMatrix B) {
    const std::size_t n = sys.size();
    if (nodes.size() != n) throw DimensionMismatch("node count must equal n");
    if (G.rows() != n) throw DimensionMismatch("G must have n rows");
    if (G.cols() == 0) throw DimensionMismatch("displacement rank must be at least 1");
    if (B.rows() != G.cols() || B.cols() != n) throw DimensionMismatch("B must be alpha x n");
    return DisplacementInstance{std::move(sys), std::move(nodes), std::move(G), std::move(B)};
}

DenseMatrix wq_dense(const PolySystem& sys) {
    const std::size_t n = sys.size();
    const auto m = shifted_generators(sys, 0.0);
    DenseMatrix w(n, n);
    std::vector<double> rhs(n, 0.0);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        rhs[r + 1] = sys.tau(r + 1);
        qs_solve(m.gens, rhs, w.row(r));
        rhs[r + 1] = 0.0;
    }
    return w;
}

DenseMatrix materialize(const DisplacementInstance& inst) {
    const std::size_t n = inst.size();
    const std::size_t a = inst.alpha_rank();
    const DenseMatrix w = wq_dense(inst.sys);
    DenseMatrix r(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t t = 0; t < a; ++t) acc += inst.G(i, t) * inst.B(t, j);
            for (std::size_t m = 0; m < j; ++m) acc += r(i, m) * w(m, j);
            r(i, j) = inst.nodes[i] * acc;
        }
    }
    return r;
}

DisplacementInstance canonical_vq_generators(const PolySystem& sys, const NodeSet& nodes) {
    const std::size_t n = sys.size();
    DenseMatrix G(n, 1);
    for (std::size_t i = 0; i < n; ++i) G(i, 0) = 1.0 / nodes[i];
    std::vector<double> e(n, 0.0);
    e[0] = sys.tau0();
    const auto row = qs_solve(shifted_generators(sys, 0.0).gens, e);
    DenseMatrix B = DenseMatrix::from_rows(1, n, row);
    return make_instance(sys, nodes, std::move(G), std::move(B));
}

double displacement_residual(const DisplacementInstance& inst, const DenseMatrix& R) {
    const std::size_t n = inst.size();
    if (R.rows() != n || R.cols() != n) throw DimensionMismatch("R must be n x n");
    const DenseMatrix w = wq_dense(inst.sys);
    DenseMatrix res(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double v = R(i, j) / inst.nodes[i];
            for (std::size_t m = 0; m < j; ++m) v -= R(i, m) * w(m, j);
            for (std::size_t t = 0; t < inst.alpha_rank(); ++t) v -= inst.G(i, t) * inst.B(t, j);
            res(i, j) = v;
        }
    }
    return norm_inf(res);
}

}  // namespace qsvand
