// Randomized invariants over many seeds, families, sizes and displacement ranks.
#include <doctest.h>

#include "qsvand/basis_transform.hpp"
#include "qsvand/fast_gepp.hpp"
#include "qsvand/horner.hpp"
#include "qsvand/inversion.hpp"
#include "test_support.hpp"

using namespace qsvand;
using namespace qsvand::testing;

namespace {

template <class F>
void for_random_instances(std::uint64_t seed, std::size_t count, F&& f) {
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, 11), rank(1, 3);
    for (std::size_t t = 0; t < count; ++t) {
        for (auto fam : kFamilies) {
            const std::size_t n = size(rng), a = rank(rng);
            f(random_instance(fam, n, a, rng));
        }
    }
}

}  // namespace

TEST_CASE("property: materialized R satisfies its displacement equation") {
    for_random_instances(101, 30, [](const DisplacementInstance& inst) {
        const auto r = materialize(inst);
        CHECK(displacement_residual(inst, r) <= 1e-11 * std::max(1.0, norm_inf(r)));
    });
}

TEST_CASE("property: fast GEPP is a backward-stable partial-pivoting factorization") {
    for_random_instances(102, 30, [](const DisplacementInstance& inst) {
        const auto r = materialize(inst);
        const auto f = gepp(inst);
        CHECK(norm_inf(assemble(f) - r) <= 1e-10 * norm_inf(r));
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(f.L(i, i) == 1.0);
            for (std::size_t j = 0; j < i; ++j) CHECK(std::abs(f.L(i, j)) <= 1.0 + 1e-14);
            for (std::size_t j = i + 1; j < f.size(); ++j) CHECK(f.L(i, j) == 0.0);
        }
        CHECK(f.pivoted_nodes.size() == inst.size());
    });
}

TEST_CASE("property: solves and inverse agree with the oracle on well-conditioned instances") {
    for_random_instances(103, 20, [](const DisplacementInstance& inst) {
        const auto r = materialize(inst);
        if (oracle::cond_estimate(r) > 1e6) return;
        const std::size_t n = inst.size();
        std::vector<double> b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = std::sin(1.0 + static_cast<double>(i));
        const auto f = gepp(inst);
        const auto x = solve(f, b), y = solve_transposed(f, b);
        const auto xd = oracle::dense_solve(r, b), yd = oracle::dense_solve(r.transposed(), b);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(x[i] == doctest::Approx(xd[i]).epsilon(1e-7).scale(norm_inf(xd)));
            CHECK(y[i] == doctest::Approx(yd[i]).epsilon(1e-7).scale(norm_inf(yd)));
        }
        const auto dense = oracle::dense_inverse(r);
        CHECK(rel_diff(invert(inst).rinv, dense) <= 1e-6);
    });
}

TEST_CASE("property: inverse is linear in the inverse scaling of G") {
    for_random_instances(104, 10, [](const DisplacementInstance& inst) {
        const auto scaled = make_instance(inst.sys, inst.nodes, 4.0 * inst.G, inst.B);
        const auto a = invert(inst).rinv, b = invert(scaled).rinv;
        CHECK(rel_diff(4.0 * b, a) <= 1e-12);
    });
}

TEST_CASE("property: the Horner map is an involution on W") {
    Rng rng(105);
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto sys = random_system(PolyFamily::Quasiseparable, n, rng);
        const auto twice = hat_qs(hat_qs(sys).hat).hat;
        CHECK(rel_diff(dense_wq(twice), dense_wq(sys)) <= 1e-11);
    }
}

TEST_CASE("property: S_PQ column k has degree k and leading coefficient tau0 * prod tau") {
    Rng rng(106);
    for (auto fam : kFamilies) {
        for (std::size_t n = 1; n <= 10; ++n) {
            const auto sys = random_system(fam, n, rng);
            const auto s = spq(sys).S;
            double lead = sys.tau0();
            for (std::size_t k = 0; k < n; ++k) {
                if (k > 0) lead *= sys.tau(k);
                CHECK(s(k, k) == doctest::Approx(lead).epsilon(1e-13));
                for (std::size_t r = k + 1; r < n; ++r) CHECK(s(r, k) == 0.0);
            }
        }
    }
}
