// qsvand: generate, factor, invert, verify and benchmark polynomial-Vandermonde-like instances.
//
// Exit codes: 0 ok, 2 numerical failure (singular pivot, residual over threshold),
// 3 input failure (bad flags, unreadable or malformed files), 1 anything else.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsvand/error.hpp"
#include "qsvand/fast_gepp.hpp"
#include "qsvand/instance_io.hpp"
#include "qsvand/inversion.hpp"
#include "qsvand/oracle.hpp"
#include "qsvand/random.hpp"
#include "qsvand/timing.hpp"

namespace {

using namespace qsvand;

constexpr int kOk = 0;
constexpr int kNumerical = 2;
constexpr int kInput = 3;

// Raised for a verification that ran to completion but missed its threshold.
struct ThresholdMiss {};

void emit(const std::optional<std::string>& out_path, const std::string& text) {
    if (out_path) {
        io::write_text_file(*out_path, text);
    } else {
        std::cout << text;
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// QSVAND_TOL replaces the default 1e-7 * kappa residual threshold with an absolute one.
std::optional<double> env_tolerance() {
    const char* raw = std::getenv("QSVAND_TOL");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (*end != '\0' || !(v > 0.0) || !std::isfinite(v))
        throw ParseError(std::string("QSVAND_TOL must be a positive number, got '") + raw + "'");
    return v;
}

struct OracleReport {
    double residual_left;
    double residual_right;
    double deviation;  // max |fast - dense| / max |dense|
    double kappa;
    double threshold;
};

OracleReport compare_with_oracle(const DisplacementInstance& inst, const DenseMatrix& rinv) {
    const DenseMatrix R = materialize(inst);
    const DenseMatrix dense = oracle::dense_inverse(R);
    const ResidualReport res = residual_report(R, rinv);
    OracleReport rep{res.left, res.right, max_abs_diff(rinv, dense) / max_abs(dense),
                     norm_inf(R) * norm_inf(dense), 0.0};
    const auto tol = env_tolerance();
    rep.threshold = tol ? *tol : 1e-7 * rep.kappa;
    return rep;
}

void print_report(const OracleReport& r) {
    std::cerr << "residual_left " << fmt(r.residual_left) << "\n"
              << "residual_right " << fmt(r.residual_right) << "\n"
              << "max_rel_deviation " << fmt(r.deviation) << "\n"
              << "kappa_estimate " << fmt(r.kappa) << "\n"
              << "threshold " << fmt(r.threshold) << "\n";
}

bool finite(const DenseMatrix& m) {
    for (double v : m.data())
        if (!std::isfinite(v)) return false;
    return true;
}

struct Common {
    std::string in_path;
    std::optional<std::string> out_path;
    bool no_validate = false;
};

int cmd_gen(const std::string& family, std::size_t n, std::size_t alpha, std::uint64_t seed, bool canonical,
            const std::optional<std::string>& out_path) {
    if (n == 0) throw ParseError("--n must be at least 1");
    if (alpha == 0) throw ParseError("--alpha must be at least 1");
    PolyFamily fam;
    try {
        fam = parse_family(family);
    } catch (const InvalidSystem& e) {
        throw ParseError(e.what());
    }
    Rng rng(seed);
    emit(out_path, io::serialize_instance(random_instance(fam, n, alpha, rng, canonical)));
    return kOk;
}

int cmd_factor(const Common& c) {
    const auto inst = io::read_instance_file(c.in_path, !c.no_validate);
    const PluFactorization f = gepp(inst);
    DenseMatrix swaps(1, f.size());
    for (std::size_t k = 0; k < f.size(); ++k) swaps(0, k) = static_cast<double>(f.swaps[k]);
    std::ostringstream os;
    io::write_matrix(os, swaps);
    io::write_matrix(os, f.L);
    io::write_matrix(os, f.U);
    emit(c.out_path, os.str());
    return kOk;
}

int cmd_invert(const Common& c, bool verify) {
    const auto inst = io::read_instance_file(c.in_path, !c.no_validate);
    const InverseResult res = invert(inst);
    if (!finite(res.rinv)) throw SingularMatrix(0, "inverse has non-finite entries");
    emit(c.out_path, io::format_matrix(res.rinv));
    if (!verify) return kOk;
    const OracleReport rep = compare_with_oracle(inst, res.rinv);
    print_report(rep);
    if (!(rep.residual_left <= rep.threshold)) throw ThresholdMiss{};
    return kOk;
}

int cmd_verify(const Common& c) {
    const auto inst = io::read_instance_file(c.in_path, !c.no_validate);
    const PluFactorization f = gepp(inst);
    const DenseMatrix R = materialize(inst);
    const double plu = norm_inf(assemble(f) - R) / norm_inf(R);
    double max_l = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) max_l = std::max(max_l, std::abs(f.L(i, j)));
    const InverseResult res = invert(inst);
    const OracleReport rep = compare_with_oracle(inst, res.rinv);
    std::cerr << "plu_relative_residual " << fmt(plu) << "\n"
              << "max_abs_L_subdiagonal " << fmt(max_l) << "\n";
    print_report(rep);
    const bool ok = plu <= 1e-9 && max_l <= 1.0 + 1e-14 && rep.residual_left <= rep.threshold;
    std::cout << (ok ? "ok" : "fail") << "\n";
    if (!ok) throw ThresholdMiss{};
    return kOk;
}

int cmd_bench(const std::string& family, const std::vector<std::size_t>& sizes, std::size_t alpha,
              std::size_t reps, std::uint64_t seed, const std::optional<std::string>& out_path) {
    BenchOptions opt;
    try {
        opt.family = parse_family(family);
    } catch (const InvalidSystem& e) {
        throw ParseError(e.what());
    }
    for (std::size_t n : sizes)
        if (n == 0) throw ParseError("bench sizes must be at least 1");
    if (reps == 0) throw ParseError("--reps must be at least 1");
    if (alpha == 0) throw ParseError("--alpha must be at least 1");
    opt.sizes = sizes;
    opt.alpha_rank = alpha;
    opt.reps = reps;
    opt.seed = seed;
    const auto rows = run_bench(opt);

    std::string slope;
    std::vector<double> xs, ys;
    for (const auto& r : rows) {
        xs.push_back(static_cast<double>(r.n));
        ys.push_back(r.fast_seconds);
    }
    try {
        slope = fmt(loglog_slope(xs, ys));
    } catch (const DimensionMismatch&) {
        // single size or degenerate timings: no exponent
    }
    std::ostringstream os;
    os << "n,fast_seconds,oracle_seconds,fitted_exponent\n";
    for (const auto& r : rows)
        os << r.n << ',' << fmt(r.fast_seconds) << ',' << (r.oracle_seconds ? fmt(*r.oracle_seconds) : "") << ','
           << slope << '\n';
    emit(out_path, os.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fast GEPP and inversion of polynomial-Vandermonde-like matrices"};
    app.require_subcommand(1);

    std::string family = "qs";
    std::size_t n = 0, alpha = 1, reps = 3;
    std::uint64_t seed = 0;
    bool canonical = false, verify = false;
    std::vector<std::size_t> sizes{64, 128, 256, 512};
    Common common;

    auto* gen = app.add_subcommand("gen", "Write a random instance as JSON");
    gen->add_option("--family", family, "qs, ss or wf")->capture_default_str();
    gen->add_option("--n", n, "Matrix size")->required();
    gen->add_option("--alpha", alpha, "Displacement rank")->capture_default_str();
    gen->add_option("--seed", seed, "RNG seed")->capture_default_str();
    gen->add_flag("--canonical", canonical, "Use the rank-one generators of V_Q itself");
    gen->add_option("--out", common.out_path, "Output file (default stdout)");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", common.in_path, "Instance JSON")->required();
        sub->add_option("--out", common.out_path, "Output file (default stdout)");
        sub->add_flag("--no-validate", common.no_validate, "Admit zero or duplicated nodes");
    };
    auto* factor = app.add_subcommand("factor", "Dump swaps, L and U of the fast GEPP");
    add_input(factor);
    auto* inv = app.add_subcommand("invert", "Dump R^{-1} from the fast inversion");
    add_input(inv);
    inv->add_flag("--verify", verify, "Compare with the dense oracle; exit 2 over threshold");
    auto* ver = app.add_subcommand("verify", "Check factorization and inverse against the dense oracle");
    add_input(ver);

    auto* bench = app.add_subcommand("bench", "Time fast inversion against the dense oracle (CSV)");
    bench->add_option("--family", family, "qs, ss or wf")->capture_default_str();
    bench->add_option("--sizes", sizes, "Matrix sizes")->delimiter(',')->capture_default_str();
    bench->add_option("--alpha", alpha, "Displacement rank")->capture_default_str();
    bench->add_option("--reps", reps, "Repetitions per size (median reported)")->capture_default_str();
    bench->add_option("--seed", seed, "RNG seed")->capture_default_str();
    bench->add_option("--out", common.out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*gen) return cmd_gen(family, n, alpha, seed, canonical, common.out_path);
        if (*factor) return cmd_factor(common);
        if (*inv) return cmd_invert(common, verify);
        if (*ver) return cmd_verify(common);
        if (*bench) return cmd_bench(family, sizes, alpha, reps, seed, common.out_path);
    } catch (const ThresholdMiss&) {
        std::cerr << "error: residual above threshold\n";
        return kNumerical;
    } catch (const SingularMatrix& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumerical;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const InvalidSystem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const InvalidNodes& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
