#include "qsvand/instance_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "qsvand/error.hpp"

namespace qsvand::io {

using nlohmann::json;

std::string serialize_instance(const DisplacementInstance& inst) {
    const auto& s = inst.sys;
    auto vec = [](std::span<const double> v) { return std::vector<double>(v.begin(), v.end()); };
    json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = std::string(to_string(s.family()));
    j["n"] = s.size();
    j["tau0"] = s.tau0();
    j["alpha"] = vec(s.alphas());
    j["beta"] = vec(s.betas());
    j["gamma"] = vec(s.gammas());
    j["delta"] = vec(s.deltas());
    j["theta"] = vec(s.thetas());
    j["nodes"] = vec(inst.nodes.values());
    j["alpha_rank"] = inst.alpha_rank();
    j["G"] = vec(inst.G.data());
    j["B"] = vec(inst.B.data());
    return j.dump(2) + "\n";
}

namespace {

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

std::vector<double> numbers(const json& j, const char* key, std::size_t expected) {
    const json& v = field(j, key);
    if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
    if (v.size() != expected)
        throw ParseError(std::string("field '") + key + "' has " + std::to_string(v.size()) + " entries, expected " +
                         std::to_string(expected));
    std::vector<double> out;
    out.reserve(expected);
    for (const auto& e : v) {
        if (!e.is_number()) throw ParseError(std::string("field '") + key + "' holds a non-number");
        out.push_back(e.get<double>());
    }
    return out;
}

std::size_t positive_int(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() <= 0)
        throw ParseError(std::string("field '") + key + "' must be a positive integer");
    return static_cast<std::size_t>(v.get<long long>());
}

}  // namespace

DisplacementInstance parse_instance(const std::string& text, bool validate_nodes) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    const json& ver = field(j, "schema_version");
    if (!ver.is_number_integer() || ver.get<int>() != kSchemaVersion)
        throw ParseError("unsupported schema_version");
    const json& fam = field(j, "family");
    if (!fam.is_string()) throw ParseError("field 'family' must be a string");

    try {
        const PolyFamily family = parse_family(fam.get<std::string>());
        const std::size_t n = positive_int(j, "n");
        const std::size_t a = positive_int(j, "alpha_rank");
        const json& t0 = field(j, "tau0");
        if (!t0.is_number()) throw ParseError("field 'tau0' must be a number");
        PolySystem sys(family, t0.get<double>(), numbers(j, "alpha", n - 1), numbers(j, "beta", n - 1),
                       numbers(j, "gamma", n - 1), numbers(j, "delta", n - 1), numbers(j, "theta", n - 1));
        auto x = numbers(j, "nodes", n);
        NodeSet nodes = validate_nodes ? NodeSet(std::move(x)) : NodeSet::unchecked(std::move(x));
        return make_instance(std::move(sys), std::move(nodes), DenseMatrix::from_rows(n, a, numbers(j, "G", n * a)),
                             DenseMatrix::from_rows(a, n, numbers(j, "B", a * n)));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

DisplacementInstance read_instance_file(const std::string& path, bool validate_nodes) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_instance(text, validate_nodes);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
    if (!out) throw Error("write to '" + path + "' failed");
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    char buf[40];
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
            if (j) out << ' ';
            out << buf;
        }
        out << '\n';
    }
}

std::string format_matrix(const DenseMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

DenseMatrix read_matrix(std::istream& in) {
    long long rows = -1, cols = -1;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw ParseError("matrix dump: bad header");
    DenseMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::string tok;
    for (auto& v : m.data()) {
        if (!(in >> tok)) throw ParseError("matrix dump: truncated data");
        errno = 0;
        char* end = nullptr;
        v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size() || tok.empty()) throw ParseError("matrix dump: bad number '" + tok + "'");
    }
    return m;
}

DenseMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    DenseMatrix m = read_matrix(in);
    std::string rest;
    if (in >> rest) throw ParseError("matrix dump: trailing data");
    return m;
}

}  // namespace qsvand::io
