#include "qaff/io.hpp"

#include "qaff/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace qaff {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(to_text(m.at(i, j)));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j, const std::string& label) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError(label + ": expected {rows, cols, entries}");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() ||
        !j["entries"].is_array())
        throw ParseError(label + ": rows/cols must be nonnegative integers, entries an array");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    const auto& entries = j["entries"];
    if (entries.size() != rows * cols)
        throw ParseError(label + ": entry count " + std::to_string(entries.size()) +
                         " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (!entries[k].is_string())
            throw ParseError(label + ": entries must be rational strings");
        try {
            m.at(k / cols, k % cols) = parse_rational(entries[k].get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(label + ": " + e.what());
        }
    }
    return m;
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

Rational parse_q_field(const json& j) {
    if (!j.contains("q") || !j["q"].is_string())
        throw ParseError("expected a rational string field \"q\"");
    return parse_rational(j["q"].get<std::string>());
}

std::size_t parse_dim_field(const json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw ParseError("expected a nonnegative integer field \"dim\"");
    return j["dim"].get<std::size_t>();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

QParam qparam_or_reject(const Rational& q) {
    if (q == 0 || q == 1 || q == -1) {
        VerificationReport rep;
        rep.add({"q.admissible", false, 0});
        throw ValidationError(std::move(rep));
    }
    return QParam{q};
}

}  // namespace

VerificationReport ParsedSystem::validate() const { return validate_parts(q, dim, u, r, l); }

RLSystem ParsedSystem::admit() const {
    VerificationReport rep = validate();
    if (!rep.passed()) throw ValidationError(std::move(rep));
    return RLSystem::unchecked(QParam{q}, Decomposition(dim, u), r, l);
}

ParsedSystem parse_system(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object()) throw ParseError("system: expected a JSON object");
    ParsedSystem sys;
    sys.q = parse_q_field(j);
    sys.dim = parse_dim_field(j);
    if (!j.contains("d") || !j["d"].is_number_unsigned())
        throw ParseError("system: expected a nonnegative integer field \"d\"");
    const std::size_t d = j["d"].get<std::size_t>();
    if (!j.contains("U") || !j["U"].is_array() || j["U"].size() != d + 1)
        throw ParseError("system: expected \"U\" to be an array of d+1 basis matrices");
    for (std::size_t i = 0; i < j["U"].size(); ++i) {
        const Matrix basis = matrix_from_json(j["U"][i], "U[" + std::to_string(i) + "]");
        if (basis.rows() != sys.dim)
            throw ParseError("U[" + std::to_string(i) + "]: ambient dimension mismatch");
        sys.u.push_back(Subspace::span(basis));
    }
    if (!j.contains("R") || !j.contains("L"))
        throw ParseError("system: expected matrices \"R\" and \"L\"");
    sys.r = matrix_from_json(j["R"], "R");
    sys.l = matrix_from_json(j["L"], "L");
    if (sys.r.rows() != sys.dim || sys.r.cols() != sys.dim || sys.l.rows() != sys.dim ||
        sys.l.cols() != sys.dim)
        throw ParseError("system: R and L must be dim x dim");
    return sys;
}

std::string serialize(const RLSystem& sys) {
    json u = json::array();
    for (const auto& part : sys.u().parts()) u.push_back(matrix_to_json(part.basis()));
    const json j = {{"q", to_text(sys.q().value())}, {"d", sys.diameter()},
                    {"dim", sys.dim()},              {"U", std::move(u)},
                    {"R", matrix_to_json(sys.r())},  {"L", matrix_to_json(sys.l())}};
    return dump(j);
}

HatModule parse_module(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object()) throw ParseError("module: expected a JSON object");
    const QParam q = qparam_or_reject(parse_q_field(j));
    const std::size_t dim = parse_dim_field(j);
    const auto get = [&](const char* name) {
        if (!j.contains(name)) throw ParseError(std::string("module: missing \"") + name + "\"");
        Matrix m = matrix_from_json(j[name], name);
        if (m.rows() != dim || m.cols() != dim)
            throw ParseError(std::string("module: ") + name + " must be dim x dim");
        return m;
    };
    return {q, get("e0p"), get("e0m"), get("e1p"), get("e1m"), get("K0"), get("K1")};
}

std::string serialize(const HatModule& m) {
    const json j = {{"q", to_text(m.q.value())},   {"dim", m.dim()},
                    {"e0p", matrix_to_json(m.e0p)}, {"e0m", matrix_to_json(m.e0m)},
                    {"e1p", matrix_to_json(m.e1p)}, {"e1m", matrix_to_json(m.e1m)},
                    {"K0", matrix_to_json(m.K0)},   {"K1", matrix_to_json(m.K1)}};
    return dump(j);
}

std::string serialize(const ConstructionTrace& t) {
    const auto spaces = [](const std::vector<Subspace>& list) {
        json out = json::array();
        for (const auto& s : list) out.push_back(matrix_to_json(s.basis()));
        return out;
    };
    const json j = {{"K", matrix_to_json(t.K)},
                    {"A", matrix_to_json(t.A)},
                    {"Astar", matrix_to_json(t.Astar)},
                    {"V", spaces(t.V)},
                    {"Vstar", spaces(t.Vstar)},
                    {"W", spaces(t.W)},
                    {"Wstar", spaces(t.Wstar)},
                    {"H", spaces(t.H)},
                    {"B", matrix_to_json(t.B)},
                    {"Bstar", matrix_to_json(t.Bstar)},
                    {"r", matrix_to_json(t.r)},
                    {"l", matrix_to_json(t.l)},
                    {"rho", t.rho}};
    return dump(j);
}

std::string serialize(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks())
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"residual_bits", c.residual_bits}});
    return dump(json{{"passed", report.passed()}, {"checks", std::move(checks)}});
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error while reading " + path.string());
    return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) throw IoError("error while writing " + path.string());
}

}  // namespace qaff
