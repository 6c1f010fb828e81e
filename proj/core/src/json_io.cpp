#include "latorus/json_io.hpp"

#include <json.hpp>

namespace latorus {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("json: missing field '") + name + "'");
    return *it;
}

Rational rational_field(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    if (!j.is_string()) throw ParseError("json: rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

Degree degree_field(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("json: degree must be a nonempty integer array");
    std::vector<std::int64_t> coords;
    for (const auto& c : j) {
        if (!c.is_number_integer()) throw ParseError("json: degree entries must be integers");
        coords.push_back(c.get<std::int64_t>());
    }
    return Degree(std::move(coords));
}

json quantum_matrix_to_json(const QuantumMatrix& q) {
    json rows = json::array();
    for (int i = 0; i < q.rank(); ++i) {
        json row = json::array();
        for (int j = 0; j < q.rank(); ++j) row.push_back(q.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"n", q.rank()}, {"q", std::move(rows)}};
}

QuantumMatrix quantum_matrix_from(const json& j) {
    const int n = field(j, "n").get<int>();
    const json& rows = field(j, "q");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("json: quantum matrix needs n rows");
    std::vector<Rational> entries;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("json: quantum matrix needs n columns per row");
        for (const auto& e : row) entries.push_back(rational_field(e));
    }
    try {
        return QuantumMatrix(n, std::move(entries));
    } catch (const ConstraintViolation& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
}

json terms_to_json(const std::map<Degree, Rational>& terms) {
    json arr = json::array();
    for (const auto& [deg, coef] : terms) {
        json d = json::array();
        for (auto c : deg.coords()) d.push_back(c);
        arr.push_back(json{{"deg", std::move(d)}, {"coef", coef.str()}});
    }
    return arr;
}

template <typename Element>
Element element_from(const json& j) {
    const int rank = field(j, "rank").get<int>();
    Element out(rank);
    for (const auto& term : field(j, "terms")) {
        const Degree deg = degree_field(field(term, "deg"));
        if (deg.rank() != rank) throw ParseError("json: term degree rank mismatch");
        out.add_term(deg, rational_field(field(term, "coef")));
    }
    return out;
}

json coordinate_to_json(const CoordinateDescriptor& coord) {
    if (coord.kind == TorusKind::Octonion) return json{{"kind", "octonion"}, {"n", coord.rank}};
    json j = quantum_matrix_to_json(*coord.q);
    j["kind"] = "quantum";
    return j;
}

CoordinateDescriptor coordinate_from(const json& j) {
    const std::string kind = j.contains("kind") ? j["kind"].get<std::string>() : "quantum";
    if (kind == "octonion") {
        const int n = field(j, "n").get<int>();
        if (n < 3) throw ParseError("json: octonion torus needs n >= 3");
        return CoordinateDescriptor::octonion(n);
    }
    if (kind != "quantum") throw ParseError("json: unknown coordinate kind '" + kind + "'");
    return CoordinateDescriptor::quantum(quantum_matrix_from(j));
}

json check_report_to_json(const CheckReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json jc{{"name", c.name}, {"pass", c.pass}};
        if (!c.counterexample.empty()) jc["counterexample"] = c.counterexample;
        if (!c.details.empty()) jc["details"] = c.details;
        checks.push_back(std::move(jc));
    }
    return json{{"suite", report.suite}, {"pass", report.passed()},   {"window", report.window},
                {"seed", report.seed},   {"wall_time_ms", report.wall_ms}, {"checks", std::move(checks)}};
}

}  // namespace

std::string to_json(const QuantumMatrix& q) { return quantum_matrix_to_json(q).dump(2); }

QuantumMatrix quantum_matrix_from_json(const std::string& text) {
    return quantum_matrix_from(parse(text));
}

std::string to_json(const QTElement& a) {
    return json{{"rank", a.rank()}, {"terms", terms_to_json(a.terms())}}.dump(2);
}

QTElement qt_element_from_json(const std::string& text) { return element_from<QTElement>(parse(text)); }

std::string to_json(const OctElement& a) {
    return json{{"kind", "octonion"}, {"rank", a.rank()}, {"terms", terms_to_json(a.terms())}}.dump(2);
}

OctElement oct_element_from_json(const std::string& text) {
    const json j = parse(text);
    if (j.contains("kind") && j["kind"].get<std::string>() != "octonion")
        throw ParseError("json: expected an octonion element");
    return element_from<OctElement>(j);
}

std::string to_json(const LieElement& x, int ell, const QuantumMatrix& q) {
    json rows = json::array();
    for (int i = 1; i <= x.size(); ++i) {
        json row = json::array();
        for (int j = 1; j <= x.size(); ++j)
            row.push_back(json{{"rank", x.rank()}, {"terms", terms_to_json(x.at(i, j).terms())}});
        rows.push_back(std::move(row));
    }
    return json{{"ell", ell}, {"q", quantum_matrix_to_json(q)}, {"entries", std::move(rows)}}.dump(2);
}

LieElementDoc lie_element_from_json(const std::string& text) {
    const json j = parse(text);
    const int ell = field(j, "ell").get<int>();
    QuantumMatrix q = quantum_matrix_from(field(j, "q"));
    const json& rows = field(j, "entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != ell + 1)
        throw ParseError("json: lie element needs ell+1 rows");
    LieElement x(ell + 1, q.rank());
    for (int i = 1; i <= ell + 1; ++i) {
        const json& row = rows[i - 1];
        if (!row.is_array() || static_cast<int>(row.size()) != ell + 1)
            throw ParseError("json: lie element needs ell+1 columns per row");
        for (int jj = 1; jj <= ell + 1; ++jj) x.set(i, jj, element_from<QTElement>(row[jj - 1]));
    }
    return LieElementDoc{ell, std::move(q), std::move(x)};
}

std::string to_json(const CoordinateDescriptor& coord) { return coordinate_to_json(coord).dump(2); }

CoordinateDescriptor coordinate_from_json(const std::string& text) {
    return coordinate_from(parse(text));
}

std::string to_json(const ChevalleyInvolutionDescriptor& desc) {
    CoordinateDescriptor coord =
        desc.bar.kind() == TorusKind::Quantum
            ? CoordinateDescriptor::quantum(*desc.bar.q())
            : CoordinateDescriptor::octonion(desc.bar.rank());
    return json{{"ell", desc.ell}, {"coordinate", coordinate_to_json(coord)}}.dump(2);
}

ChevalleyInvolutionDescriptor involution_from_json(const std::string& text) {
    const json j = parse(text);
    const int ell = field(j, "ell").get<int>();
    const CoordinateDescriptor coord = coordinate_from(field(j, "coordinate"));
    if (coord.kind != TorusKind::Quantum)
        throw ParseError("json: involution descriptors are built over quantum coordinates");
    try {
        return synthesize_chevalley(ell, *coord.q);
    } catch (const NotElementary& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
}

std::string to_json(const CheckReport& report) { return check_report_to_json(report).dump(2); }

std::string decision_json(const DecisionResult& decision) {
    return json{{"exists", decision.exists}, {"reason", decision.reason}, {"checks", json::array()}}
        .dump(2);
}

std::string involution_report_json(bool exists, const std::string& reason, const CheckReport& report) {
    json j = check_report_to_json(report);
    j["exists"] = exists;
    j["reason"] = reason;
    return j.dump(2);
}

}  // namespace latorus
