#include "rcc/codefile.hpp"

#include <fstream>
#include <sstream>

namespace rcc {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::Schema, "code document: " + what); }

std::int64_t int_field(const ordered_json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) schema_error(std::string("missing integer field '") + key + "'");
    return doc[key].get<std::int64_t>();
}

}  // namespace

CodeDocument parse_code_document(const ordered_json& doc) {
    if (!doc.is_object()) schema_error("expected a JSON object");
    const std::int64_t p_raw = int_field(doc, "p");
    const std::int64_t k_raw = int_field(doc, "k");
    const std::int64_t m_raw = int_field(doc, "m");
    if (k_raw < 0) schema_error("k must be >= 0");
    const Residue p = validate_prime(p_raw);
    if (m_raw < 1) throw Error(ErrorKind::InvalidParameter, "m must be at least 1");
    if (k_raw > 0) validate_params(p_raw, k_raw, m_raw);
    if (!doc.contains("unit") || !doc["unit"].is_string()) schema_error("missing string field 'unit'");
    const UnitTag unit = parse_unit_tag(doc["unit"].get<std::string>());
    if (!doc.contains("generators") || !doc["generators"].is_array()) schema_error("missing array field 'generators'");
    const auto k = static_cast<int>(k_raw);
    const auto m = static_cast<std::size_t>(m_raw);
    const std::size_t width = static_cast<std::size_t>(k) + 1;

    std::vector<std::vector<Residue>> rows;
    for (const auto& row : doc["generators"]) {
        if (!row.is_array() || row.size() != m) schema_error("each generator must list exactly m coordinates");
        std::vector<Residue> flat;
        for (const auto& coord : row) {
            if (!coord.is_array() || coord.size() != width) schema_error("each coordinate must list exactly k + 1 integers");
            for (const auto& c : coord) {
                if (!c.is_number_integer()) schema_error("coefficients must be integers");
                flat.push_back(fp::reduce(c.get<std::int64_t>(), p));
            }
        }
        rows.push_back(std::move(flat));
    }

    if (k == 0) {
        if (unit == UnitTag::Lambda) schema_error("unit 'lambda' needs k >= 1");
        std::vector<FpVector> gens;
        for (auto& r : rows) gens.emplace_back(p, std::move(r));
        return CodeDocument{p, 0, m, unit, LinearCodeFp(p, m, std::move(gens))};
    }
    const RingContext ctx{p, k};
    std::vector<RWord> gens;
    for (auto& r : rows) gens.push_back(collapse(ctx, FpVector(p, std::move(r))));
    return CodeDocument{p, k, m, unit, ConstaCodeR(ctx, m, unit, std::move(gens))};
}

ordered_json code_document_json(const ConstaCodeR& code) {
    ordered_json doc;
    doc["p"] = code.context().p;
    doc["k"] = code.context().k;
    doc["m"] = code.length();
    doc["unit"] = to_string(code.unit());
    ordered_json gens = ordered_json::array();
    for (const auto& w : code.generators()) {
        ordered_json row = ordered_json::array();
        for (const auto& s : w) row.push_back(s.coeffs());
        gens.push_back(std::move(row));
    }
    doc["generators"] = std::move(gens);
    return doc;
}

ordered_json code_document_json(const LinearCodeFp& code, UnitTag unit) {
    ordered_json doc;
    doc["p"] = code.modulus();
    doc["k"] = 0;
    doc["m"] = code.length();
    doc["unit"] = to_string(unit);
    ordered_json gens = ordered_json::array();
    for (const auto& v : code.generators()) {
        ordered_json row = ordered_json::array();
        for (auto c : v.entries()) row.push_back(ordered_json::array({c}));
        gens.push_back(std::move(row));
    }
    doc["generators"] = std::move(gens);
    return doc;
}

ordered_json code_document_json(const CodeDocument& doc) {
    if (const auto* fc = std::get_if<LinearCodeFp>(&doc.code)) return code_document_json(*fc, doc.unit);
    return code_document_json(std::get<ConstaCodeR>(doc.code));
}

CodeDocument read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "' for reading");
    ordered_json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Schema, "'" + path + "' is not valid JSON: " + e.what());
    }
    return parse_code_document(doc);
}

void write_json_file(const std::string& path, const ordered_json& doc) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
    out << doc.dump(2) << '\n';
    if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace rcc
