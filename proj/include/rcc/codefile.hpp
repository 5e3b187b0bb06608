#ifndef RCC_CODEFILE_HPP
#define RCC_CODEFILE_HPP

#include <string>
#include <variant>

#include "json.hpp"
#include "rcc/codes.hpp"

namespace rcc {

/// Code description document:
///   {"p": int, "k": int, "m": int, "unit": "cyclic"|"negacyclic"|"lambda",
///    "generators": [[[int; k+1]; m], ...]}
/// k = 0 describes a code over F_p with one-entry coordinates.
struct CodeDocument {
    Residue p;
    int k;
    std::size_t m;
    UnitTag unit;
    std::variant<LinearCodeFp, ConstaCodeR> code;

    bool over_field() const noexcept { return k == 0; }
};

CodeDocument parse_code_document(const nlohmann::ordered_json& doc);
nlohmann::ordered_json code_document_json(const ConstaCodeR& code);
nlohmann::ordered_json code_document_json(const LinearCodeFp& code, UnitTag unit);
nlohmann::ordered_json code_document_json(const CodeDocument& doc);

CodeDocument read_code_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::ordered_json& doc);

}  // namespace rcc

#endif
