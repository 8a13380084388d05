#pragma once

// Serialization of values, class functions and reports, and the tabular
// renderings used by the command-line tool.

#include <string>
#include <vector>

#include <json.hpp>

#include "coxsol/conjectures.hpp"

namespace coxsol {

using Json = nlohmann::ordered_json;

/// {"conductor": n, "coeffs": [["num","den"], ...]}, power basis of Q(zeta_n).
Json to_json(const Cyclotomic& z);
/// Inverse of to_json; throws ParseError on malformed input.
Cyclotomic cyclotomic_from_json(const Json& j);

/// {"group": name, "classes": [reduced words], "values": [...]}.
Json to_json(const ClassFunction& f, const std::string& group_name);
/// Reads values back onto `carrier`, matching classes by representative word.
ClassFunction class_function_from_json(const Json& j, const Subgroup& carrier);

/// A titled grid of strings.
struct TextTable {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// A JSON payload with its tabular view.
struct Document {
  Json json;
  std::vector<TextTable> tables;
};

enum class Format { Json, Csv, Markdown };
Format parse_format(const std::string& name);
std::string render(const Document& doc, Format format);

Document group_document(const GroupPtr& g, const std::string& name);
Document descent_document(const GroupContext& ctx, const std::string& name);
/// Dimensions, Psi_lambda and, for dihedral groups, the angle of each H_j
/// in units of pi/m.
Document os_document(const GroupContext& ctx, const std::string& name);
Document report_document(const ConjectureReport& report, const GroupPtr& g, const std::string& name);
Document table_document(const DihedralTable& table, const std::string& name);

}  // namespace coxsol
