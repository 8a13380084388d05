#include "coxsol/group_spec.hpp"

#include <cctype>

#include "coxsol/errors.hpp"

namespace coxsol {

namespace {

int factor_rank(const GroupFactor& f) { return f.family == "I2" ? 2 : f.parameter; }

CoxeterMatrix factor_matrix(const GroupFactor& f) {
  if (f.family == "A") return CoxeterMatrix::type_A(f.parameter);
  if (f.family == "B") return CoxeterMatrix::type_B(f.parameter);
  if (f.family == "I2") return CoxeterMatrix::dihedral(f.parameter);
  if (f.parameter == 3) return CoxeterMatrix::type_H3();
  return CoxeterMatrix({{1, 5, 2, 2}, {5, 1, 3, 2}, {2, 3, 1, 3}, {2, 2, 3, 1}});
}

GroupFactor parse_factor(const std::string& text) {
  GroupFactor f;
  std::size_t pos = 0;
  if (text.rfind("I2", 0) == 0) {
    f.family = "I2";
    pos = 2;
  } else if (!text.empty() && (text[0] == 'A' || text[0] == 'B' || text[0] == 'H')) {
    f.family = text.substr(0, 1);
    pos = 1;
  } else {
    throw ParseError("unknown Coxeter family in '" + text + "'");
  }
  std::string digits = text.substr(pos);
  const bool paren = !digits.empty() && digits.front() == '(';
  if (paren) {
    if (digits.back() != ')') throw ParseError("unbalanced parenthesis in '" + text + "'");
    digits = digits.substr(1, digits.size() - 2);
  } else if (f.family == "I2") {
    throw ParseError("write dihedral groups as I2(m), got '" + text + "'");
  }
  if (digits.empty() || digits.size() > 6)
    throw ParseError("missing or oversized parameter in '" + text + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("parameter is not a number in '" + text + "'");
  f.parameter = std::stoi(digits);
  if (f.family == "A" && f.parameter < 1) throw ParseError("A_n needs n >= 1");
  if (f.family == "B" && f.parameter < 2) throw ParseError("B_n needs n >= 2");
  if (f.family == "H" && f.parameter != 3 && f.parameter != 4) throw ParseError("H_n needs n = 3 or 4");
  if (f.family == "I2" && f.parameter < 2) throw ParseError("I2(m) needs m >= 2");
  return f;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text, int rank_bound) {
  GroupSpec spec;
  if (text == "1") return spec;
  if (text.empty()) throw ParseError("empty group name");
  std::size_t start = 0;
  while (true) {
    const std::size_t cut = text.find('x', start);
    spec.factors.push_back(parse_factor(text.substr(start, cut == std::string::npos ? cut : cut - start)));
    if (cut == std::string::npos) break;
    start = cut + 1;
  }
  if (spec.rank() > rank_bound)
    throw RankGuard("group rank " + std::to_string(spec.rank()) + " exceeds the bound " + std::to_string(rank_bound));
  return spec;
}

CoxeterMatrix GroupSpec::matrix() const {
  CoxeterMatrix m;
  for (const auto& f : factors) m = CoxeterMatrix::product(m, factor_matrix(f));
  return m;
}

int GroupSpec::rank() const {
  int r = 0;
  for (const auto& f : factors) r += factor_rank(f);
  return r;
}

std::string GroupSpec::name() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "x";
    out += f.family == "I2" ? "I2(" + std::to_string(f.parameter) + ")" : f.family + std::to_string(f.parameter);
  }
  return out;
}

}  // namespace coxsol
