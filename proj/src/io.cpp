#include "coxsol/io.hpp"

#include <algorithm>
#include <sstream>

#include "coxsol/errors.hpp"
#include "coxsol/parabolic.hpp"

namespace coxsol {

namespace {

std::string element_label(const CoxeterGroup& g, Element w) { return word_label(g.word(w)); }

std::vector<std::string> class_labels(const Subgroup& h) {
  std::vector<std::string> out;
  for (const auto& c : h.classes()) out.push_back(element_label(*h.group(), c.representative));
  return out;
}

std::vector<std::string> value_strings(const ClassFunction& f) {
  std::vector<std::string> out;
  for (const auto& v : f.values()) out.push_back(v.to_string());
  return out;
}

Json string_map(const std::vector<std::string>& keys, const std::vector<std::string>& values) {
  Json j = Json::object();
  for (std::size_t i = 0; i < keys.size(); ++i) j[keys[i]] = values[i];
  return j;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void render_markdown(std::ostream& os, const TextTable& t) {
  if (!t.title.empty()) os << "### " << t.title << "\n\n";
  os << "|";
  for (const auto& h : t.header) os << " " << md_cell(h) << " |";
  os << "\n|";
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i == 0 ? " --- |" : " ---: |");
  os << "\n";
  for (const auto& row : t.rows) {
    os << "|";
    for (const auto& c : row) os << " " << md_cell(c) << " |";
    os << "\n";
  }
}

void render_csv(std::ostream& os, const TextTable& t) {
  if (!t.title.empty()) os << "# " << t.title << "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << "\n";
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

/// One row per class function, one column per class of the common carrier.
TextTable character_table(std::string title, const Subgroup& carrier, const std::vector<std::string>& names,
                          const std::vector<ClassFunction>& fs) {
  TextTable t;
  t.title = std::move(title);
  t.header.push_back("");
  for (const auto& c : class_labels(carrier)) t.header.push_back(c);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::vector<std::string> row{names[i]};
    for (const auto& v : value_strings(fs[i])) row.push_back(v);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string shape_name(const Shape& s) { return subset_label(s.representative); }

}  // namespace

Json to_json(const Cyclotomic& z) {
  Json coeffs = Json::array();
  for (const auto& c : z.coeffs()) {
    const auto [num, den] = to_decimal_pair(c);
    coeffs.push_back(Json::array({num, den}));
  }
  return Json{{"conductor", z.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  try {
    const unsigned n = j.at("conductor").get<unsigned>();
    if (n == 0) throw ParseError("conductor must be positive");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (!c.is_array() || c.size() != 2) throw ParseError("coefficient must be a [num, den] pair");
      coeffs.push_back(from_decimal_pair(c[0].get<std::string>(), c[1].get<std::string>()));
    }
    return Cyclotomic::from_coefficients(n, coeffs);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed cyclotomic value: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed rational: ") + e.what());
  }
}

Json to_json(const ClassFunction& f, const std::string& group_name) {
  Json values = Json::array();
  for (const auto& v : f.values()) values.push_back(to_json(v));
  return Json{{"group", group_name}, {"classes", class_labels(f.carrier())}, {"values", values}};
}

ClassFunction class_function_from_json(const Json& j, const Subgroup& carrier) {
  const auto labels = class_labels(carrier);
  try {
    const auto& classes = j.at("classes");
    const auto& values = j.at("values");
    if (classes.size() != labels.size() || values.size() != labels.size())
      throw ParseError("class function has the wrong number of classes");
    std::vector<Cyclotomic> out(labels.size());
    std::vector<char> seen(labels.size(), 0);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto word = classes[i].get<std::string>();
      const auto it = std::find(labels.begin(), labels.end(), word);
      if (it == labels.end()) throw ParseError("unknown class representative '" + word + "'");
      const auto k = static_cast<std::size_t>(it - labels.begin());
      if (seen[k]) throw ParseError("class '" + word + "' listed twice");
      seen[k] = 1;
      out[k] = cyclotomic_from_json(values[i]);
    }
    return ClassFunction(carrier, std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed class function: ") + e.what());
  }
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "markdown" || name == "md") return Format::Markdown;
  throw ParseError("unknown format '" + name + "'");
}

std::string render(const Document& doc, Format format) {
  if (format == Format::Json) return doc.json.dump(2) + "\n";
  std::ostringstream os;
  for (std::size_t i = 0; i < doc.tables.size(); ++i) {
    if (i) os << "\n";
    if (format == Format::Markdown) render_markdown(os, doc.tables[i]);
    else render_csv(os, doc.tables[i]);
  }
  return os.str();
}

Document group_document(const GroupPtr& g, const std::string& name) {
  Document doc;
  const auto whole = Subgroup::whole(g);
  const auto cusp = cuspidal_classes(whole);
  const auto all_shapes = shapes(*g);

  Json classes = Json::array();
  TextTable ct{"conjugacy classes", {"representative", "size", "length", "cuspidal"}, {}};
  for (const auto& c : whole.classes()) {
    const auto rep = element_label(*g, c.representative);
    classes.push_back({{"representative", rep}, {"size", c.members.size()}, {"cuspidal", c.is_cuspidal}});
    ct.rows.push_back({rep, std::to_string(c.members.size()), std::to_string(g->length(c.representative)),
                       c.is_cuspidal ? "yes" : "no"});
  }
  Json shapes_json = Json::array();
  TextTable st{"shapes", {"shape", "members"}, {}};
  for (const auto& s : all_shapes) {
    Json members = Json::array();
    std::string joined;
    for (Subset L : s.members) {
      members.push_back(subset_label(L));
      joined += (joined.empty() ? "" : " ") + subset_label(L);
    }
    shapes_json.push_back({{"representative", subset_label(s.representative)}, {"members", members}});
    st.rows.push_back({shape_name(s), joined});
  }
  Json matrix = g->matrix().entries();
  doc.json = {{"group", name},
              {"rank", g->rank()},
              {"coxeter_matrix", matrix},
              {"order", g->size()},
              {"reflections", g->reflections().size()},
              {"class_count", whole.classes().size()},
              {"cuspidal_count", cusp.size()},
              {"classes", classes},
              {"shapes", shapes_json}};
  doc.tables.push_back({"summary",
                        {"group", "order", "classes", "cuspidal", "shapes"},
                        {{name, std::to_string(g->size()), std::to_string(whole.classes().size()),
                          std::to_string(cusp.size()), std::to_string(all_shapes.size())}}});
  doc.tables.push_back(std::move(ct));
  doc.tables.push_back(std::move(st));
  return doc;
}

Document descent_document(const GroupContext& ctx, const std::string& name) {
  Document doc;
  const auto& g = ctx.group();
  const auto& family = ctx.descent();
  const std::size_t n = family.subsets.size();
  std::vector<std::string> labels;
  for (Subset J : family.subsets) labels.push_back(subset_label(J));

  auto matrix_json = [&](const Matrix<Rational>& m, TextTable& t) {
    Json rows = Json::array();
    t.header = {""};
    t.header.insert(t.header.end(), labels.begin(), labels.end());
    for (std::size_t k = 0; k < n; ++k) {
      Json row = Json::array();
      std::vector<std::string> cells{labels[k]};
      for (std::size_t l = 0; l < n; ++l) {
        row.push_back(to_string(m(k, l)));
        cells.push_back(to_string(m(k, l)));
      }
      rows.push_back(row);
      t.rows.push_back(std::move(cells));
    }
    return rows;
  };
  TextTable mt{"m-matrix (row K, column L)", {}, {}};
  TextTable mi{"inverse m-matrix", {}, {}};
  const Json m_json = matrix_json(family.m, mt);
  const Json mi_json = matrix_json(family.m_inverse, mi);

  Json idempotents = Json::object();
  TextTable et{"idempotents e_L", {"L", "element", "coefficient"}, {}};
  for (std::size_t l = 0; l < n; ++l) {
    Json coeffs = Json::object();
    const auto& e = family.e[l];
    for (const auto& [w, c] : e.terms()) {
      coeffs[element_label(*g, w)] = to_string(c);
      et.rows.push_back({labels[l], element_label(*g, w), to_string(c)});
    }
    idempotents[labels[l]] = coeffs;
  }

  const auto whole = Subgroup::whole(g);
  std::vector<std::string> names;
  Json phis = Json::object();
  for (std::size_t i = 0; i < family.shapes.size(); ++i) {
    names.push_back("Phi" + shape_name(family.shapes[i]));
    phis[shape_name(family.shapes[i])] = to_json(ctx.phi_lambda()[i], name);
  }
  doc.json = {{"group", name},   {"subsets", labels},         {"m_matrix", m_json},
              {"m_inverse", mi_json}, {"idempotents", idempotents}, {"phi_lambda", phis}};
  doc.tables.push_back(std::move(mt));
  doc.tables.push_back(std::move(mi));
  doc.tables.push_back(std::move(et));
  doc.tables.push_back(character_table("Phi_lambda", whole, names, ctx.phi_lambda()));
  return doc;
}

Document os_document(const GroupContext& ctx, const std::string& name) {
  Document doc;
  const auto& g = ctx.group();
  const auto& a = ctx.os();
  Json dims = Json::array();
  TextTable dt{"graded dimensions", {"degree", "dimension"}, {}};
  for (int p = 0; p <= a.top_degree(); ++p) {
    dims.push_back(a.dimension(p));
    dt.rows.push_back({std::to_string(p), std::to_string(a.dimension(p))});
  }
  dt.rows.push_back({"total", std::to_string(a.total_dimension())});

  const auto all_shapes = shapes(*g);
  std::vector<std::string> names;
  Json psis = Json::object();
  for (std::size_t i = 0; i < all_shapes.size(); ++i) {
    names.push_back("Psi" + shape_name(all_shapes[i]));
    psis[shape_name(all_shapes[i])] = to_json(ctx.psi_lambda()[i], name);
  }
  doc.json = {{"group", name},
              {"dimensions", dims},
              {"total_dimension", a.total_dimension()},
              {"psi_lambda", psis},
              {"omega", to_json(a.character(), name)}};
  doc.tables.push_back(std::move(dt));
  std::vector<ClassFunction> rows = ctx.psi_lambda();
  names.push_back("omega");
  rows.push_back(a.character());
  doc.tables.push_back(character_table("Psi_lambda", Subgroup::whole(g), names, rows));

  if (g->rank() == 2) {
    const auto labels = DihedralLabels::of(a);
    Json angles = Json::array();
    TextTable at{"hyperplanes (angle in units of pi/m)", {"H_j", "angle", "reflection"}, {}};
    for (int j = 0; j < labels.m; ++j) {
      const auto word = element_label(*g, a.arrangement().reflection(labels.hyperplane[j]));
      angles.push_back({{"j", j}, {"angle", j}, {"reflection", word}});
      at.rows.push_back({"H_" + std::to_string(j), std::to_string(j), word});
    }
    doc.json["m"] = labels.m;
    doc.json["hyperplanes"] = angles;
    doc.tables.push_back(std::move(at));
  }
  return doc;
}

Document report_document(const ConjectureReport& report, const GroupPtr& g, const std::string& name) {
  Document doc;
  Json residuals = Json::array();
  TextTable rt{"residuals", {"identity", "holds", "difference"}, {}};
  for (const auto& r : report.residuals) {
    Json entry = {{"identity", r.identity}, {"holds", r.holds}};
    std::string diff;
    if (r.difference) {
      entry["difference"] = to_json(*r.difference, name);
      const auto cls = class_labels(r.difference->carrier());
      const auto vals = value_strings(*r.difference);
      entry["difference_by_class"] = string_map(cls, vals);
      for (std::size_t i = 0; i < cls.size(); ++i)
        if (vals[i] != "0") diff += (diff.empty() ? "" : "; ") + cls[i] + ": " + vals[i];
    }
    residuals.push_back(entry);
    rt.rows.push_back({r.identity, r.holds ? "yes" : "no", diff});
  }

  Json assignments = Json::array();
  TextTable at{"assignments", {"L", "construction", "provenance", "class", "character", "values"}, {}};
  for (const auto& a : report.assignments) {
    Json characters = Json::object();
    for (const auto& c : a.classes) {
      const auto rep = element_label(*g, c.representative);
      Json entry = {{"phi", to_json(c.phi, name)}, {"psi", to_json(c.psi, name)}};
      auto add_row = [&](const std::string& which, const ClassFunction& f) {
        std::string vals;
        const auto cls = class_labels(f.carrier());
        const auto v = value_strings(f);
        for (std::size_t i = 0; i < cls.size(); ++i) vals += (i ? "; " : "") + cls[i] + ": " + v[i];
        at.rows.push_back({subset_label(a.L), a.construction, to_string(a.provenance), rep, which, vals});
      };
      add_row("phi", c.phi);
      add_row("psi", c.psi);
      if (c.phi_tilde) {
        entry["phi_tilde"] = to_json(*c.phi_tilde, name);
        add_row("phi_tilde", *c.phi_tilde);
      }
      if (c.psi_tilde) {
        entry["psi_tilde"] = to_json(*c.psi_tilde, name);
        add_row("psi_tilde", *c.psi_tilde);
      }
      characters[rep] = entry;
    }
    assignments.push_back({{"L", subset_label(a.L)},
                           {"provenance", to_string(a.provenance)},
                           {"construction", a.construction},
                           {"characters", characters}});
  }
  doc.json = {{"group", name},
              {"conjecture", std::string(1, report.conjecture)},
              {"L", report.L ? Json(subset_label(*report.L)) : Json(nullptr)},
              {"status", to_string(report.status)},
              {"residuals", residuals},
              {"assignments", assignments},
              {"notes", report.notes}};
  doc.tables.push_back({"report",
                        {"group", "conjecture", "L", "status"},
                        {{name, std::string(1, report.conjecture), report.L ? subset_label(*report.L) : "",
                          to_string(report.status)}}});
  doc.tables.push_back(std::move(rt));
  doc.tables.push_back(std::move(at));
  return doc;
}

Document table_document(const DihedralTable& table, const std::string& name) {
  Document doc;
  TextTable t{name + " (m = " + std::to_string(table.m) + ", k = " + std::to_string(table.m / 2) + ")",
              {""},
              {}};
  t.header.insert(t.header.end(), table.columns.begin(), table.columns.end());
  Json rows = Json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::vector<std::string> cells{table.rows[r]};
    Json values = Json::array();
    for (const auto& v : table.values[r]) {
      cells.push_back(v.is_zero() ? "." : v.to_string());
      values.push_back(to_json(v));
    }
    t.rows.push_back(std::move(cells));
    rows.push_back({{"row", table.rows[r]}, {"values", values}});
  }
  doc.json = {{"group", name}, {"m", table.m}, {"k", table.m / 2}, {"columns", table.columns}, {"rows", rows}};
  doc.tables.push_back(std::move(t));
  return doc;
}

}  // namespace coxsol
