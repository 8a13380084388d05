// coxsol: command-line front end for the group, descent-algebra,
// Orlik-Solomon and verification machinery.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "coxsol/conjectures.hpp"
#include "coxsol/errors.hpp"
#include "coxsol/group_spec.hpp"
#include "coxsol/io.hpp"

namespace {

using namespace coxsol;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string group;
  std::string format;
  std::string out;
  std::string L;
  std::size_t max_elements = CoxeterGroup::default_max_elements;
  std::optional<std::uint64_t> seed;
};

/// "s1,s3" (or "{s1,s3}", "1,3", "" / "{}" for the empty set).
Subset parse_subset(std::string text, int rank) {
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParseError("unbalanced brace in --L");
    text = text.substr(1, text.size() - 2);
  }
  Subset L = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t cut = text.find(',', start);
    if (cut == std::string::npos) cut = text.size();
    std::string item = text.substr(start, cut - start);
    if (!item.empty() && item.front() == 's') item.erase(0, 1);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad generator '" + text.substr(start, cut - start) + "' in --L");
    const int i = std::stoi(item);
    if (i < 1 || i > rank) throw ParseError("generator s" + item + " is out of range");
    L |= Subset{1} << (i - 1);
    start = cut + 1;
  }
  return L;
}

void emit(const Document& doc, const Options& o, Format fallback) {
  const Format f = o.format.empty() ? fallback : parse_format(o.format);
  const std::string text = render(doc, f);
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + o.out + "' for writing");
  file << text;
}

struct Loaded {
  GroupSpec spec;
  GroupPtr group;
};

Loaded load(const Options& o) {
  Loaded l;
  l.spec = GroupSpec::parse(o.group);
  l.group = CoxeterGroup::build(l.spec.matrix(), o.max_elements);
  return l;
}

std::vector<Element> hyperplane_order(const Options& o, const CoxeterGroup& g) {
  if (!o.seed) return {};
  return seeded_hyperplane_order(g, *o.seed);
}

int run_verify(char which, const Options& o) {
  const auto l = load(o);
  const GroupContext ctx(l.group, hyperplane_order(o, *l.group));
  const std::string name = l.spec.name();
  const std::optional<Subset> L =
      o.L.empty() ? std::nullopt : std::optional<Subset>(parse_subset(o.L, l.group->rank()));

  std::vector<ConjectureReport> reports;
  if (which == 'a') {
    if (L) throw ParseError("verify a takes no --L");
    try {
      reports.push_back(verify_A(ctx));
    } catch (const PrerequisiteFailed& e) {
      ConjectureReport r;
      r.conjecture = 'A';
      r.status = Status::Failed;
      r.notes.push_back(e.what());
      reports.push_back(std::move(r));
    }
  } else if (which == 'b') {
    reports.push_back(L ? verify_B(ctx, *L) : verify_B(ctx));
  } else {
    std::vector<Subset> targets;
    if (L) targets.push_back(*L);
    else
      for (Subset J : all_subsets(l.group->rank()))
        if (subset_size(J) <= 2) targets.push_back(J);
    for (Subset J : targets) {
      try {
        reports.push_back(verify_C(ctx, J));
      } catch (const SearchExhausted& e) {
        ConjectureReport r;
        r.conjecture = 'C';
        r.L = J;
        r.status = Status::SearchExhausted;
        r.notes.push_back(e.what());
        reports.push_back(std::move(r));
      }
    }
  }

  Document doc;
  bool ok = true;
  if (reports.size() == 1) {
    doc = report_document(reports.front(), l.group, name);
  } else {
    doc.json = Json::array();
    for (const auto& r : reports) {
      auto part = report_document(r, l.group, name);
      doc.json.push_back(part.json);
      doc.tables.insert(doc.tables.end(), part.tables.begin(), part.tables.end());
    }
  }
  for (const auto& r : reports) ok = ok && r.verified();
  emit(doc, o, Format::Json);
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Coxeter groups, descent algebras and Orlik-Solomon algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_L) {
    sub->add_option("group", o.group, "group name, e.g. A3, B3, H3, I2(5), A1xI2(5)")->required();
    sub->add_option("--format", o.format, "json, csv or markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
    sub->add_option("--out", o.out, "write to this file instead of standard output");
    sub->add_option("--max-elements", o.max_elements, "refuse groups larger than this")->check(CLI::PositiveNumber);
    sub->add_option("--seed-order", o.seed, "shuffle the hyperplane order with this seed");
    if (with_L) sub->add_option("--L", o.L, "parabolic subset, e.g. s1,s2");
  };

  auto* group = app.add_subcommand("group", "order, conjugacy classes, cuspidal classes and shapes");
  common(group, false);
  auto* descent = app.add_subcommand("descent", "m-matrix, idempotents e_L and Phi_lambda");
  common(descent, false);
  auto* os = app.add_subcommand("os", "graded dimensions, Psi_lambda and hyperplane angles");
  common(os, false);
  auto* table = app.add_subcommand("table", "Phi, rho, Psi and omega at the classes of a dihedral group");
  common(table, false);
  auto* verify = app.add_subcommand("verify", "check conjecture a, b or c");
  std::string which;
  verify->add_option("conjecture", which, "a, b or c")->required()->check(CLI::IsMember({"a", "b", "c"}));
  common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(which.front(), o);
    const auto l = load(o);
    const std::string name = l.spec.name();
    if (*group) {
      emit(group_document(l.group, name), o, Format::Json);
      return kOk;
    }
    const GroupContext ctx(l.group, hyperplane_order(o, *l.group));
    if (*descent) emit(descent_document(ctx, name), o, Format::Json);
    else if (*os) emit(os_document(ctx, name), o, Format::Json);
    else {
      if (!l.spec.is_dihedral()) throw ParseError("table needs a dihedral group I2(m)");
      emit(table_document(emit_table(ctx), name), o, Format::Markdown);
    }
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "coxsol: " << e.what() << "\n";
    return kUsage;
  } catch (const RankGuard& e) {
    std::cerr << "coxsol: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidMatrix& e) {
    std::cerr << "coxsol: " << e.what() << "\n";
    return kUsage;
  } catch (const InfiniteOrTooLarge& e) {
    std::cerr << "coxsol: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "coxsol: " << e.what() << "\n";
    return kFailed;
  }
}
