#include "coxsol/conjectures.hpp"

#include <algorithm>

#include "coxsol/errors.hpp"
#include "coxsol/parabolic.hpp"

namespace coxsol {

// -- context ---------------------------------------------------------------

GroupContext::GroupContext(GroupPtr g, std::vector<Element> hyperplane_order)
    : g_(std::move(g)), order_(std::move(hyperplane_order)) {}

const IdempotentFamily& GroupContext::descent() const {
  if (!family_) family_ = std::make_unique<IdempotentFamily>(IdempotentFamily::build(g_));
  return *family_;
}

const OSAlgebra& GroupContext::os() const {
  if (!os_) os_ = std::make_unique<OSAlgebra>(OSAlgebra::build(g_, order_));
  return *os_;
}

namespace {

template <class F>
const ClassFunction& cached(std::map<Subset, ClassFunction>& cache, Subset L, F&& make) {
  auto it = cache.find(L);
  if (it == cache.end()) it = cache.emplace(L, make()).first;
  return it->second;
}

}  // namespace

const ClassFunction& GroupContext::phi_top(Subset L) const {
  return cached(phi_top_, L, [&] { return coxsol::phi_top(g_, L); });
}
const ClassFunction& GroupContext::psi_top(Subset L) const {
  return cached(psi_top_, L, [&] { return coxsol::psi_top(g_, L); });
}
const ClassFunction& GroupContext::phi_tilde(Subset L) const {
  return cached(phi_tilde_, L, [&] { return coxsol::phi_tilde(descent(), L); });
}
const ClassFunction& GroupContext::psi_tilde(Subset L) const {
  return cached(psi_tilde_, L, [&] { return coxsol::psi_tilde(os(), L); });
}
const std::vector<ClassFunction>& GroupContext::phi_lambda() const {
  if (!phi_lambda_) phi_lambda_ = coxsol::phi_lambda(descent());
  return *phi_lambda_;
}
const std::vector<ClassFunction>& GroupContext::psi_lambda() const {
  if (!psi_lambda_) psi_lambda_ = coxsol::psi_lambda(os());
  return *psi_lambda_;
}

// -- reports ---------------------------------------------------------------

std::string to_string(Provenance p) {
  return p == Provenance::ExplicitConstruction ? "explicit-construction" : "exhaustive-search";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Failed: return "failed";
    case Status::SearchExhausted: return "search-exhausted";
  }
  return "failed";
}

Residual Residual::of(std::string identity, const ClassFunction& lhs, const ClassFunction& rhs) {
  Residual r;
  r.identity = std::move(identity);
  r.difference = lhs - rhs;
  r.holds = r.difference->is_zero();
  return r;
}

Residual Residual::check(std::string identity, bool holds) {
  Residual r;
  r.identity = std::move(identity);
  r.holds = holds;
  return r;
}

void ConjectureReport::finish() {
  if (status == Status::SearchExhausted) return;
  const bool ok = std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.holds; });
  status = ok && !residuals.empty() ? Status::Verified : Status::Failed;
}

// -- helpers ---------------------------------------------------------------

Element longest_in(const CoxeterGroup& g, Subset L) {
  // Extend on the right while some s in L still increases the length.
  Element w = g.identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int j : subset_members(L)) {
      const Element ws = g.multiply(w, g.generator(j));
      if (g.length(ws) > g.length(w)) {
        w = ws;
        grew = true;
      }
    }
  }
  return w;
}

namespace {

Element power(const CoxeterGroup& g, Element x, int p) {
  Element y = g.identity();
  for (int i = 0; i < p; ++i) y = g.multiply(y, x);
  return y;
}

std::string rep_label(const CoxeterGroup& g, Element w) { return word_label(g.word(w)); }

ClassFunction sum_induced(const std::vector<ClassFunction>& parts, const Subgroup& to) {
  ClassFunction total = ClassFunction::zero(to);
  for (const auto& p : parts) total += induce(p, to);
  return total;
}

// Odometer over per-class candidate lists; calls accept(choice) until it
// returns true. Returns false when every combination was rejected.
template <class F>
bool odometer(const std::vector<std::size_t>& sizes, F&& accept) {
  std::vector<std::size_t> choice(sizes.size(), 0);
  for (std::size_t n : sizes)
    if (n == 0) return false;
  while (true) {
    if (accept(choice)) return true;
    std::size_t i = 0;
    for (; i < sizes.size(); ++i) {
      if (++choice[i] < sizes[i]) break;
      choice[i] = 0;
    }
    if (i == sizes.size()) return false;
  }
}

CharacterAssignment search_B(const GroupContext& ctx, Subset L) {
  const auto& g = ctx.group();
  const auto wl = Subgroup::parabolic(g, L);
  const auto cusp = cuspidal_classes(wl);
  const auto eps_l = sign_character(wl);
  std::vector<std::vector<LinearCharacter>> cands;
  std::vector<std::vector<ClassFunction>> ind_phi, ind_psi;
  std::vector<std::size_t> sizes;
  for (const auto& c : cusp) {
    const auto cw = centralizer(wl, c.representative);
    auto chars = linear_characters(cw);
    const auto eps = restrict(eps_l, cw);
    std::vector<ClassFunction> ip, iq;
    for (const auto& chi : chars) {
      ip.push_back(induce(chi, wl));
      iq.push_back(induce(chi.function() * eps, wl));
    }
    sizes.push_back(chars.size());
    cands.push_back(std::move(chars));
    ind_phi.push_back(std::move(ip));
    ind_psi.push_back(std::move(iq));
  }
  const auto& target_phi = ctx.phi_top(L);
  const auto& target_psi = ctx.psi_top(L);
  CharacterAssignment a;
  a.L = L;
  a.provenance = Provenance::ExhaustiveSearch;
  a.construction = "search over linear characters of centralizers";
  const bool found = odometer(sizes, [&](const std::vector<std::size_t>& choice) {
    ClassFunction sp = ClassFunction::zero(wl), sq = ClassFunction::zero(wl);
    for (std::size_t i = 0; i < choice.size(); ++i) {
      sp += ind_phi[i][choice[i]];
      sq += ind_psi[i][choice[i]];
    }
    if (!(sp == target_phi) || !(sq == target_psi)) return false;
    for (std::size_t i = 0; i < choice.size(); ++i) {
      const auto& phi = cands[i][choice[i]].function();
      const auto cw = phi.carrier();
      a.classes.push_back({cusp[i].representative, phi, phi * restrict(eps_l, cw), std::nullopt, std::nullopt});
    }
    return true;
  });
  if (!found) throw SearchExhausted("no linear characters of the centralizers decompose Phi_L and Psi_L");
  return a;
}

}  // namespace

// -- Conjecture B ------------------------------------------------------------

CharacterAssignment construct_B_characters(const GroupContext& ctx, Subset L) {
  const auto& g = ctx.group();
  const auto members = subset_members(L);
  if (members.size() > 2) return search_B(ctx, L);

  const auto wl = Subgroup::parabolic(g, L);
  CharacterAssignment a;
  a.L = L;
  a.provenance = Provenance::ExplicitConstruction;
  for (const auto& c : cuspidal_classes(wl)) {
    const Element w = c.representative;
    const auto cw = centralizer(wl, w);
    const auto eps = sign_character(cw).function();
    if (members.empty()) {
      a.construction = "rank 0: phi_1 = 1";
      const auto one = trivial_character(cw).function();
      a.classes.push_back({w, one, one, std::nullopt, std::nullopt});
    } else if (members.size() == 1) {
      a.construction = "rank 1: phi_s = eps, psi_s = 1";
      a.classes.push_back({w, eps, trivial_character(cw).function(), std::nullopt, std::nullopt});
    } else {
      const int m = g->matrix()(members[0], members[1]);
      const Element st = g->multiply(g->generator(members[0]), g->generator(members[1]));
      int p = 1;
      while (p < m && power(*g, st, p) != w) ++p;
      if (p == m || 2 * p > m) throw Error("cuspidal representative is not a power (st)^j with j <= m/2");
      ClassFunction phi = eps;
      if (m % 2 == 0 && 2 * p == m) {
        a.construction = "dihedral: phi_w0 = eps, phi_(st)^j = chi_2j";
      } else {
        const int j = m % 2 == 0 ? 2 * p : p;
        a.construction = m % 2 == 0 ? "dihedral: phi_w0 = eps, phi_(st)^j = chi_2j" : "dihedral: phi_(st)^j = chi_j";
        phi = ClassFunction::from_representatives(cw, [&](Element x) {
          for (int q = 0; q < m; ++q)
            if (power(*g, st, q) == x) return Cyclotomic::zeta(static_cast<unsigned>(m), static_cast<long>(j) * q);
          throw Error("centralizer of a rotation is not the rotation subgroup");
        });
      }
      a.classes.push_back({w, phi, phi * eps, std::nullopt, std::nullopt});
    }
  }
  return a;
}

ConjectureReport verify_B(const GroupContext& ctx) { return verify_B(ctx, ctx.group()->all_generators()); }

ConjectureReport verify_B(const GroupContext& ctx, Subset L) {
  ConjectureReport r;
  r.conjecture = 'B';
  r.L = L;
  CharacterAssignment a;
  try {
    a = construct_B_characters(ctx, L);
  } catch (const SearchExhausted& e) {
    r.status = Status::SearchExhausted;
    r.notes.push_back(e.what());
    return r;
  }
  const auto& g = *ctx.group();
  const auto wl = Subgroup::parabolic(ctx.group(), L);
  std::vector<ClassFunction> phis, psis;
  for (const auto& c : a.classes) {
    phis.push_back(c.phi);
    psis.push_back(c.psi);
    const std::string at = " at " + rep_label(g, c.representative);
    r.residuals.push_back(Residual::check("phi_w is linear" + at, is_linear_character(c.phi)));
    r.residuals.push_back(Residual::check("psi_w is linear" + at, is_linear_character(c.psi)));
    r.residuals.push_back(
        Residual::of("psi_w = phi_w eps" + at, c.psi, c.phi * sign_character(c.phi.carrier()).function()));
  }
  r.residuals.push_back(Residual::of("Phi_L = sum Ind phi_w", ctx.phi_top(L), sum_induced(phis, wl)));
  r.residuals.push_back(Residual::of("Psi_L = sum Ind psi_w", ctx.psi_top(L), sum_induced(psis, wl)));
  r.residuals.push_back(
      Residual::of("Psi_L = Phi_L eps (cross-check)", ctx.psi_top(L), ctx.phi_top(L) * sign_character(wl).function()));
  r.assignments.push_back(std::move(a));
  r.finish();
  return r;
}

// -- Conjecture C ------------------------------------------------------------

namespace {

// v with c = v * extra * n for some n in `ns`, v in `target`.
std::optional<Element> factor(const CoxeterGroup& g, Element c, const std::vector<Element>& ns, Element extra,
                              const Subgroup& target) {
  for (Element n : ns) {
    const Element v = g.multiply(g.multiply(c, g.inverse(n)), g.inverse(extra));
    if (target.contains(v)) return v;
  }
  return std::nullopt;
}

CharacterAssignment search_C(const GroupContext& ctx, const CharacterAssignment& b) {
  const auto& g = ctx.group();
  const Subset L = b.L;
  const auto norm = normalizer_of_parabolic(g, L);
  const auto alpha = alpha_J(g, L);
  const auto eps_n = sign_character(norm);
  std::vector<std::vector<ClassFunction>> cands, ind_phi, ind_psi;
  std::vector<std::size_t> sizes;
  for (const auto& c : b.classes) {
    const auto cw = centralizer(g, c.representative);
    std::vector<ClassFunction> ok, ip, iq;
    for (const auto& chi : linear_characters(cw)) {
      if (!(restrict(chi, c.phi.carrier()) == c.phi)) continue;
      const auto psi = chi.function() * restrict(eps_n.function() * alpha.function(), cw);
      ip.push_back(induce(chi, norm));
      iq.push_back(induce(psi, norm));
      ok.push_back(chi.function());
    }
    sizes.push_back(ok.size());
    cands.push_back(std::move(ok));
    ind_phi.push_back(std::move(ip));
    ind_psi.push_back(std::move(iq));
  }
  CharacterAssignment a = b;
  a.provenance = Provenance::ExhaustiveSearch;
  a.construction = "search over extensions to C_W(w)";
  const bool found = odometer(sizes, [&](const std::vector<std::size_t>& choice) {
    ClassFunction sp = ClassFunction::zero(norm), sq = ClassFunction::zero(norm);
    for (std::size_t i = 0; i < choice.size(); ++i) {
      sp += ind_phi[i][choice[i]];
      sq += ind_psi[i][choice[i]];
    }
    if (!(sp == ctx.phi_tilde(L)) || !(sq == ctx.psi_tilde(L))) return false;
    for (std::size_t i = 0; i < choice.size(); ++i) {
      const auto& phi = cands[i][choice[i]];
      a.classes[i].phi_tilde = phi;
      a.classes[i].psi_tilde = phi * restrict(eps_n.function() * alpha.function(), phi.carrier());
    }
    return true;
  });
  if (!found) throw SearchExhausted("no extensions of the B characters decompose Phi~_L and Psi~_L");
  return a;
}

}  // namespace

CharacterAssignment construct_C_characters(const GroupContext& ctx, Subset L) {
  const auto& g = ctx.group();
  CharacterAssignment a = construct_B_characters(ctx, L);
  const auto members = subset_members(L);
  const auto nl = normalizer_complement(g, L);
  const auto norm = normalizer_of_parabolic(g, L);
  const auto wl = Subgroup::parabolic(g, L);

  if (is_bulky(g, L)) {
    a.construction += "; bulky: phi~(vn) = phi(v)";
    for (auto& c : a.classes) {
      const auto cw = centralizer(g, c.representative);
      const auto& inner = c.phi.carrier();
      auto extend = [&](const ClassFunction& f) {
        return ClassFunction::from_representatives(cw, [&](Element x) {
          const auto v = factor(*g, x, nl.elements(), g->identity(), inner);
          if (!v) throw Error("centralizer is not C_{W_L}(w) x N_L");
          return f(*v);
        });
      };
      c.phi_tilde = extend(c.phi);
      c.psi_tilde = extend(c.psi);
    }
    return a;
  }
  if (members.size() == 2 && g->matrix()(members[0], members[1]) == 2) {
    a.construction += "; A1xA1: phi~ = Phi~_L, psi~ = Psi~_L";
    for (auto& c : a.classes) {
      const auto cw = centralizer(g, c.representative);
      c.phi_tilde = restrict(ctx.phi_tilde(L), cw);
      c.psi_tilde = restrict(ctx.psi_tilde(L), cw);
    }
    return a;
  }
  if (members.size() == 2 && g->matrix()(members[0], members[1]) % 2 == 1) {
    a.construction += "; odd dihedral: coset split N_L = N_L^+ u N_L^-";
    const Element w_l = longest_in(*g, L);
    const auto eps_alpha = sign_character(norm).function() * alpha_J(g, L).function();
    for (auto& c : a.classes) {
      const auto cw = centralizer(g, c.representative);
      const auto& inner = c.phi.carrier();
      std::vector<Element> plus, minus;
      for (Element n : nl.elements()) (cw.contains(n) ? plus : minus).push_back(n);
      c.phi_tilde = ClassFunction::from_representatives(cw, [&](Element x) {
        auto v = factor(*g, x, plus, g->identity(), inner);
        if (!v) v = factor(*g, x, minus, w_l, inner);
        if (!v) throw Error("centralizer element outside C_{W_L}(w) N_L^+ u C_{W_L}(w) w_L N_L^-");
        return c.phi(*v);
      });
      c.psi_tilde = *c.phi_tilde * restrict(eps_alpha, cw);
    }
    return a;
  }
  return search_C(ctx, a);
}

ConjectureReport verify_C(const GroupContext& ctx, Subset L) {
  ConjectureReport r;
  r.conjecture = 'C';
  r.L = L;
  CharacterAssignment a;
  try {
    a = construct_C_characters(ctx, L);
  } catch (const SearchExhausted& e) {
    r.status = Status::SearchExhausted;
    r.notes.push_back(e.what());
    return r;
  } catch (const UnsupportedCase& e) {
    r.notes.push_back(e.what());
    r.finish();
    return r;
  }
  const auto& g = ctx.group();
  const auto norm = normalizer_of_parabolic(g, L);
  const auto wl = Subgroup::parabolic(g, L);
  const auto eps_alpha = sign_character(norm).function() * alpha_J(g, L).function();
  std::vector<ClassFunction> phis, psis;
  for (const auto& c : a.classes) {
    const std::string at = " at " + rep_label(*g, c.representative);
    const auto& pt = *c.phi_tilde;
    const auto& qt = *c.psi_tilde;
    phis.push_back(pt);
    psis.push_back(qt);
    r.residuals.push_back(Residual::check("phi~_w is linear" + at, is_linear_character(pt)));
    r.residuals.push_back(Residual::check("psi~_w is linear" + at, is_linear_character(qt)));
    r.residuals.push_back(Residual::check("C_W(w) lies in N_W(W_L)" + at, pt.carrier().is_subgroup_of(norm)));
    r.residuals.push_back(Residual::of("psi~_w = phi~_w eps alpha_L" + at, qt, pt * restrict(eps_alpha, pt.carrier())));
    r.residuals.push_back(Residual::of("Res phi~_w = phi_w" + at, restrict(pt, c.phi.carrier()), c.phi));
    r.residuals.push_back(Residual::of("Res psi~_w = psi_w" + at, restrict(qt, c.psi.carrier()), c.psi));
    r.residuals.push_back(Residual::of("Res_{W_L} Ind phi~_w = Ind Res phi~_w (Mackey)" + at,
                                       restrict(induce(pt, norm), wl), induce(c.phi, wl)));
  }
  r.residuals.push_back(Residual::of("Phi~_L = sum Ind phi~_w", ctx.phi_tilde(L), sum_induced(phis, norm)));
  r.residuals.push_back(Residual::of("Psi~_L = sum Ind psi~_w", ctx.psi_tilde(L), sum_induced(psis, norm)));
  r.residuals.push_back(
      Residual::of("Psi~_L = Phi~_L eps alpha_L (cross-check)", ctx.psi_tilde(L), ctx.phi_tilde(L) * eps_alpha));
  r.residuals.push_back(Residual::of("Res Phi~_L = Phi_L", restrict(ctx.phi_tilde(L), wl), ctx.phi_top(L)));
  r.residuals.push_back(Residual::of("Res Psi~_L = Psi_L", restrict(ctx.psi_tilde(L), wl), ctx.psi_top(L)));
  const auto members = subset_members(L);
  if (members.size() == 2 && g->matrix()(members[0], members[1]) % 2 == 1)
    for (auto& res : check_final_identity(ctx, L)) r.residuals.push_back(std::move(res));
  r.assignments.push_back(std::move(a));
  r.finish();
  return r;
}

// -- Conjecture A ------------------------------------------------------------

ConjectureReport verify_A(const GroupContext& ctx) {
  const auto& g = ctx.group();
  ConjectureReport r;
  r.conjecture = 'A';
  const auto whole = Subgroup::whole(g);
  const auto eps = sign_character(whole).function();
  const auto all_shapes = shapes(*g);
  ClassFunction rho = ClassFunction::zero(whole), omega = ClassFunction::zero(whole);
  for (std::size_t k = 0; k < all_shapes.size(); ++k) {
    const Subset L = all_shapes[k].representative;
    auto c = verify_C(ctx, L);
    if (!c.verified())
      throw PrerequisiteFailed("Conjecture C is not verified for L = " + subset_label(L) + " (" +
                               to_string(c.status) + ")");
    const auto norm = normalizer_of_parabolic(g, L);
    r.residuals.push_back(
        Residual::of("Phi_[L] = Ind Phi~_L for L = " + subset_label(L), ctx.phi_lambda()[k], induce(ctx.phi_tilde(L), whole)));
    r.residuals.push_back(
        Residual::of("Psi_[L] = Ind Psi~_L for L = " + subset_label(L), ctx.psi_lambda()[k], induce(ctx.psi_tilde(L), whole)));
    for (const auto& cl : c.assignments.front().classes) {
      const Element w = cl.representative;
      rho += induce(*cl.phi_tilde, whole);
      omega += induce(*cl.psi_tilde, whole);
      const auto alpha = alpha_w(g, w);
      r.residuals.push_back(Residual::of("psi~_w = phi~_w eps alpha_w at " + rep_label(*g, w), *cl.psi_tilde,
                                         *cl.phi_tilde * restrict(eps, cl.phi_tilde->carrier()) * alpha.function()));
    }
    r.assignments.push_back(c.assignments.front());
  }
  r.residuals.push_back(Residual::of("rho_W = sum Ind phi~_w", regular_character(whole), rho));
  r.residuals.push_back(Residual::of("omega_W = sum Ind psi~_w", ctx.os().character(), omega));
  r.finish();
  return r;
}

// -- intertwiner identity ------------------------------------------------------

std::vector<Residual> check_final_identity(const GroupContext& ctx, Subset L) {
  const auto& g = ctx.group();
  const auto members = subset_members(L);
  if (members.size() != 2 || g->matrix()(members[0], members[1]) % 2 == 0)
    throw UnsupportedCase("the intertwiner identity needs W_L of odd dihedral type");
  const int s = members[0], t = members[1];
  const int m = g->matrix()(s, t);
  const auto& os = ctx.os();
  const auto e_l = to_cyclotomic(ctx.descent().e_L(L));
  const auto alpha = alpha_J(g, L);

  Vector<Cyclotomic> a_l(os.dimension(2));
  for (const auto& [i, c] : os.expand({os.arrangement().index_of(g->generator(s)), os.arrangement().index_of(g->generator(t))}))
    a_l[i] = Cyclotomic(c);
  auto act_os = [&](const Vector<Cyclotomic>& v, const CyclotomicGroupAlgebraElement& x) {
    Vector<Cyclotomic> out(v.size());
    for (const auto& [w, c] : x.terms()) {
      const auto moved = os.act(2, v, w);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * moved[i];
    }
    return out;
  };

  std::vector<Vector<Cyclotomic>> e_f, a_f;
  for (int j = 1; j < m; ++j) {
    const auto f = rotation_idempotent(g, s, t, j);
    e_f.push_back((e_l * f).to_dense());
    a_f.push_back(act_os(a_l, f));
  }
  const auto basis = Matrix<Cyclotomic>::from_columns(e_f, g->size());

  std::vector<std::pair<std::string, Element>> tests{{"st", g->multiply(g->generator(s), g->generator(t))},
                                                     {"w_L", longest_in(*g, L)}};
  const auto nl = normalizer_complement(g, L);
  for (Element n : nl.elements()) tests.emplace_back("n=" + rep_label(*g, n), n);

  std::vector<Residual> out;
  for (const auto& [name, w] : tests) {
    const Cyclotomic scale = Cyclotomic(g->sign(w)) * alpha(w);
    for (int j = 1; j < m; ++j) {
      const auto target = right_multiply_dense(*g, e_f[j - 1], w);
      const auto coords = solve(basis, Matrix<Cyclotomic>::from_columns({target}, g->size()));
      bool holds = coords.has_value();
      if (holds) {
        Vector<Cyclotomic> rhs(a_l.size());
        for (int i = 0; i < m - 1; ++i)
          for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += scale * (*coords)(i, 0) * a_f[i][k];
        holds = os.act(2, a_f[j - 1], w) == rhs;
      }
      out.push_back(Residual::check("a_L f_j.w = eps alpha_L e_L f_j w for w = " + name + ", j = " + std::to_string(j),
                                    holds));
    }
  }
  // The a_L f_j are a basis of the top component of A(W_L) inside A(W).
  EchelonBasis<Cyclotomic> span(a_l.size());
  for (const auto& v : a_f) span.insert(v);
  out.push_back(Residual::check("a_L f_1..a_L f_{m-1} are independent", span.dimension() == static_cast<std::size_t>(m - 1)));
  return out;
}

// -- Table ---------------------------------------------------------------------

DihedralTable emit_table(const GroupContext& ctx) {
  const auto& g = ctx.group();
  if (g->rank() != 2) throw UnsupportedCase("tables are produced for dihedral groups only");
  DihedralTable t;
  t.m = g->matrix()(0, 1);
  const int k = t.m / 2;
  const Element s = g->generator(0), tt = g->generator(1);
  const Element st = g->multiply(s, tt);
  t.columns = {"1", "s"};
  t.column_elements = {g->identity(), s};
  if (t.m % 2 == 0) {
    t.columns.insert(t.columns.end(), {"t", "w0"});
    t.column_elements.insert(t.column_elements.end(), {tt, g->longest_element()});
  }
  const int last = t.m % 2 == 0 ? k - 1 : k;
  for (int i = 1; i <= last; ++i) {
    t.columns.push_back("(st)^" + std::to_string(i));
    t.column_elements.push_back(power(*g, st, i));
  }
  const auto all_shapes = shapes(*g);
  auto name = [&](Subset L) {
    if (L == 0) return std::string("{}");
    if (L == 3) return std::string("S");
    return std::string(L == 1 ? "{s}" : "{t}");
  };
  auto add = [&](const std::string& label, const ClassFunction& f) {
    t.rows.push_back(label);
    std::vector<Cyclotomic> row;
    for (Element w : t.column_elements) row.push_back(f(w));
    t.values.push_back(std::move(row));
  };
  const auto whole = Subgroup::whole(g);
  for (std::size_t i = 0; i < all_shapes.size(); ++i) add("Phi[" + name(all_shapes[i].representative) + "]", ctx.phi_lambda()[i]);
  add("rho", regular_character(whole));
  for (std::size_t i = 0; i < all_shapes.size(); ++i) add("Psi[" + name(all_shapes[i].representative) + "]", ctx.psi_lambda()[i]);
  add("omega", ctx.os().character());
  return t;
}

}  // namespace coxsol
