#include "coxsol/descent.hpp"

#include <algorithm>

#include "coxsol/errors.hpp"
#include "coxsol/module.hpp"

namespace coxsol {

RationalGroupAlgebraElement x_basis(const GroupPtr& g, Subset J) {
  RationalGroupAlgebraElement x(g);
  for (Element w : min_coset_transversal(*g, J)) x.add(g->inverse(w), Rational(1));
  return x;
}

Matrix<Rational> m_matrix(const CoxeterGroup& g) {
  const auto subsets = all_subsets(g.rank());
  const std::size_t n = subsets.size();
  Matrix<Rational> m(n, n);
  std::vector<std::vector<char>> in_x(n);
  for (std::size_t k = 0; k < n; ++k) {
    in_x[k].assign(g.size(), 0);
    for (Element w : min_coset_transversal(g, subsets[k])) in_x[k][w] = 1;
  }
  for (std::size_t l = 0; l < n; ++l) {
    const auto sharp = transversal_sharp(g, subsets[l]);
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_subset(subsets[l], subsets[k])) continue;
      long count = 0;
      for (Element w : sharp)
        if (in_x[k][w]) ++count;
      m(k, l) = count;
    }
  }
  return m;
}

IdempotentFamily IdempotentFamily::build(const GroupPtr& g) {
  IdempotentFamily f;
  f.group = g;
  f.subsets = all_subsets(g->rank());
  f.m = m_matrix(*g);
  f.m_inverse = inverse(f.m);
  for (Subset J : f.subsets) f.x.push_back(x_basis(g, J));
  const std::size_t n = f.subsets.size();
  for (std::size_t l = 0; l < n; ++l) {
    RationalGroupAlgebraElement e(g);
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(f.m_inverse(l, k))) e += f.m_inverse(l, k) * f.x[k];
    f.e.push_back(std::move(e));
  }
  f.shapes = coxsol::shapes(*g);
  for (const auto& s : f.shapes) {
    RationalGroupAlgebraElement e(g);
    for (Subset L : s.members) e += f.e_L(L);
    f.e_shape.push_back(std::move(e));
  }
  return f;
}

std::size_t IdempotentFamily::subset_position(Subset L) const {
  auto it = std::find(subsets.begin(), subsets.end(), L);
  if (it == subsets.end()) throw Error("subset is not a subset of the generators");
  return static_cast<std::size_t>(it - subsets.begin());
}

std::size_t IdempotentFamily::shape_index(Subset L) const {
  for (std::size_t i = 0; i < shapes.size(); ++i)
    if (std::find(shapes[i].members.begin(), shapes[i].members.end(), L) != shapes[i].members.end()) return i;
  throw Error("subset has no shape");
}

RationalGroupAlgebraElement averaging_element(const Subgroup& u) {
  RationalGroupAlgebraElement a(u.group());
  const Rational c = make_rational(1, static_cast<long>(u.size()));
  for (Element x : u.elements()) a.add(x, c);
  return a;
}

ClassFunction ideal_character(const RationalGroupAlgebraElement& e) {
  const auto w = Subgroup::whole(e.group());
  return right_ideal_character(e, w, w);
}

std::vector<ClassFunction> phi_lambda(const IdempotentFamily& family) {
  std::vector<ClassFunction> out;
  for (const auto& e : family.e_shape) out.push_back(ideal_character(e));
  return out;
}

ClassFunction phi_top(const GroupPtr& g, Subset L) {
  const auto local = StandaloneParabolic::of(*g, L);
  const auto family = IdempotentFamily::build(local.group);
  const auto phi = ideal_character(family.e_L(local.group->all_generators()));
  return ClassFunction::from_representatives(Subgroup::parabolic(g, L),
                                             [&](Element w) { return phi(local.localize(*g, w)); });
}

ClassFunction phi_tilde(const IdempotentFamily& family, Subset L) {
  const GroupPtr& g = family.group;
  return right_ideal_character(family.e_L(L), Subgroup::parabolic(g, L), normalizer_of_parabolic(g, L));
}

CyclotomicGroupAlgebraElement rotation_idempotent(const GroupPtr& g, int s, int t, int j) {
  const int m = g->matrix()(s, t);
  const Element st = g->multiply(g->generator(s), g->generator(t));
  const Element ts = g->inverse(st);
  CyclotomicGroupAlgebraElement f(g);
  Element x = g->identity();  // (st)^-k
  const Cyclotomic scale(make_rational(1, m));
  for (int k = 0; k < m; ++k) {
    f.add(x, Cyclotomic::zeta(static_cast<unsigned>(m), static_cast<long>(j) * k) * scale);
    x = g->multiply(x, ts);
  }
  return f;
}

}  // namespace coxsol
