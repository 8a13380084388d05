#pragma once

// Solomon's descent algebra: the x_J basis, the m-matrix, the idempotents
// e_L and e_lambda and the characters of the ideals they generate.

#include <vector>

#include "coxsol/characters.hpp"
#include "coxsol/group_algebra.hpp"
#include "coxsol/linalg.hpp"
#include "coxsol/module.hpp"
#include "coxsol/parabolic.hpp"

namespace coxsol {

/// x_J = sum of x^-1 over X_J.
RationalGroupAlgebraElement x_basis(const GroupPtr& g, Subset J);

/// m_KL = |X_K cap X_L^#| for L inside K, rows and columns in all_subsets order.
Matrix<Rational> m_matrix(const CoxeterGroup& g);

struct IdempotentFamily {
  GroupPtr group;
  std::vector<Subset> subsets;  // all_subsets order
  Matrix<Rational> m;
  Matrix<Rational> m_inverse;
  std::vector<RationalGroupAlgebraElement> x;    // per subset
  std::vector<RationalGroupAlgebraElement> e;    // per subset
  std::vector<Shape> shapes;
  std::vector<RationalGroupAlgebraElement> e_shape;  // per shape

  static IdempotentFamily build(const GroupPtr& g);

  std::size_t subset_position(Subset L) const;
  const RationalGroupAlgebraElement& e_L(Subset L) const { return e[subset_position(L)]; }
  const RationalGroupAlgebraElement& x_J(Subset J) const { return x[subset_position(J)]; }
  std::size_t shape_index(Subset L) const;
};

/// Av(U) = (1/|U|) sum of U.
RationalGroupAlgebraElement averaging_element(const Subgroup& u);

/// Right ideal a.CW_U spanned by {a u : u in U}, as dense vectors over W.
template <class Scalar>
EchelonBasis<Scalar> right_ideal(const GroupAlgebraElement<Scalar>& a, const Subgroup& u) {
  const GroupPtr& g = a.group();
  RightAction<Scalar> act = [&](const Vector<Scalar>& v, Element w) { return right_multiply_dense(*g, v, w); };
  return orbit_span<Scalar>({a.to_dense()}, g->size(), u.generators(), act);
}

/// Character of `acting` on the right ideal a.CW_U by right multiplication.
template <class Scalar>
ClassFunction right_ideal_character(const GroupAlgebraElement<Scalar>& a, const Subgroup& u, const Subgroup& acting) {
  const GroupPtr& g = a.group();
  RightAction<Scalar> act = [&](const Vector<Scalar>& v, Element w) { return right_multiply_dense(*g, v, w); };
  return trace_character(right_ideal(a, u), acting, act);
}

/// Character of W on e.CW.
ClassFunction ideal_character(const RationalGroupAlgebraElement& e);

/// Phi_lambda for every shape, in IdempotentFamily::shapes order.
std::vector<ClassFunction> phi_lambda(const IdempotentFamily& family);

/// Phi_L on W_L: the top component of C W_L, computed in the standalone
/// Coxeter group of type L and transported to W_L.
ClassFunction phi_top(const GroupPtr& g, Subset L);

/// Phi~_L on N_W(W_L): right multiplication on e_L.C W_L.
ClassFunction phi_tilde(const IdempotentFamily& family, Subset L);

/// f_j = (1/m) sum_k zeta_m^{jk} (st)^{-k} for the generators s, t.
CyclotomicGroupAlgebraElement rotation_idempotent(const GroupPtr& g, int s, int t, int j);

}  // namespace coxsol
