#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coxsol/coxeter.hpp"
#include "coxsol/cyclotomic.hpp"
#include "coxsol/subgroup.hpp"

namespace coxsol {

/// A class function on a subgroup, one value per class of the carrier.
class ClassFunction {
 public:
  ClassFunction(Subgroup carrier, std::vector<Cyclotomic> values);
  static ClassFunction zero(Subgroup carrier);
  /// Evaluates `f` at the class representatives.
  static ClassFunction from_representatives(Subgroup carrier, const std::function<Cyclotomic(Element)>& f);

  const Subgroup& carrier() const { return carrier_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  Cyclotomic operator()(Element w) const { return values_[carrier_.class_index(w)]; }
  const Cyclotomic& degree() const { return values_[0]; }
  bool is_zero() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  /// Pointwise product; throws CarrierMismatch.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const Cyclotomic& c, ClassFunction a);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

  std::string to_string() const;

 private:
  void check_carrier(const ClassFunction& o) const;

  Subgroup carrier_;
  std::vector<Cyclotomic> values_;
};

/// A class function that is a homomorphism to the roots of unity.
class LinearCharacter {
 public:
  /// Throws Error if `f` is not multiplicative with root-of-unity values.
  explicit LinearCharacter(ClassFunction f);

  const ClassFunction& function() const { return f_; }
  operator const ClassFunction&() const { return f_; }  // NOLINT
  const Subgroup& carrier() const { return f_.carrier(); }
  Cyclotomic operator()(Element w) const { return f_(w); }

  friend LinearCharacter operator*(const LinearCharacter& a, const LinearCharacter& b) {
    return LinearCharacter(a.f_ * b.f_);
  }
  friend bool operator==(const LinearCharacter& a, const LinearCharacter& b) { return a.f_ == b.f_; }

 private:
  ClassFunction f_;
};

bool is_linear_character(const ClassFunction& f);

/// Induction from a subgroup of `to`; throws NotASubgroup.
ClassFunction induce(const ClassFunction& chi, const Subgroup& to);
/// Restriction to a subgroup of the carrier; throws NotASubgroup.
ClassFunction restrict(const ClassFunction& chi, const Subgroup& to);
/// (1/|G|) sum a(g) conj(b(g)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

LinearCharacter trivial_character(const Subgroup& h);
LinearCharacter sign_character(const Subgroup& h);
ClassFunction regular_character(const Subgroup& h);

/// Number of reflecting hyperplanes fixed (setwise) by each w in W.
ClassFunction hyperplane_permutation_character(const GroupPtr& g);

/// alpha_J on N_W(W_J): determinant on Fix(W_J).
LinearCharacter alpha_J(const GroupPtr& g, Subset J);
/// alpha_J restricted to any subgroup stabilizing Fix(W_J).
LinearCharacter alpha_J_on(const Subgroup& h, Subset J);
/// alpha_w on C_W(w): determinant on Fix(w).
LinearCharacter alpha_w(const GroupPtr& g, Element w);

/// Rotation subgroup <st> of a rank 2 group.
Subgroup rotation_subgroup(const GroupPtr& g);
/// chi_j on <st>: st -> zeta_m^j.
LinearCharacter dihedral_chi(const GroupPtr& g, int j);

/// All linear characters of h, via the abelianisation h/[h,h].
std::vector<LinearCharacter> linear_characters(const Subgroup& h);
Subgroup derived_subgroup(const Subgroup& h);

}  // namespace coxsol
