#pragma once

// Parabolic subgroups: coset transversals, shapes, normalizers, fixed
// spaces and the characters attached to them.

#include <optional>
#include <vector>

#include "coxsol/coxeter.hpp"
#include "coxsol/linalg.hpp"
#include "coxsol/subgroup.hpp"

namespace coxsol {

/// X_J: elements w with l(s w) > l(w) for every s in J.
std::vector<Element> min_coset_transversal(const CoxeterGroup& g, Subset J);

/// J^x = x^-1 J x when it is again a set of simple reflections.
std::optional<Subset> conjugate_subset(const CoxeterGroup& g, Subset J, Element x);

/// X_J^# = {x in X_J : J^x is a subset of S}.
std::vector<Element> transversal_sharp(const CoxeterGroup& g, Subset J);

struct Shape {
  std::vector<Subset> members;  // in subset_less order
  Subset representative = 0;    // members.front()
};

/// All shapes, ordered by their representatives.
std::vector<Shape> shapes(const CoxeterGroup& g);
Shape shape_of(const CoxeterGroup& g, Subset J);

/// N_J = {x in X_J : J^x = J}.
Subgroup normalizer_complement(const GroupPtr& g, Subset J);
/// N_W(W_J), computed directly from the definition.
Subgroup normalizer_of_parabolic(const GroupPtr& g, Subset J);

/// Every element of N_J commutes with every element of W_J.
bool is_bulky(const GroupPtr& g, Subset J);

/// Sign of the permutation of J induced by conjugation with n in N_J;
/// throws NotInComplement otherwise.
int sigma_J(const CoxeterGroup& g, Subset J, Element n);

/// Cuspidal classes of a standard parabolic subgroup (or of W).
std::vector<ConjugacyClass> cuspidal_classes(const Subgroup& parabolic);

/// A subspace of V in simple-root coordinates.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vector<Cyclotomic>> basis;  // linearly independent
  std::size_t dimension() const { return basis.size(); }
};

Subspace fixed_space(const CoxeterGroup& g, Element w);
Subspace parabolic_fixed_space(const CoxeterGroup& g, Subset J);
/// w maps the subspace onto itself.
bool stabilizes(const CoxeterGroup& g, Element w, const Subspace& x);
/// Setwise stabilizer of a subspace.
Subgroup stabilizer(const GroupPtr& g, const Subspace& x);

/// Determinant of w restricted to an invariant subspace.
Cyclotomic determinant_on(const CoxeterGroup& g, Element w, const Subspace& x);

}  // namespace coxsol
