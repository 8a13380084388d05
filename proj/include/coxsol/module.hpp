#pragma once

// Finite-dimensional right modules given by an explicit action on
// coordinate vectors, and their characters.

#include <functional>

#include "coxsol/characters.hpp"
#include "coxsol/linalg.hpp"

namespace coxsol {

template <class T>
using RightAction = std::function<Vector<T>(const Vector<T>&, Element)>;

/// Smallest subspace containing `seeds` and stable under `gens`.
template <class T>
EchelonBasis<T> orbit_span(const std::vector<Vector<T>>& seeds, std::size_t dim, const std::vector<Element>& gens,
                           const RightAction<T>& act) {
  EchelonBasis<T> basis(dim);
  std::vector<Vector<T>> queue;
  for (const auto& v : seeds)
    if (basis.insert(v)) queue.push_back(v);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Element s : gens) {
      auto v = act(queue[k], s);
      if (basis.insert(v)) queue.push_back(std::move(v));
    }
  return basis;
}

template <class T>
bool is_stable(const EchelonBasis<T>& basis, const std::vector<Element>& gens, const RightAction<T>& act) {
  for (const auto& r : basis.rows())
    for (Element s : gens)
      if (!basis.contains(act(r, s))) return false;
  return true;
}

/// Matrix of w on the basis (row i holds the coordinates of row_i . w).
template <class T>
Matrix<T> action_matrix(const EchelonBasis<T>& basis, Element w, const RightAction<T>& act) {
  const std::size_t d = basis.dimension();
  Matrix<T> m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto c = basis.coordinates(act(basis.rows()[i], w));
    for (std::size_t j = 0; j < d; ++j) m(i, j) = c[j];
  }
  return m;
}

/// Character of `acting` on the span; throws Error if the span is not stable.
template <class T>
ClassFunction trace_character(const EchelonBasis<T>& basis, const Subgroup& acting, const RightAction<T>& act) {
  if (!is_stable(basis, acting.generators(), act)) throw Error("subspace is not stable under the acting group");
  return ClassFunction::from_representatives(acting, [&](Element w) {
    T tr(0);
    for (std::size_t i = 0; i < basis.dimension(); ++i) tr += act(basis.rows()[i], w)[basis.pivots()[i]];
    return Cyclotomic(tr);
  });
}

}  // namespace coxsol
