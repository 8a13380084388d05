#pragma once

// The Orlik-Solomon algebra of the reflection arrangement: intersection
// lattice, NBC basis, the W-action and Brieskorn components.

#include <cstdint>
#include <map>
#include <vector>

#include "coxsol/characters.hpp"
#include "coxsol/coxeter.hpp"
#include "coxsol/subgroup.hpp"

namespace coxsol {

/// Reflections in increasing element order, i.e. by (length, lex word).
std::vector<Element> default_hyperplane_order(const CoxeterGroup& g);
/// A pseudo-random reordering of the default order (std::mt19937_64).
std::vector<Element> seeded_hyperplane_order(const CoxeterGroup& g, std::uint64_t seed);

/// The hyperplanes H_t, indexed 0..|T|-1 in a fixed total order.
class Arrangement {
 public:
  Arrangement(GroupPtr g, std::vector<Element> order);

  const GroupPtr& group() const { return g_; }
  std::size_t size() const { return order_.size(); }
  Element reflection(int h) const { return order_[h]; }
  int index_of(Element t) const { return index_.at(t); }
  /// Positive root orthogonal to H.
  const Vector<Cyclotomic>& normal(int h) const { return g_->root(g_->reflection_root(order_[h])); }
  /// Index of H.w = H_{t^w}.
  int act(int h, Element w) const { return index_.at(g_->conjugate(order_[h], w)); }

 private:
  GroupPtr g_;
  std::vector<Element> order_;
  std::map<Element, int> index_;
};

struct Flat {
  std::vector<int> hyperplanes;  // all hyperplanes containing X, increasing
  int rank = 0;                  // codimension of X
  std::vector<int> basis;        // independent hyperplanes cutting out X
  std::size_t shape = 0;         // index into shapes(g)
};

/// L(A): every intersection of hyperplanes, with joins and the W-action.
class IntersectionLattice {
 public:
  static constexpr int default_rank_guard = 3;

  /// Throws RankGuard if the group has rank above `rank_guard`.
  static IntersectionLattice build(const Arrangement& a, int rank_guard = default_rank_guard);

  const std::vector<Flat>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }
  /// Index of V (the empty intersection).
  std::size_t whole_space() const { return 0; }
  /// X cap H.
  std::size_t join(std::size_t x, int h) const { return join_[x * hyperplanes_ + h]; }
  bool contains(std::size_t x, int h) const { return member_[x * hyperplanes_ + h] != 0; }
  /// X.w.
  std::size_t act(std::size_t x, Element w) const;
  /// Intersection of an arbitrary set of hyperplanes.
  std::size_t closure(const std::vector<int>& hs) const;
  std::size_t index_of(const std::vector<int>& hyperplanes) const { return index_.at(hyperplanes); }
  /// Fix(W_L).
  std::size_t fixed_flat(Subset L) const { return fixed_flat_.at(L); }
  /// W_X: generated by the reflections whose hyperplanes contain X.
  Subgroup pointwise_stabilizer(std::size_t x) const;

 private:
  const Arrangement* a_ = nullptr;
  std::size_t hyperplanes_ = 0;
  std::vector<Flat> flats_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::size_t> join_;
  std::vector<char> member_;
  std::map<Subset, std::size_t> fixed_flat_;
};

/// Strictly increasing hyperplane indices a_{h1} ... a_{hp}.
using Monomial = std::vector<int>;
using SparseVector = std::map<std::size_t, Rational>;

/// A(W) in its NBC basis, graded by degree 0..rank.
class OSAlgebra {
 public:
  /// Empty `order` selects default_hyperplane_order.
  static OSAlgebra build(const GroupPtr& g, std::vector<Element> order = {},
                         int rank_guard = IntersectionLattice::default_rank_guard);

  OSAlgebra(const OSAlgebra&) = delete;
  OSAlgebra& operator=(const OSAlgebra&) = delete;
  OSAlgebra(OSAlgebra&&) noexcept;
  OSAlgebra& operator=(OSAlgebra&&) noexcept;
  ~OSAlgebra();

  const GroupPtr& group() const { return arrangement_->group(); }
  const Arrangement& arrangement() const { return *arrangement_; }
  const IntersectionLattice& lattice() const { return lattice_; }
  int top_degree() const { return static_cast<int>(basis_.size()) - 1; }

  const std::vector<Monomial>& basis(int p) const { return basis_.at(p); }
  std::size_t dimension(int p) const { return basis_.at(p).size(); }
  std::size_t total_dimension() const;
  /// Flat cut out by the i-th basis monomial of degree p.
  std::size_t flat_of(int p, std::size_t i) const { return basis_flat_.at(p)[i]; }
  std::size_t basis_index(const Monomial& m) const;

  /// Expansion of a_{h1} ... a_{hp} (any order, repeats allowed) in the NBC basis.
  SparseVector expand(const std::vector<int>& hs) const;
  /// (basis monomial i of degree p).w
  SparseVector act(int p, std::size_t i, Element w) const;
  template <class Scalar>
  Vector<Scalar> act(int p, const Vector<Scalar>& v, Element w) const {
    Vector<Scalar> out(dimension(p));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_zero(v[i])) continue;
      for (const auto& [j, c] : act(p, i, w)) out[j] += v[i] * Scalar(c);
    }
    return out;
  }
  Vector<Rational> dense(int p, const SparseVector& v) const;

  /// Basis monomials of A_X (all of degree rank X).
  std::vector<std::size_t> component(std::size_t x) const;
  /// Character of `acting` on the sum of A_X over the given flats, which
  /// must be permuted by `acting`.
  ClassFunction component_character(const std::vector<std::size_t>& flats, const Subgroup& acting) const;
  ClassFunction degree_character(int p) const;
  /// omega_W.
  ClassFunction character() const;

 private:
  OSAlgebra() = default;
  void straighten_all();
  bool is_nbc(const Monomial& m) const;

  std::unique_ptr<Arrangement> arrangement_;
  IntersectionLattice lattice_;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<std::vector<std::size_t>> basis_flat_;
  std::map<Monomial, std::size_t> basis_index_;
  std::map<Monomial, SparseVector> normal_form_;  // every independent monomial
};

/// Psi_lambda for every shape, in shapes(g) order.
std::vector<ClassFunction> psi_lambda(const OSAlgebra& a);
/// Psi_L on W_L: the top component of A(W_L), computed in the standalone
/// Coxeter group of type L and transported to W_L.
ClassFunction psi_top(const GroupPtr& g, Subset L);
/// Psi~_L on N_W(W_L): the action on A_X with X = Fix(W_L).
ClassFunction psi_tilde(const OSAlgebra& a, Subset L);

/// Dihedral labelling: H_j is the hyperplane of (st)^j s, so s fixes H_0
/// and t fixes H_{m-1}.
struct DihedralLabels {
  int m = 0;
  std::vector<int> hyperplane;  // H_j -> arrangement index

  static DihedralLabels of(const OSAlgebra& a);
  /// a_j a_k in the top degree, indices taken mod m.
  Vector<Rational> product(const OSAlgebra& a, int j, int k) const;
  /// b_0 = -(1/m) sum_j a_0 a_j and b_j = a_0 a_j + b_0.
  Vector<Rational> b(const OSAlgebra& a, int j) const;
};

}  // namespace coxsol
