#pragma once

// Finite Coxeter groups realised as permutation groups on their root
// systems, with exact reflection-representation matrices.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coxsol/cyclotomic.hpp"
#include "coxsol/linalg.hpp"

namespace coxsol {

/// Index of an element in CoxeterGroup::elements(); elements are numbered in
/// shortlex order of their lex-least reduced words, so the identity is 0.
using Element = std::uint32_t;

/// Word over generator indices 0..rank-1.
using Word = std::vector<int>;

/// Subset of the generators as a bit mask (bit i <=> generator i).
using Subset = std::uint32_t;

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  /// Validates symmetry, unit diagonal and off-diagonal entries >= 2.
  explicit CoxeterMatrix(std::vector<std::vector<int>> entries);

  static CoxeterMatrix type_A(int n);
  static CoxeterMatrix type_B(int n);
  static CoxeterMatrix type_H3();
  static CoxeterMatrix dihedral(int m);
  /// Block-diagonal product; generators of `b` come after those of `a`.
  static CoxeterMatrix product(const CoxeterMatrix& a, const CoxeterMatrix& b);

  int rank() const { return static_cast<int>(m_.size()); }
  int operator()(int i, int j) const { return m_[i][j]; }
  const std::vector<std::vector<int>>& entries() const { return m_; }

  /// Sub-matrix on the generators in J (in increasing order).
  CoxeterMatrix restrict_to(Subset J) const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::vector<std::vector<int>> m_;
};

class CoxeterGroup {
 public:
  static constexpr std::size_t default_max_elements = 10000;

  /// Enumerates the group. Throws InfiniteOrTooLarge if more than
  /// `max_elements` elements (or positive roots) appear.
  static std::shared_ptr<const CoxeterGroup> build(const CoxeterMatrix& matrix,
                                                   std::size_t max_elements = default_max_elements);

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }
  Subset all_generators() const { return rank() == 0 ? 0 : (Subset{1} << rank()) - 1; }
  std::size_t size() const { return lengths_.size(); }

  /// Conductor n of the field Q(zeta_n) holding the representation.
  unsigned conductor() const { return conductor_; }

  // -- root system ------------------------------------------------------
  /// Number of positive roots; roots are indexed so that 0..N-1 are the
  /// positive ones and root i + N is the negative of root i.
  std::size_t num_positive_roots() const { return num_positive_; }
  std::size_t num_roots() const { return roots_.size(); }
  const Vector<Cyclotomic>& root(std::size_t i) const { return roots_[i]; }
  bool is_positive_root(std::size_t i) const { return i < num_positive_; }
  std::size_t negative_of(std::size_t i) const {
    return i < num_positive_ ? i + num_positive_ : i - num_positive_;
  }
  /// Symmetric bilinear form on simple-root coordinates.
  const Matrix<Cyclotomic>& gram() const { return gram_; }

  // -- elements ---------------------------------------------------------
  Element identity() const { return 0; }
  Element generator(int i) const { return generators_[i]; }
  Element longest_element() const { return longest_; }
  int length(Element w) const { return lengths_[w]; }
  const Word& word(Element w) const { return words_[w]; }
  /// Image of root index i under w.
  std::size_t act_on_root(Element w, std::size_t i) const { return perms_[w * roots_.size() + i]; }
  Element multiply(Element a, Element b) const;
  Element inverse(Element w) const { return inverses_[w]; }
  Element conjugate(Element w, Element x) const {  // w^x = x^-1 w x
    return multiply(inverse(x), multiply(w, x));
  }
  Element from_word(const Word& word) const;
  /// (-1)^length.
  int sign(Element w) const { return lengths_[w] % 2 == 0 ? 1 : -1; }

  /// Matrix of w on V in the simple-root basis (columns are the images of
  /// the simple roots); M(ab) = M(a) M(b).
  Matrix<Cyclotomic> representation(Element w) const;

  // -- reflections ------------------------------------------------------
  /// Reflections in increasing element order (length, then lex word).
  const std::vector<Element>& reflections() const { return reflections_; }
  bool is_reflection(Element w) const { return reflection_root_.count(w) != 0; }
  /// Positive root negated by the reflection t.
  std::size_t reflection_root(Element t) const { return reflection_root_.at(t); }
  /// Reflection whose root is the positive root i.
  Element reflection_of_root(std::size_t i) const { return root_reflection_[i]; }

  /// Generator index if w is a simple reflection, else -1.
  int generator_index(Element w) const;

  std::string word_string(Element w) const;

 private:
  CoxeterGroup() = default;

  Element lookup(const std::vector<std::uint16_t>& simple_images) const;

  CoxeterMatrix matrix_;
  unsigned conductor_ = 1;
  Matrix<Cyclotomic> gram_;
  std::vector<Vector<Cyclotomic>> roots_;
  std::size_t num_positive_ = 0;

  std::vector<std::uint16_t> perms_;  // size() x num_roots()
  std::vector<int> lengths_;
  std::vector<Word> words_;
  std::vector<Element> inverses_;
  std::vector<Element> generators_;
  Element longest_ = 0;
  std::map<std::vector<std::uint16_t>, Element> index_;
  std::vector<Element> table_;  // full multiplication table when small
  std::vector<Element> reflections_;
  std::map<Element, std::size_t> reflection_root_;
  std::vector<Element> root_reflection_;
};

using GroupPtr = std::shared_ptr<const CoxeterGroup>;

// -- subsets --------------------------------------------------------------

std::vector<int> subset_members(Subset J);
inline int subset_size(Subset J) { return __builtin_popcount(J); }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
/// Ordering by cardinality, then lexicographically on sorted members.
bool subset_less(Subset a, Subset b);
/// All subsets of {0..rank-1} in subset_less order.
std::vector<Subset> all_subsets(int rank);
/// "{s1,s3}" style label with 1-based generator names.
std::string subset_label(Subset J);
std::string word_label(const Word& w);

/// Element of `to` with the word of w in `from`, generators renamed by map.
Element transport(const CoxeterGroup& from, Element w, const CoxeterGroup& to, const std::vector<int>& generator_map);

/// W_L rebuilt as a Coxeter group in its own right.
struct StandaloneParabolic {
  std::shared_ptr<const CoxeterGroup> group;
  std::vector<int> to_local;  // ambient generator -> local generator, or -1

  static StandaloneParabolic of(const CoxeterGroup& ambient, Subset L);
  /// The element of the standalone group with the same word as w in W_L.
  Element localize(const CoxeterGroup& ambient, Element w) const { return transport(ambient, w, *group, to_local); }
};

}  // namespace coxsol
