#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "coxsol/coxeter.hpp"

namespace coxsol {

struct ConjugacyClass {
  Element representative = 0;    // minimal element index, i.e. shortlex least
  std::vector<Element> members;  // sorted
  bool is_cuspidal = false;      // only meaningful in a standard parabolic
};

/// An explicit subgroup of a CoxeterGroup with its own conjugacy classes.
/// Cheap to copy; the data is shared and immutable.
class Subgroup {
 public:
  static Subgroup whole(const GroupPtr& g);
  /// W_J, with cuspidal classes flagged relative to V_J.
  static Subgroup parabolic(const GroupPtr& g, Subset J);
  static Subgroup generated_by(const GroupPtr& g, const std::vector<Element>& gens);
  /// Throws NotASubgroup unless `elements` is closed under products.
  static Subgroup from_elements(const GroupPtr& g, std::vector<Element> elements);

  const GroupPtr& group() const { return d_->group; }
  std::size_t size() const { return d_->elements.size(); }
  const std::vector<Element>& elements() const { return d_->elements; }
  bool contains(Element w) const { return d_->member[w] != 0; }
  const std::vector<Element>& generators() const { return d_->generators; }
  /// Set for standard parabolic subgroups (including the whole group).
  std::optional<Subset> parabolic_subset() const { return d_->parabolic; }

  const std::vector<ConjugacyClass>& classes() const { return d_->classes; }
  /// Index into classes() of the class containing w (w must be a member).
  std::size_t class_index(Element w) const;

  bool is_subgroup_of(const Subgroup& other) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.d_ == b.d_ || (a.group() == b.group() && a.elements() == b.elements());
  }

 private:
  struct Data {
    GroupPtr group;
    std::vector<Element> elements;
    std::vector<char> member;
    std::vector<Element> generators;
    std::vector<ConjugacyClass> classes;
    std::vector<std::uint32_t> class_of;
    std::optional<Subset> parabolic;
  };
  static Subgroup make(const GroupPtr& g, std::vector<Element> elements, std::vector<Element> gens,
                       std::optional<Subset> parabolic);

  std::shared_ptr<const Data> d_;
};

/// Closure of `gens` under multiplication.
std::vector<Element> closure(const CoxeterGroup& g, const std::vector<Element>& gens);

/// Conjugacy classes of `g` itself (via Subgroup::whole).
std::vector<ConjugacyClass> conjugacy_classes(const GroupPtr& g);

Subgroup centralizer(const Subgroup& h, Element w);
inline Subgroup centralizer(const GroupPtr& g, Element w) { return centralizer(Subgroup::whole(g), w); }

/// Subgroup of `h` normalizing `k`.
Subgroup normalizer(const Subgroup& h, const Subgroup& k);

/// Intersection of two subgroups of the same group.
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Subgroup generated by the union.
Subgroup join(const Subgroup& a, const Subgroup& b);

}  // namespace coxsol
