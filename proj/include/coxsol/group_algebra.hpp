#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxsol/coxeter.hpp"
#include "coxsol/cyclotomic.hpp"
#include "coxsol/errors.hpp"
#include "coxsol/rational.hpp"

namespace coxsol {

/// Finite formal sum of group elements with coefficients in Scalar
/// (Rational or Cyclotomic). Zero coefficients are never stored.
template <class Scalar>
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(GroupPtr g) : g_(std::move(g)) {}

  static GroupAlgebraElement basis(GroupPtr g, Element w, Scalar c = Scalar(1)) {
    GroupAlgebraElement a(std::move(g));
    a.add(w, c);
    return a;
  }
  static GroupAlgebraElement one(GroupPtr g) {
    const Element id = g->identity();
    return basis(std::move(g), id);
  }
  static GroupAlgebraElement from_dense(GroupPtr g, const std::vector<Scalar>& v) {
    GroupAlgebraElement a(std::move(g));
    for (std::size_t w = 0; w < v.size(); ++w) a.add(static_cast<Element>(w), v[w]);
    return a;
  }

  const GroupPtr& group() const { return g_; }
  const std::map<Element, Scalar>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  Scalar coefficient(Element w) const {
    auto it = c_.find(w);
    return it == c_.end() ? Scalar(0) : it->second;
  }

  void add(Element w, const Scalar& c) {
    if (coxsol::is_zero(c)) return;
    auto [it, inserted] = c_.emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (coxsol::is_zero(it->second)) c_.erase(it);
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    check(o);
    for (const auto& [w, c] : o.c_) add(w, c);
    return *this;
  }
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
    check(o);
    for (const auto& [w, c] : o.c_) add(w, -c);
    return *this;
  }
  GroupAlgebraElement& operator*=(const Scalar& s) {
    if (coxsol::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& [w, c] : c_) c *= s;
    return *this;
  }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const Scalar& s, GroupAlgebraElement a) { return a *= s; }

  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check(b);
    std::vector<Scalar> acc(a.g_->size());
    std::vector<char> touched(a.g_->size(), 0);
    for (const auto& [x, cx] : a.c_)
      for (const auto& [y, cy] : b.c_) {
        const Element z = a.g_->multiply(x, y);
        acc[z] += cx * cy;
        touched[z] = 1;
      }
    GroupAlgebraElement r(a.g_);
    for (std::size_t z = 0; z < acc.size(); ++z)
      if (touched[z] && !coxsol::is_zero(acc[z])) r.c_.emplace(static_cast<Element>(z), acc[z]);
    return r;
  }

  GroupAlgebraElement right_multiply(Element w) const {
    GroupAlgebraElement r(g_);
    for (const auto& [x, c] : c_) r.c_.emplace(g_->multiply(x, w), c);
    return r;
  }
  GroupAlgebraElement left_multiply(Element w) const {
    GroupAlgebraElement r(g_);
    for (const auto& [x, c] : c_) r.c_.emplace(g_->multiply(w, x), c);
    return r;
  }
  /// x^-1 a x.
  GroupAlgebraElement conjugate(Element x) const {
    GroupAlgebraElement r(g_);
    for (const auto& [w, c] : c_) r.c_.emplace(g_->conjugate(w, x), c);
    return r;
  }

  std::vector<Scalar> to_dense() const {
    std::vector<Scalar> v(g_->size());
    for (const auto& [w, c] : c_) v[w] = c;
    return v;
  }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.g_ == b.g_ && a.c_ == b.c_;
  }

 private:
  void check(const GroupAlgebraElement& o) const {
    if (g_ != o.g_) throw CarrierMismatch("group algebra elements of different groups");
  }

  GroupPtr g_;
  std::map<Element, Scalar> c_;
};

using RationalGroupAlgebraElement = GroupAlgebraElement<Rational>;
using CyclotomicGroupAlgebraElement = GroupAlgebraElement<Cyclotomic>;

inline CyclotomicGroupAlgebraElement to_cyclotomic(const RationalGroupAlgebraElement& a) {
  CyclotomicGroupAlgebraElement r(a.group());
  for (const auto& [w, c] : a.terms()) r.add(w, Cyclotomic(c));
  return r;
}

/// Right multiplication by w on a dense coefficient vector.
template <class Scalar>
std::vector<Scalar> right_multiply_dense(const CoxeterGroup& g, const std::vector<Scalar>& v, Element w) {
  std::vector<Scalar> out(v.size());
  for (std::size_t x = 0; x < v.size(); ++x)
    if (!is_zero(v[x])) out[g.multiply(static_cast<Element>(x), w)] = v[x];
  return out;
}

}  // namespace coxsol
