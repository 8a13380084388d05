#include "coxsol/characters.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "coxsol/errors.hpp"
#include "coxsol/parabolic.hpp"

namespace coxsol {

ClassFunction::ClassFunction(Subgroup carrier, std::vector<Cyclotomic> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
  if (values_.size() != carrier_.classes().size())
    throw CarrierMismatch("class function has the wrong number of values");
}

ClassFunction ClassFunction::zero(Subgroup carrier) {
  std::vector<Cyclotomic> v(carrier.classes().size(), Cyclotomic(0));
  return ClassFunction(std::move(carrier), std::move(v));
}

ClassFunction ClassFunction::from_representatives(Subgroup carrier, const std::function<Cyclotomic(Element)>& f) {
  std::vector<Cyclotomic> v;
  for (const auto& c : carrier.classes()) v.push_back(f(c.representative));
  return ClassFunction(std::move(carrier), std::move(v));
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

void ClassFunction::check_carrier(const ClassFunction& o) const {
  if (!(carrier_ == o.carrier_)) throw CarrierMismatch("class functions live on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_carrier(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  check_carrier(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  a.check_carrier(b);
  ClassFunction r = a;
  for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] *= b.values_[i];
  return r;
}

ClassFunction operator*(const Cyclotomic& c, ClassFunction a) {
  for (auto& v : a.values_) v *= c;
  return a;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.carrier_ == b.carrier_ && a.values_ == b.values_;
}

std::string ClassFunction::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? ", " : "") << values_[i].to_string();
  os << "]";
  return os.str();
}

bool is_linear_character(const ClassFunction& f) {
  const auto& h = f.carrier();
  const auto& g = *h.group();
  if (!f.degree().is_one()) return false;
  for (const auto& v : f.values())
    if (!v.root_of_unity()) return false;
  for (Element a : h.elements())
    for (Element b : h.generators())
      if (!(f(g.multiply(a, b)) == f(a) * f(b))) return false;
  return true;
}

LinearCharacter::LinearCharacter(ClassFunction f) : f_(std::move(f)) {
  if (!is_linear_character(f_)) throw Error("class function is not a linear character");
}

ClassFunction induce(const ClassFunction& chi, const Subgroup& to) {
  const auto& h = chi.carrier();
  if (!h.is_subgroup_of(to)) throw NotASubgroup("induction source is not a subgroup of the target");
  const auto& g = *to.group();
  const Cyclotomic scale(make_rational(1, static_cast<long>(h.size())));
  return ClassFunction::from_representatives(to, [&](Element w) {
    Cyclotomic sum(0);
    for (Element x : to.elements()) {
      const Element y = g.conjugate(w, x);
      if (h.contains(y)) sum += chi(y);
    }
    return sum * scale;
  });
}

ClassFunction restrict(const ClassFunction& chi, const Subgroup& to) {
  if (!to.is_subgroup_of(chi.carrier())) throw NotASubgroup("restriction target is not a subgroup");
  return ClassFunction::from_representatives(to, [&](Element w) { return chi(w); });
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (!(a.carrier() == b.carrier())) throw CarrierMismatch("inner product of class functions on different groups");
  Cyclotomic sum(0);
  const auto& classes = a.carrier().classes();
  for (std::size_t i = 0; i < classes.size(); ++i)
    sum += Cyclotomic(static_cast<long>(classes[i].members.size())) * a.values()[i] *
           b.values()[i].complex_conjugate();
  return sum * Cyclotomic(make_rational(1, static_cast<long>(a.carrier().size())));
}

LinearCharacter trivial_character(const Subgroup& h) {
  return LinearCharacter(ClassFunction::from_representatives(h, [](Element) { return Cyclotomic(1); }));
}

LinearCharacter sign_character(const Subgroup& h) {
  const auto& g = *h.group();
  return LinearCharacter(ClassFunction::from_representatives(h, [&](Element w) { return Cyclotomic(g.sign(w)); }));
}

ClassFunction regular_character(const Subgroup& h) {
  const Element id = h.group()->identity();
  return ClassFunction::from_representatives(
      h, [&](Element w) { return Cyclotomic(w == id ? static_cast<long>(h.size()) : 0L); });
}

ClassFunction hyperplane_permutation_character(const GroupPtr& g) {
  return ClassFunction::from_representatives(Subgroup::whole(g), [&](Element w) {
    long fixed = 0;
    for (Element t : g->reflections())
      if (g->conjugate(t, w) == t) ++fixed;
    return Cyclotomic(fixed);
  });
}

LinearCharacter alpha_J_on(const Subgroup& h, Subset J) {
  const auto& g = *h.group();
  const auto fix = parabolic_fixed_space(g, J);
  return LinearCharacter(
      ClassFunction::from_representatives(h, [&](Element w) { return determinant_on(g, w, fix); }));
}

LinearCharacter alpha_J(const GroupPtr& g, Subset J) { return alpha_J_on(normalizer_of_parabolic(g, J), J); }

LinearCharacter alpha_w(const GroupPtr& g, Element w) {
  const auto c = centralizer(g, w);
  const auto fix = fixed_space(*g, w);
  return LinearCharacter(
      ClassFunction::from_representatives(c, [&](Element x) { return determinant_on(*g, x, fix); }));
}

Subgroup rotation_subgroup(const GroupPtr& g) {
  if (g->rank() != 2) throw UnsupportedCase("rotation subgroup needs a rank 2 group");
  return Subgroup::generated_by(g, {g->multiply(g->generator(0), g->generator(1))});
}

LinearCharacter dihedral_chi(const GroupPtr& g, int j) {
  const auto rot = rotation_subgroup(g);
  const int m = g->matrix()(0, 1);
  const Element st = g->multiply(g->generator(0), g->generator(1));
  std::map<Element, int> power;
  Element x = g->identity();
  for (int k = 0; k < m; ++k) {
    power[x] = k;
    x = g->multiply(x, st);
  }
  return LinearCharacter(ClassFunction::from_representatives(
      rot, [&](Element w) { return Cyclotomic::zeta(static_cast<unsigned>(m), static_cast<long>(j) * power.at(w)); }));
}

Subgroup derived_subgroup(const Subgroup& h) {
  const auto& g = *h.group();
  std::vector<Element> comm;
  for (Element a : h.elements())
    for (Element b : h.elements())
      comm.push_back(g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b)));
  return Subgroup::generated_by(h.group(), comm);
}

std::vector<LinearCharacter> linear_characters(const Subgroup& h) {
  const auto& g = *h.group();
  const auto d = derived_subgroup(h);
  const std::size_t count = h.size() / d.size();

  auto order = [&](Element x) {
    unsigned k = 1;
    for (Element y = x; y != g.identity(); y = g.multiply(y, x)) ++k;
    return k;
  };
  unsigned e = 1;
  for (Element x : h.elements()) e = std::lcm(e, order(x));
  const auto& gens = h.generators();
  std::vector<unsigned> step;
  for (Element s : gens) step.push_back(e / order(s));

  // Breadth-first order of h with, for each element, its parent and generator.
  std::vector<std::pair<Element, std::size_t>> edges;
  std::vector<char> seen(g.size(), 0);
  std::vector<Element> bfs{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t k = 0; k < bfs.size(); ++k)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = g.multiply(bfs[k], gens[i]);
      if (!seen[y]) {
        seen[y] = 1;
        bfs.push_back(y);
      }
    }

  std::vector<LinearCharacter> out;
  std::vector<unsigned> choice(gens.size(), 0);
  std::vector<long> value(g.size(), -1);
  while (true) {
    std::fill(value.begin(), value.end(), -1);
    value[g.identity()] = 0;
    bool ok = true;
    for (std::size_t k = 0; k < bfs.size() && ok; ++k)
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const Element y = g.multiply(bfs[k], gens[i]);
        const long v = (value[bfs[k]] + static_cast<long>(choice[i] * step[i])) % e;
        if (value[y] < 0) value[y] = v;
        else if (value[y] != v) ok = false;
      }
    if (ok) {
      out.emplace_back(ClassFunction::from_representatives(
          h, [&](Element w) { return Cyclotomic::zeta(e, value[w]); }));
    }
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++choice[i] * step[i] < e) break;
      choice[i] = 0;
    }
    if (i == gens.size()) break;
  }
  if (out.size() != count) throw Error("linear character count disagrees with the abelianisation");
  return out;
}

}  // namespace coxsol
