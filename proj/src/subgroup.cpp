#include "coxsol/subgroup.hpp"

#include <algorithm>
#include <limits>

#include "coxsol/errors.hpp"
#include "coxsol/linalg.hpp"

namespace coxsol {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Cuspidal in W_J: no nonzero fixed vector on span{alpha_j : j in J}.
bool cuspidal_in_parabolic(const CoxeterGroup& g, Subset J, Element w) {
  const auto idx = subset_members(J);
  if (idx.empty()) return true;
  const auto m = g.representation(w);
  Matrix<Cyclotomic> a(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      a(i, j) = m(idx[i], idx[j]) - Cyclotomic(i == j ? 1 : 0);
  return !determinant(a).is_zero();
}

std::vector<Element> small_generating_set(const CoxeterGroup& g, const std::vector<Element>& elements) {
  std::vector<Element> gens;
  std::vector<char> reached(g.size(), 0);
  reached[g.identity()] = 1;
  std::size_t count = 1;
  for (Element x : elements) {
    if (reached[x]) continue;
    gens.push_back(x);
    for (Element y : closure(g, gens))
      if (!reached[y]) {
        reached[y] = 1;
        ++count;
      }
    if (count == elements.size()) break;
  }
  return gens;
}

}  // namespace

std::vector<Element> closure(const CoxeterGroup& g, const std::vector<Element>& gens) {
  std::vector<char> seen(g.size(), 0);
  std::vector<Element> out{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Element s : gens) {
      const Element y = g.multiply(out[k], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup Subgroup::make(const GroupPtr& g, std::vector<Element> elements, std::vector<Element> gens,
                        std::optional<Subset> parabolic) {
  auto d = std::make_shared<Data>();
  d->group = g;
  std::sort(elements.begin(), elements.end());
  d->elements = std::move(elements);
  d->member.assign(g->size(), 0);
  for (Element x : d->elements) d->member[x] = 1;
  d->generators = std::move(gens);
  d->parabolic = parabolic;

  d->class_of.assign(g->size(), kNone);
  for (Element x : d->elements) {
    if (d->class_of[x] != kNone) continue;
    const auto index = static_cast<std::uint32_t>(d->classes.size());
    ConjugacyClass c;
    c.representative = x;  // elements are visited in increasing order
    c.members.push_back(x);
    d->class_of[x] = index;
    for (std::size_t k = 0; k < c.members.size(); ++k)
      for (Element s : d->generators) {
        const Element y = g->conjugate(c.members[k], s);
        if (d->class_of[y] == kNone) {
          d->class_of[y] = index;
          c.members.push_back(y);
        }
      }
    std::sort(c.members.begin(), c.members.end());
    if (parabolic) c.is_cuspidal = cuspidal_in_parabolic(*g, *parabolic, x);
    d->classes.push_back(std::move(c));
  }
  Subgroup h;
  h.d_ = std::move(d);
  return h;
}

Subgroup Subgroup::whole(const GroupPtr& g) {
  std::vector<Element> all(g->size());
  for (Element w = 0; w < g->size(); ++w) all[w] = w;
  std::vector<Element> gens;
  for (int i = 0; i < g->rank(); ++i) gens.push_back(g->generator(i));
  return make(g, std::move(all), std::move(gens), g->all_generators());
}

Subgroup Subgroup::parabolic(const GroupPtr& g, Subset J) {
  if (!is_subset(J, g->all_generators())) throw Error("parabolic subset is not a subset of the generators");
  std::vector<Element> gens;
  for (int i : subset_members(J)) gens.push_back(g->generator(i));
  return make(g, closure(*g, gens), gens, J);
}

Subgroup Subgroup::generated_by(const GroupPtr& g, const std::vector<Element>& gens) {
  auto elements = closure(*g, gens);
  auto small = small_generating_set(*g, elements);
  return make(g, std::move(elements), std::move(small), std::nullopt);
}

Subgroup Subgroup::from_elements(const GroupPtr& g, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<char> member(g->size(), 0);
  for (Element x : elements) {
    if (x >= g->size()) throw NotASubgroup("element index out of range");
    member[x] = 1;
  }
  if (elements.empty() || !member[g->identity()]) throw NotASubgroup("element set lacks the identity");
  for (Element a : elements)
    for (Element b : elements)
      if (!member[g->multiply(a, b)]) throw NotASubgroup("element set is not closed under multiplication");
  auto gens = small_generating_set(*g, elements);
  return make(g, std::move(elements), std::move(gens), std::nullopt);
}

std::size_t Subgroup::class_index(Element w) const {
  const auto c = d_->class_of.at(w);
  if (c == kNone) throw NotASubgroup("element is not in the subgroup");
  return c;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (group() != other.group()) return false;
  for (Element x : elements())
    if (!other.contains(x)) return false;
  return true;
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupPtr& g) { return Subgroup::whole(g).classes(); }

Subgroup centralizer(const Subgroup& h, Element w) {
  const auto& g = *h.group();
  std::vector<Element> out;
  for (Element x : h.elements())
    if (g.multiply(x, w) == g.multiply(w, x)) out.push_back(x);
  return Subgroup::generated_by(h.group(), out);
}

Subgroup normalizer(const Subgroup& h, const Subgroup& k) {
  const auto& g = *h.group();
  std::vector<Element> out;
  for (Element x : h.elements()) {
    bool ok = true;
    for (Element s : k.generators())
      if (!k.contains(g.conjugate(s, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup::generated_by(h.group(), out);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> out;
  for (Element x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return Subgroup::generated_by(a.group(), out);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::generated_by(a.group(), gens);
}

}  // namespace coxsol
