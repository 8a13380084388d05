#include "coxsol/parabolic.hpp"

#include <algorithm>
#include <map>

#include "coxsol/errors.hpp"

namespace coxsol {

std::vector<Element> min_coset_transversal(const CoxeterGroup& g, Subset J) {
  const auto idx = subset_members(J);
  std::vector<Element> out;
  for (Element w = 0; w < g.size(); ++w) {
    const Element wi = g.inverse(w);
    bool ok = true;
    for (int j : idx)
      if (!g.is_positive_root(g.act_on_root(wi, j))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(w);
  }
  return out;
}

std::optional<Subset> conjugate_subset(const CoxeterGroup& g, Subset J, Element x) {
  Subset out = 0;
  for (int j : subset_members(J)) {
    const int k = g.generator_index(g.conjugate(g.generator(j), x));
    if (k < 0) return std::nullopt;
    out |= Subset{1} << k;
  }
  return out;
}

std::vector<Element> transversal_sharp(const CoxeterGroup& g, Subset J) {
  std::vector<Element> out;
  for (Element x : min_coset_transversal(g, J))
    if (conjugate_subset(g, J, x)) out.push_back(x);
  return out;
}

Shape shape_of(const CoxeterGroup& g, Subset J) {
  Shape s;
  for (Element x : transversal_sharp(g, J)) s.members.push_back(*conjugate_subset(g, J, x));
  std::sort(s.members.begin(), s.members.end(), subset_less);
  s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
  s.representative = s.members.front();
  return s;
}

std::vector<Shape> shapes(const CoxeterGroup& g) {
  std::vector<Shape> out;
  std::vector<char> done(std::size_t{1} << g.rank(), 0);
  for (Subset J : all_subsets(g.rank())) {
    if (done[J]) continue;
    Shape s = shape_of(g, J);
    for (Subset K : s.members) done[K] = 1;
    out.push_back(std::move(s));
  }
  return out;
}

Subgroup normalizer_complement(const GroupPtr& g, Subset J) {
  std::vector<Element> out;
  for (Element x : min_coset_transversal(*g, J))
    if (conjugate_subset(*g, J, x) == J) out.push_back(x);
  return Subgroup::from_elements(g, std::move(out));
}

Subgroup normalizer_of_parabolic(const GroupPtr& g, Subset J) {
  return normalizer(Subgroup::whole(g), Subgroup::parabolic(g, J));
}

bool is_bulky(const GroupPtr& g, Subset J) {
  const auto n = normalizer_complement(g, J);
  for (Element x : n.elements())
    for (int j : subset_members(J)) {
      const Element s = g->generator(j);
      if (g->multiply(x, s) != g->multiply(s, x)) return false;
    }
  return true;
}

int sigma_J(const CoxeterGroup& g, Subset J, Element n) {
  const auto idx = subset_members(J);
  const Element ni = g.inverse(n);
  for (int j : idx)
    if (!g.is_positive_root(g.act_on_root(ni, j))) throw NotInComplement("element is not in X_J");
  if (conjugate_subset(g, J, n) != J) throw NotInComplement("element does not normalize J");
  std::vector<int> image;
  for (int j : idx) image.push_back(g.generator_index(g.conjugate(g.generator(j), n)));
  // sign via inversion count
  int inversions = 0;
  for (std::size_t a = 0; a < image.size(); ++a)
    for (std::size_t b = a + 1; b < image.size(); ++b)
      if (image[a] > image[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<ConjugacyClass> cuspidal_classes(const Subgroup& parabolic) {
  if (!parabolic.parabolic_subset()) throw Error("cuspidal classes need a standard parabolic subgroup");
  std::vector<ConjugacyClass> out;
  for (const auto& c : parabolic.classes())
    if (c.is_cuspidal) out.push_back(c);
  return out;
}

namespace {

Subspace kernel_of(const std::vector<Matrix<Cyclotomic>>& maps, std::size_t r) {
  Matrix<Cyclotomic> stacked(maps.size() * r, r);
  for (std::size_t k = 0; k < maps.size(); ++k)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        stacked(k * r + i, j) = maps[k](i, j) - Cyclotomic(i == j ? 1 : 0);
  Subspace s;
  s.ambient = r;
  if (maps.empty()) {
    for (std::size_t i = 0; i < r; ++i) {
      Vector<Cyclotomic> e(r);
      e[i] = Cyclotomic(1);
      s.basis.push_back(std::move(e));
    }
    return s;
  }
  s.basis = nullspace(stacked);
  return s;
}

}  // namespace

Subspace fixed_space(const CoxeterGroup& g, Element w) {
  return kernel_of({g.representation(w)}, g.rank());
}

Subspace parabolic_fixed_space(const CoxeterGroup& g, Subset J) {
  std::vector<Matrix<Cyclotomic>> maps;
  for (int j : subset_members(J)) maps.push_back(g.representation(g.generator(j)));
  return kernel_of(maps, g.rank());
}

bool stabilizes(const CoxeterGroup& g, Element w, const Subspace& x) {
  if (x.basis.empty()) return true;
  const auto m = g.representation(w);
  const auto space = RowSpace<Cyclotomic>::spanned_by(x.basis, x.ambient);
  for (const auto& v : x.basis)
    if (!space.contains(m.apply(v))) return false;
  return true;
}

Subgroup stabilizer(const GroupPtr& g, const Subspace& x) {
  std::vector<Element> out;
  for (Element w = 0; w < g->size(); ++w)
    if (stabilizes(*g, w, x)) out.push_back(w);
  return Subgroup::generated_by(g, out);
}

Cyclotomic determinant_on(const CoxeterGroup& g, Element w, const Subspace& x) {
  const std::size_t d = x.dimension();
  if (d == 0) return Cyclotomic(1);
  // Solve F A = M F for the d x d matrix A.
  const auto f = Matrix<Cyclotomic>::from_columns(x.basis, x.ambient);
  const auto mf = g.representation(w) * f;
  auto a = solve(f, mf);
  if (!a) throw Error("subspace is not invariant under the element");
  return determinant(*a);
}

}  // namespace coxsol
