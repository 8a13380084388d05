#include "coxsol/orlik_solomon.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "coxsol/errors.hpp"
#include "coxsol/linalg.hpp"
#include "coxsol/parabolic.hpp"

namespace coxsol {

std::vector<Element> default_hyperplane_order(const CoxeterGroup& g) { return g.reflections(); }

std::vector<Element> seeded_hyperplane_order(const CoxeterGroup& g, std::uint64_t seed) {
  auto order = g.reflections();
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

Arrangement::Arrangement(GroupPtr g, std::vector<Element> order) : g_(std::move(g)), order_(std::move(order)) {
  for (std::size_t h = 0; h < order_.size(); ++h) {
    if (!g_->is_reflection(order_[h])) throw Error("hyperplane order contains a non-reflection");
    if (!index_.emplace(order_[h], static_cast<int>(h)).second) throw Error("hyperplane order repeats a reflection");
  }
  if (order_.size() != g_->reflections().size()) throw Error("hyperplane order misses a reflection");
}

// -- lattice ---------------------------------------------------------------

IntersectionLattice IntersectionLattice::build(const Arrangement& a, int rank_guard) {
  const GroupPtr& g = a.group();
  if (g->rank() > rank_guard)
    throw RankGuard("intersection lattice is limited to rank " + std::to_string(rank_guard));
  const std::size_t n = a.size();
  const std::size_t r = static_cast<std::size_t>(g->rank());

  // Breadth-first enumeration from V, joining one hyperplane at a time.
  std::vector<Flat> found{Flat{}};
  std::map<std::vector<int>, std::size_t> seen{{{}, 0}};
  std::vector<std::vector<std::size_t>> joins;
  for (std::size_t k = 0; k < found.size(); ++k) {
    std::vector<std::size_t> row(n);
    const Flat f = found[k];
    for (std::size_t h = 0; h < n; ++h) {
      if (std::binary_search(f.hyperplanes.begin(), f.hyperplanes.end(), static_cast<int>(h))) {
        row[h] = k;
        continue;
      }
      std::vector<Vector<Cyclotomic>> normals;
      for (int b : f.basis) normals.push_back(a.normal(b));
      normals.push_back(a.normal(static_cast<int>(h)));
      const auto span = RowSpace<Cyclotomic>::spanned_by(normals, r);
      Flat next;
      next.rank = f.rank + 1;
      next.basis = f.basis;
      next.basis.push_back(static_cast<int>(h));
      for (std::size_t x = 0; x < n; ++x)
        if (span.contains(a.normal(static_cast<int>(x)))) next.hyperplanes.push_back(static_cast<int>(x));
      auto [it, inserted] = seen.emplace(next.hyperplanes, found.size());
      if (inserted) found.push_back(std::move(next));
      row[h] = it->second;
    }
    joins.push_back(std::move(row));
  }

  // Renumber by (rank, hyperplane set).
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (found[x].rank != found[y].rank) return found[x].rank < found[y].rank;
    return found[x].hyperplanes < found[y].hyperplanes;
  });
  std::vector<std::size_t> position(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  IntersectionLattice lat;
  lat.a_ = &a;
  lat.hyperplanes_ = n;
  lat.join_.resize(found.size() * n);
  lat.member_.assign(found.size() * n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Flat f = found[order[i]];
    for (std::size_t h = 0; h < n; ++h) lat.join_[i * n + h] = position[joins[order[i]][h]];
    for (int h : f.hyperplanes) lat.member_[i * n + h] = 1;
    lat.index_.emplace(f.hyperplanes, i);
    lat.flats_.push_back(std::move(f));
  }

  for (Subset L : all_subsets(g->rank())) {
    std::vector<int> hs;
    for (int j : subset_members(L)) hs.push_back(a.index_of(g->generator(j)));
    lat.fixed_flat_[L] = lat.closure(hs);
  }

  // W-orbits on L(A) correspond to shapes; label them starting from Fix(W_L).
  const auto all_shapes = shapes(*g);
  std::vector<char> labelled(lat.flats_.size(), 0);
  for (std::size_t k = 0; k < all_shapes.size(); ++k) {
    std::vector<std::size_t> queue{lat.fixed_flat(all_shapes[k].representative)};
    if (labelled[queue[0]]) throw Error("two shapes share a lattice orbit");
    labelled[queue[0]] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      lat.flats_[queue[q]].shape = k;
      for (int i = 0; i < g->rank(); ++i) {
        const std::size_t y = lat.act(queue[q], g->generator(i));
        if (!labelled[y]) {
          labelled[y] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  if (std::find(labelled.begin(), labelled.end(), 0) != labelled.end())
    throw Error("lattice orbit without a parabolic shape");
  return lat;
}

std::size_t IntersectionLattice::act(std::size_t x, Element w) const {
  std::vector<int> hs;
  for (int h : flats_[x].hyperplanes) hs.push_back(a_->act(h, w));
  std::sort(hs.begin(), hs.end());
  return index_.at(hs);
}

std::size_t IntersectionLattice::closure(const std::vector<int>& hs) const {
  std::size_t x = whole_space();
  for (int h : hs) x = join(x, h);
  return x;
}

Subgroup IntersectionLattice::pointwise_stabilizer(std::size_t x) const {
  std::vector<Element> gens;
  for (int h : flats_[x].hyperplanes) gens.push_back(a_->reflection(h));
  return Subgroup::generated_by(a_->group(), gens);
}

// -- algebra ---------------------------------------------------------------

namespace {

// Sorts hs in place and returns the sign of the sorting permutation, or 0
// if an index repeats.
int sort_with_sign(std::vector<int>& hs) {
  int sign = 1;
  for (std::size_t i = 1; i < hs.size(); ++i)
    for (std::size_t j = i; j > 0 && hs[j - 1] >= hs[j]; --j) {
      if (hs[j - 1] == hs[j]) return 0;
      std::swap(hs[j - 1], hs[j]);
      sign = -sign;
    }
  return sign;
}

void add_scaled(SparseVector& into, const SparseVector& v, const Rational& c) {
  for (const auto& [i, x] : v) {
    auto& slot = into[i];
    slot += c * x;
    if (is_zero(slot)) into.erase(i);
  }
}

}  // namespace

OSAlgebra::OSAlgebra(OSAlgebra&&) noexcept = default;
OSAlgebra& OSAlgebra::operator=(OSAlgebra&&) noexcept = default;
OSAlgebra::~OSAlgebra() = default;

OSAlgebra OSAlgebra::build(const GroupPtr& g, std::vector<Element> order, int rank_guard) {
  if (order.empty()) order = default_hyperplane_order(*g);
  OSAlgebra a;
  a.arrangement_ = std::make_unique<Arrangement>(g, std::move(order));
  a.lattice_ = IntersectionLattice::build(*a.arrangement_, rank_guard);
  a.straighten_all();
  return a;
}

bool OSAlgebra::is_nbc(const Monomial& m) const {
  // m is NBC iff no hyperplane smaller than m[i] contains the flat of m[i..].
  std::size_t x = lattice_.whole_space();
  for (std::size_t i = m.size(); i-- > 0;) {
    x = lattice_.join(x, m[i]);
    const auto& hs = lattice_.flats()[x].hyperplanes;
    if (hs.front() < m[i]) return false;
  }
  return true;
}

void OSAlgebra::straighten_all() {
  const int r = group()->rank();
  const int n = static_cast<int>(arrangement_->size());
  basis_.assign(r + 1, {});
  basis_flat_.assign(r + 1, {});

  // Independent monomials per degree, in lex order.
  std::vector<std::vector<Monomial>> independent(r + 1);
  std::vector<std::pair<Monomial, std::size_t>> stack{{{}, lattice_.whole_space()}};
  while (!stack.empty()) {
    auto [m, x] = std::move(stack.back());
    stack.pop_back();
    independent[m.size()].push_back(m);
    const int start = m.empty() ? 0 : m.back() + 1;
    for (int h = n - 1; h >= start; --h) {
      if (lattice_.contains(x, h)) continue;
      Monomial next = m;
      next.push_back(h);
      stack.emplace_back(std::move(next), lattice_.join(x, h));
    }
  }

  for (int p = 0; p <= r; ++p) {
    std::sort(independent[p].begin(), independent[p].end());
    for (const auto& m : independent[p]) {
      if (is_nbc(m)) {
        const std::size_t i = basis_[p].size();
        basis_[p].push_back(m);
        basis_flat_[p].push_back(lattice_.closure(m));
        basis_index_.emplace(m, i);
        normal_form_[m] = SparseVector{{i, Rational(1)}};
        continue;
      }
      // Find h < m[i] on the flat of T = m[i..], and the circuit B + h inside T + h.
      std::size_t x = lattice_.whole_space();
      std::size_t i = m.size();
      int h = -1;
      while (i-- > 0) {
        x = lattice_.join(x, m[i]);
        h = lattice_.flats()[x].hyperplanes.front();
        if (h < m[i]) break;
      }
      const Monomial t(m.begin() + static_cast<long>(i), m.end());
      Monomial b, rest(m.begin(), m.begin() + static_cast<long>(i));
      for (std::size_t k = 0; k < t.size(); ++k) {
        Monomial without = t;
        without.erase(without.begin() + static_cast<long>(k));
        if (lattice_.contains(lattice_.closure(without), h)) rest.push_back(t[k]);
        else b.push_back(t[k]);
      }
      // a_m = sign * a_B a_rest and a_B = sum_k (-1)^k a_h a_{B - b_k} (k from 0).
      Monomial reordered = b;
      reordered.insert(reordered.end(), rest.begin(), rest.end());
      const int outer = sort_with_sign(reordered);
      SparseVector out;
      for (std::size_t k = 0; k < b.size(); ++k) {
        Monomial term{h};
        for (std::size_t l = 0; l < b.size(); ++l)
          if (l != k) term.push_back(b[l]);
        term.insert(term.end(), rest.begin(), rest.end());
        const int s = sort_with_sign(term);
        if (s == 0) throw StraighteningFailure("circuit relation produced a repeated hyperplane");
        auto it = normal_form_.find(term);
        if (it == normal_form_.end() || !(term < m))
          throw StraighteningFailure("circuit relation left the independent monomials");
        add_scaled(out, it->second, Rational(outer * s * (k % 2 == 0 ? 1 : -1)));
      }
      normal_form_[m] = std::move(out);
    }
  }
  // Brieskorn: dim A(W) = |W|.
  if (total_dimension() != group()->size())
    throw StraighteningFailure("NBC basis has the wrong total dimension");
}

std::size_t OSAlgebra::total_dimension() const {
  std::size_t d = 0;
  for (const auto& b : basis_) d += b.size();
  return d;
}

std::size_t OSAlgebra::basis_index(const Monomial& m) const {
  auto it = basis_index_.find(m);
  if (it == basis_index_.end()) throw Error("monomial is not an NBC basis element");
  return it->second;
}

SparseVector OSAlgebra::expand(const std::vector<int>& hs) const {
  Monomial m = hs;
  const int s = sort_with_sign(m);
  if (s == 0) return {};
  auto it = normal_form_.find(m);
  if (it == normal_form_.end()) return {};  // dependent
  SparseVector out = it->second;
  if (s < 0)
    for (auto& [i, c] : out) c = -c;
  return out;
}

SparseVector OSAlgebra::act(int p, std::size_t i, Element w) const {
  std::vector<int> hs;
  for (int h : basis_.at(p)[i]) hs.push_back(arrangement_->act(h, w));
  return expand(hs);
}

Vector<Rational> OSAlgebra::dense(int p, const SparseVector& v) const {
  Vector<Rational> out(dimension(p));
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

std::vector<std::size_t> OSAlgebra::component(std::size_t x) const {
  const int p = lattice_.flats()[x].rank;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_flat_[p].size(); ++i)
    if (basis_flat_[p][i] == x) out.push_back(i);
  return out;
}

ClassFunction OSAlgebra::component_character(const std::vector<std::size_t>& flats, const Subgroup& acting) const {
  for (Element s : acting.generators())
    for (std::size_t x : flats)
      if (std::find(flats.begin(), flats.end(), lattice_.act(x, s)) == flats.end())
        throw Error("flats are not permuted by the acting group");
  std::vector<std::pair<int, std::size_t>> monomials;
  for (std::size_t x : flats)
    for (std::size_t i : component(x)) monomials.emplace_back(lattice_.flats()[x].rank, i);
  return ClassFunction::from_representatives(acting, [&](Element w) {
    Rational tr(0);
    for (const auto& [p, i] : monomials) {
      const auto img = act(p, i, w);
      if (auto it = img.find(i); it != img.end()) tr += it->second;
    }
    return Cyclotomic(tr);
  });
}

ClassFunction OSAlgebra::degree_character(int p) const {
  std::vector<std::size_t> flats;
  for (std::size_t x = 0; x < lattice_.size(); ++x)
    if (lattice_.flats()[x].rank == p) flats.push_back(x);
  return component_character(flats, Subgroup::whole(group()));
}

ClassFunction OSAlgebra::character() const {
  std::vector<std::size_t> flats(lattice_.size());
  std::iota(flats.begin(), flats.end(), 0);
  return component_character(flats, Subgroup::whole(group()));
}

std::vector<ClassFunction> psi_lambda(const OSAlgebra& a) {
  const auto count = shapes(*a.group()).size();
  std::vector<std::vector<std::size_t>> orbits(count);
  for (std::size_t x = 0; x < a.lattice().size(); ++x) orbits[a.lattice().flats()[x].shape].push_back(x);
  std::vector<ClassFunction> out;
  for (const auto& orbit : orbits) out.push_back(a.component_character(orbit, Subgroup::whole(a.group())));
  return out;
}

ClassFunction psi_top(const GroupPtr& g, Subset L) {
  const auto local = StandaloneParabolic::of(*g, L);
  const auto a = OSAlgebra::build(local.group, {}, local.group->rank());
  const auto psi = a.component_character({a.lattice().fixed_flat(local.group->all_generators())},
                                         Subgroup::whole(local.group));
  return ClassFunction::from_representatives(Subgroup::parabolic(g, L),
                                             [&](Element w) { return psi(local.localize(*g, w)); });
}

ClassFunction psi_tilde(const OSAlgebra& a, Subset L) {
  return a.component_character({a.lattice().fixed_flat(L)}, normalizer_of_parabolic(a.group(), L));
}

DihedralLabels DihedralLabels::of(const OSAlgebra& a) {
  const auto& g = *a.group();
  if (g.rank() != 2) throw UnsupportedCase("dihedral labels need a rank 2 group");
  DihedralLabels d;
  d.m = g.matrix()(0, 1);
  const Element st = g.multiply(g.generator(0), g.generator(1));
  Element x = g.generator(0);
  for (int j = 0; j < d.m; ++j) {
    d.hyperplane.push_back(a.arrangement().index_of(x));
    x = g.multiply(st, x);
  }
  return d;
}

Vector<Rational> DihedralLabels::product(const OSAlgebra& a, int j, int k) const {
  auto mod = [&](int i) { return hyperplane[((i % m) + m) % m]; };
  return a.dense(2, a.expand({mod(j), mod(k)}));
}

Vector<Rational> DihedralLabels::b(const OSAlgebra& a, int j) const {
  Vector<Rational> b0(a.dimension(2));
  for (int i = 1; i < m; ++i) {
    const auto v = product(a, 0, i);
    for (std::size_t k = 0; k < v.size(); ++k) b0[k] -= v[k] / m;
  }
  if (j % m == 0) return b0;
  auto v = product(a, 0, j);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += b0[k];
  return v;
}

}  // namespace coxsol
