#include "coxsol/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "coxsol/errors.hpp"

namespace coxsol {

namespace {

constexpr std::size_t kTableLimit = 1500;

}  // namespace

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries) : m_(std::move(entries)) {
  const std::size_t r = m_.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (m_[i].size() != r) throw InvalidMatrix("Coxeter matrix is not square");
    if (m_[i][i] != 1) throw InvalidMatrix("Coxeter matrix diagonal must be 1");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (m_[i][j] != m_[j][i]) throw InvalidMatrix("Coxeter matrix is not symmetric");
      if (m_[i][j] < 2) throw InvalidMatrix("off-diagonal Coxeter matrix entries must be >= 2");
    }
  }
  if (r > 31) throw InvalidMatrix("rank too large");
}

CoxeterMatrix CoxeterMatrix::type_A(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 3;
  }
  return CoxeterMatrix(std::move(m));
}

CoxeterMatrix CoxeterMatrix::type_B(int n) {
  auto m = type_A(n).m_;
  if (n >= 2) m[0][1] = m[1][0] = 4;
  return CoxeterMatrix(std::move(m));
}

CoxeterMatrix CoxeterMatrix::type_H3() {
  return CoxeterMatrix({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
}

CoxeterMatrix CoxeterMatrix::dihedral(int m) {
  return CoxeterMatrix({{1, m}, {m, 1}});
}

CoxeterMatrix CoxeterMatrix::product(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  const int r = a.rank() + b.rank();
  std::vector<std::vector<int>> m(r, std::vector<int>(r, 2));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) m[i][j] = a(i, j);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) m[a.rank() + i][a.rank() + j] = b(i, j);
  return CoxeterMatrix(std::move(m));
}

CoxeterMatrix CoxeterMatrix::restrict_to(Subset J) const {
  const auto idx = subset_members(J);
  std::vector<std::vector<int>> m(idx.size(), std::vector<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m[i][j] = m_[idx[i]][idx[j]];
  return CoxeterMatrix(std::move(m));
}

std::shared_ptr<const CoxeterGroup> CoxeterGroup::build(const CoxeterMatrix& matrix,
                                                        std::size_t max_elements) {
  std::shared_ptr<CoxeterGroup> g(new CoxeterGroup());
  g->matrix_ = matrix;
  const int r = matrix.rank();

  unsigned l = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j) l = std::lcm(l, static_cast<unsigned>(matrix(i, j)));
  g->conductor_ = 2 * l;
  const unsigned n = g->conductor_;

  // B(a_i, a_j) = -cos(pi / m_ij) = -(zeta_2m + zeta_2m^-1) / 2
  g->gram_ = Matrix<Cyclotomic>(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) {
        g->gram_(i, j) = Cyclotomic(1).lift(n);
        continue;
      }
      const unsigned two_m = 2 * static_cast<unsigned>(matrix(i, j));
      Cyclotomic c = (Cyclotomic::zeta(two_m, 1) + Cyclotomic::zeta(two_m, -1)) * Cyclotomic(Rational(-1, 2));
      g->gram_(i, j) = c.lift(n);
    }

  auto reflect = [&](int i, const Vector<Cyclotomic>& v) {
    Cyclotomic b = Cyclotomic(0).lift(n);
    for (int j = 0; j < r; ++j) b += g->gram_(i, j) * v[j];
    Vector<Cyclotomic> out = v;
    out[i] -= Cyclotomic(2) * b;
    return out;
  };

  // Positive roots: s_i permutes the positive roots other than a_i.
  std::map<Vector<Cyclotomic>, std::size_t> root_index;
  std::vector<Vector<Cyclotomic>> positive;
  for (int i = 0; i < r; ++i) {
    Vector<Cyclotomic> e(r, Cyclotomic(0).lift(n));
    e[i] = Cyclotomic(1).lift(n);
    root_index.emplace(e, positive.size());
    positive.push_back(e);
  }
  for (std::size_t k = 0; k < positive.size(); ++k) {
    for (int i = 0; i < r; ++i) {
      if (k == static_cast<std::size_t>(i)) continue;
      Vector<Cyclotomic> v = reflect(i, positive[k]);
      if (root_index.count(v)) continue;
      if (positive.size() >= max_elements)
        throw InfiniteOrTooLarge("root system exceeds the enumeration bound; group infinite or too large");
      root_index.emplace(v, positive.size());
      positive.push_back(std::move(v));
    }
  }
  const std::size_t N = positive.size();
  if (2 * N >= 65535) throw InfiniteOrTooLarge("root system too large for permutation storage");
  g->num_positive_ = N;
  g->roots_ = positive;
  for (const auto& v : positive) {
    Vector<Cyclotomic> neg;
    neg.reserve(v.size());
    for (const auto& c : v) neg.push_back(-c);
    g->roots_.push_back(std::move(neg));
  }
  for (std::size_t k = N; k < 2 * N; ++k) root_index.emplace(g->roots_[k], k);

  // Generator permutations of the roots.
  const std::size_t R = 2 * N;
  std::vector<std::vector<std::uint16_t>> gen_perm(r, std::vector<std::uint16_t>(R));
  for (int i = 0; i < r; ++i)
    for (std::size_t k = 0; k < R; ++k) {
      auto it = root_index.find(reflect(i, g->roots_[k]));
      if (it == root_index.end()) throw InfiniteOrTooLarge("root system not closed under reflections");
      gen_perm[i][k] = static_cast<std::uint16_t>(it->second);
    }

  // Breadth-first enumeration w -> w s_i in shortlex order.
  std::vector<std::uint16_t> id(R);
  std::iota(id.begin(), id.end(), 0);
  auto key_of = [&](const std::uint16_t* perm) {
    std::vector<std::uint16_t> key(r);
    for (int i = 0; i < r; ++i) key[i] = perm[i];
    return key;
  };
  g->perms_.insert(g->perms_.end(), id.begin(), id.end());
  g->lengths_.push_back(0);
  g->words_.push_back({});
  g->index_.emplace(key_of(id.data()), 0);
  std::vector<std::uint16_t> next(R);
  for (std::size_t w = 0; w < g->lengths_.size(); ++w) {
    for (int i = 0; i < r; ++i) {
      const std::uint16_t* pw = &g->perms_[w * R];
      if (!g->is_positive_root(pw[i])) continue;  // w s_i is shorter
      for (std::size_t k = 0; k < R; ++k) next[k] = pw[gen_perm[i][k]];
      auto key = key_of(next.data());
      if (g->index_.count(key)) continue;
      if (g->lengths_.size() >= max_elements)
        throw InfiniteOrTooLarge("group exceeds the enumeration bound of " + std::to_string(max_elements) +
                                 " elements");
      const Element id_new = static_cast<Element>(g->lengths_.size());
      g->index_.emplace(std::move(key), id_new);
      Word word = g->words_[w];
      word.push_back(i);
      g->words_.push_back(std::move(word));
      g->lengths_.push_back(g->lengths_[w] + 1);
      g->perms_.insert(g->perms_.end(), next.begin(), next.end());
    }
  }

  const std::size_t size = g->lengths_.size();
  g->generators_.resize(r);
  for (int i = 0; i < r; ++i) g->generators_[i] = g->lookup(key_of(gen_perm[i].data()));

  g->inverses_.resize(size);
  std::vector<std::uint16_t> inv(R);
  for (std::size_t w = 0; w < size; ++w) {
    const std::uint16_t* pw = &g->perms_[w * R];
    for (std::size_t k = 0; k < R; ++k) inv[pw[k]] = static_cast<std::uint16_t>(k);
    g->inverses_[w] = g->lookup(key_of(inv.data()));
  }
  g->longest_ = static_cast<Element>(size - 1);

  if (size <= kTableLimit) {
    g->table_.resize(size * size);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) {
        const std::uint16_t* pa = &g->perms_[a * R];
        const std::uint16_t* pb = &g->perms_[b * R];
        std::vector<std::uint16_t> key(r);
        for (int i = 0; i < r; ++i) key[i] = pa[pb[i]];
        g->table_[a * size + b] = g->lookup(key);
      }
  }

  // Reflections: the unique positive root a reflection negates.
  g->root_reflection_.assign(N, 0);
  for (std::size_t w = 0; w < size; ++w) {
    if (g->lengths_[w] % 2 == 0) continue;
    const std::uint16_t* pw = &g->perms_[w * R];
    if (g->inverses_[w] != w) continue;
    std::size_t negated = 0, root = 0;
    for (std::size_t k = 0; k < N; ++k)
      if (pw[k] == g->negative_of(k)) {
        ++negated;
        root = k;
      }
    if (negated != 1) continue;
    g->reflections_.push_back(static_cast<Element>(w));
    g->reflection_root_.emplace(static_cast<Element>(w), root);
    g->root_reflection_[root] = static_cast<Element>(w);
  }
  return g;
}

Element CoxeterGroup::lookup(const std::vector<std::uint16_t>& simple_images) const {
  auto it = index_.find(simple_images);
  if (it == index_.end()) throw Error("internal: permutation is not a group element");
  return it->second;
}

Element CoxeterGroup::multiply(Element a, Element b) const {
  const std::size_t n = size();
  if (!table_.empty()) return table_[a * n + b];
  const std::size_t R = roots_.size();
  std::vector<std::uint16_t> key(rank());
  for (int i = 0; i < rank(); ++i) key[i] = perms_[a * R + perms_[b * R + i]];
  return lookup(key);
}

Element CoxeterGroup::from_word(const Word& word) const {
  Element w = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) throw Error("generator index out of range in word");
    w = multiply(w, generators_[i]);
  }
  return w;
}

int CoxeterGroup::generator_index(Element w) const {
  for (int i = 0; i < rank(); ++i)
    if (generators_[i] == w) return i;
  return -1;
}

Matrix<Cyclotomic> CoxeterGroup::representation(Element w) const {
  const int r = rank();
  Matrix<Cyclotomic> m(r, r);
  for (int j = 0; j < r; ++j) {
    const auto& img = roots_[act_on_root(w, j)];
    for (int i = 0; i < r; ++i) m(i, j) = img[i];
  }
  return m;
}

std::string CoxeterGroup::word_string(Element w) const { return word_label(words_[w]); }

std::vector<int> subset_members(Subset J) {
  std::vector<int> out;
  for (int i = 0; J != 0; ++i, J >>= 1)
    if (J & 1u) out.push_back(i);
  return out;
}

bool subset_less(Subset a, Subset b) {
  const int ca = subset_size(a), cb = subset_size(b);
  if (ca != cb) return ca < cb;
  return subset_members(a) < subset_members(b);
}

std::vector<Subset> all_subsets(int rank) {
  std::vector<Subset> out;
  for (Subset J = 0; J < (Subset{1} << rank); ++J) out.push_back(J);
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

std::string subset_label(Subset J) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : subset_members(J)) {
    if (!first) os << ",";
    os << "s" << i + 1;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string word_label(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ".";
    os << "s" << w[k] + 1;
  }
  return os.str();
}

Element transport(const CoxeterGroup& from, Element w, const CoxeterGroup& to, const std::vector<int>& generator_map) {
  Word word;
  for (int i : from.word(w)) word.push_back(generator_map.at(i));
  return to.from_word(word);
}

StandaloneParabolic StandaloneParabolic::of(const CoxeterGroup& ambient, Subset L) {
  StandaloneParabolic p;
  p.group = CoxeterGroup::build(ambient.matrix().restrict_to(L));
  p.to_local.assign(ambient.rank(), -1);
  const auto members = subset_members(L);
  for (std::size_t i = 0; i < members.size(); ++i) p.to_local[members[i]] = static_cast<int>(i);
  return p;
}

}  // namespace coxsol
