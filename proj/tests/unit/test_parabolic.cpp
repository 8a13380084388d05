#include <algorithm>
#include <set>

#include "coxsol/characters.hpp"
#include "coxsol/errors.hpp"
#include "coxsol/parabolic.hpp"
#include "support.hpp"

using namespace coxsol;
using testing::dihedral;
using testing::group;

namespace {

// Word length by breadth-first search in the Cayley graph.
std::vector<int> bfs_lengths(const CoxeterGroup& g) {
  std::vector<int> d(g.size(), -1);
  std::vector<Element> queue{g.identity()};
  d[g.identity()] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int i = 0; i < g.rank(); ++i) {
      const Element y = g.multiply(g.generator(i), queue[k]);
      if (d[y] < 0) {
        d[y] = d[queue[k]] + 1;
        queue.push_back(y);
      }
    }
  return d;
}

std::vector<Element> naive_transversal(const CoxeterGroup& g, Subset J) {
  const auto len = bfs_lengths(g);
  std::vector<Element> out;
  for (Element w = 0; w < g.size(); ++w) {
    bool ok = true;
    for (int j : subset_members(J))
      if (len[g.multiply(g.generator(j), w)] < len[w]) ok = false;
    if (ok) out.push_back(w);
  }
  return out;
}

std::set<Element> conjugated_set(const CoxeterGroup& g, Subset J, Element x) {
  std::set<Element> out;
  for (int j : subset_members(J)) out.insert(g.conjugate(g.generator(j), x));
  return out;
}

std::set<Element> generator_set(const CoxeterGroup& g, Subset K) {
  std::set<Element> out;
  for (int k : subset_members(K)) out.insert(g.generator(k));
  return out;
}

std::vector<std::set<Element>> naive_classes(const CoxeterGroup& g) {
  std::vector<std::set<Element>> out;
  std::vector<char> done(g.size(), 0);
  for (Element w = 0; w < g.size(); ++w) {
    if (done[w]) continue;
    std::set<Element> c;
    for (Element x = 0; x < g.size(); ++x) c.insert(g.conjugate(w, x));
    for (Element y : c) done[y] = 1;
    out.push_back(c);
  }
  return out;
}

const char* kGroups[] = {"A1", "A2", "A3", "B3", "H3", "I2(2)", "I2(4)", "I2(5)", "I2(6)", "I2(12)", "A1xI2(5)"};

}  // namespace

TEST_CASE("coset transversals") {
  auto g = dihedral(3);
  const Subset s = 1, S = 3;
  CHECK(min_coset_transversal(*g, S) == std::vector<Element>{g->identity()});
  CHECK(min_coset_transversal(*g, 0).size() == 6);
  std::vector<Element> expected{g->identity(), g->from_word({1}), g->from_word({1, 0})};
  std::sort(expected.begin(), expected.end());
  CHECK(min_coset_transversal(*g, s) == expected);

  CHECK(transversal_sharp(*dihedral(4), 1).size() == 2);
  CHECK(transversal_sharp(*dihedral(7), 0).size() == 14);
  CHECK(transversal_sharp(*dihedral(7), 3) == std::vector<Element>{0});

  for (const char* name : kGroups) {
    auto h = group(name);
    for (Subset J : all_subsets(h->rank())) {
      const auto x = min_coset_transversal(*h, J);
      CHECK(x == naive_transversal(*h, J));
      const auto wj = Subgroup::parabolic(h, J);
      CHECK(x.size() * wj.size() == h->size());
      // one element per coset W_J w, of minimal length
      std::set<std::vector<Element>> cosets;
      for (Element w : x) {
        std::vector<Element> c;
        for (Element u : wj.elements()) {
          c.push_back(h->multiply(u, w));
          if (u != h->identity()) CHECK(h->length(h->multiply(u, w)) > h->length(w));
        }
        std::sort(c.begin(), c.end());
        cosets.insert(c);
      }
      CHECK(cosets.size() == x.size());
      // X_J^# from the definition
      std::vector<Element> sharp;
      for (Element w : x) {
        auto c = conjugated_set(*h, J, w);
        bool in_s = std::all_of(c.begin(), c.end(), [&](Element y) { return h->generator_index(y) >= 0; });
        if (in_s) sharp.push_back(w);
      }
      CHECK(transversal_sharp(*h, J) == sharp);
    }
  }
}

TEST_CASE("shapes") {
  CHECK(shapes(*dihedral(6)).size() == 4);
  CHECK(shapes(*dihedral(2)).size() == 4);
  CHECK(shapes(*dihedral(9)).size() == 3);
  CHECK(shape_of(*group("A3"), 0).members == std::vector<Subset>{0});
  for (const char* name : kGroups) {
    auto h = group(name);
    const auto all = shapes(*h);
    std::size_t total = 0;
    for (const auto& s : all) {
      total += s.members.size();
      CHECK(s.representative == s.members.front());
      for (Subset K : s.members) CHECK(shape_of(*h, K).members == s.members);
    }
    CHECK(total == (std::size_t{1} << h->rank()));
    // J ~ K iff some w conjugates the reflections of J onto those of K
    for (Subset J : all_subsets(h->rank()))
      for (Subset K : all_subsets(h->rank())) {
        bool conj = false;
        for (Element w = 0; w < h->size() && !conj; ++w) conj = conjugated_set(*h, J, w) == generator_set(*h, K);
        const auto mem = shape_of(*h, J).members;
        CHECK(conj == (std::find(mem.begin(), mem.end(), K) != mem.end()));
      }
  }
}

TEST_CASE("conjugacy classes and centralizers") {
  for (const char* name : kGroups) {
    auto h = group(name);
    const auto classes = conjugacy_classes(h);
    const auto naive = naive_classes(*h);
    REQUIRE(classes.size() == naive.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      CHECK(std::set<Element>(c.members.begin(), c.members.end()) == naive[i]);
      total += c.members.size();
      for (Element y : c.members) {
        CHECK(h->length(y) >= h->length(c.representative));
        if (h->length(y) == h->length(c.representative)) CHECK(h->word(y) >= h->word(c.representative));
      }
      const auto cent = centralizer(h, c.representative);
      std::vector<Element> naive_cent;
      for (Element x = 0; x < h->size(); ++x)
        if (h->multiply(x, c.representative) == h->multiply(c.representative, x)) naive_cent.push_back(x);
      CHECK(cent.elements() == naive_cent);
      CHECK(cent.size() * c.members.size() == h->size());
    }
    CHECK(total == h->size());
  }
  CHECK(conjugacy_classes(dihedral(9)).size() == 6);
  CHECK(centralizer(dihedral(8), dihedral(8)->longest_element()).size() == 16);
  auto g = dihedral(7);
  CHECK(centralizer(g, g->from_word({0, 1, 0, 1})).elements() == rotation_subgroup(g).elements());
  CHECK(centralizer(g, g->identity()).size() == g->size());
}

TEST_CASE("cuspidal classes") {
  for (int m = 2; m <= 12; ++m) {
    auto g = dihedral(m);
    const auto cusp = cuspidal_classes(Subgroup::whole(g));
    CHECK(cusp.size() == static_cast<std::size_t>(m / 2));
    const Element st = g->multiply(g->generator(0), g->generator(1));
    for (const auto& c : cusp) {
      bool is_rotation = false;
      Element x = st;
      for (int j = 1; j < m; ++j, x = g->multiply(x, st))
        if (std::find(c.members.begin(), c.members.end(), x) != c.members.end()) is_rotation = true;
      CHECK(is_rotation);
      CHECK(fixed_space(*g, c.representative).dimension() == 0);
    }
  }
  auto a1 = group("A1");
  const auto c1 = cuspidal_classes(Subgroup::whole(a1));
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].representative == a1->generator(0));
  auto h = group("H3");
  const auto trivial = cuspidal_classes(Subgroup::parabolic(h, 0));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].representative == h->identity());
}

TEST_CASE("normalizers and complements") {
  CHECK(normalizer_complement(dihedral(5), 3).size() == 1);
  CHECK(normalizer_complement(dihedral(6), 1).size() == 2);
  CHECK(normalizer_complement(group("A3"), 3).size() == 1);
  for (const char* name : kGroups) {
    auto h = group(name);
    for (Subset J : all_subsets(h->rank())) {
      const auto wj = Subgroup::parabolic(h, J);
      const auto nj = normalizer_complement(h, J);
      const auto norm = normalizer_of_parabolic(h, J);
      CHECK(norm.size() == wj.size() * nj.size());
      CHECK(intersect(wj, nj).size() == 1);
      std::set<Element> products;
      for (Element u : wj.elements())
        for (Element n : nj.elements()) products.insert(h->multiply(u, n));
      CHECK(std::vector<Element>(products.begin(), products.end()) == norm.elements());
      CHECK(stabilizer(h, parabolic_fixed_space(*h, J)).elements() == norm.elements());
      for (Element n : nj.elements()) CHECK(conjugate_subset(*h, J, n) == J);
      if (subset_size(J) <= 1) CHECK(is_bulky(h, J));
      // sigma = epsilon * alpha on N_J
      const auto alpha = alpha_J(h, J);
      for (Element n : nj.elements()) CHECK(Cyclotomic(sigma_J(*h, J, n)) == Cyclotomic(h->sign(n)) * alpha(n));
      for (Element u : wj.elements()) CHECK(alpha(u).is_one());
      // cuspidal w in W_J: |C_W(w)| / |C_{W_J}(w)| = |N_J|
      for (const auto& c : cuspidal_classes(wj))
        CHECK(centralizer(h, c.representative).size() == centralizer(wj, c.representative).size() * nj.size());
    }
  }
  auto a3 = group("A3");
  CHECK(!is_bulky(a3, 5));
  const auto n13 = normalizer_complement(a3, 5);
  bool saw_swap = false;
  for (Element n : n13.elements())
    if (n != a3->identity()) saw_swap = saw_swap || sigma_J(*a3, 5, n) == -1;
  CHECK(saw_swap);
  CHECK_THROWS_AS(sigma_J(*a3, 5, a3->generator(0)), NotInComplement);
  CHECK(sigma_J(*a3, 1, a3->identity()) == 1);
}

TEST_CASE("fixed spaces") {
  auto g = group("H3");
  CHECK(fixed_space(*g, g->identity()).dimension() == 3);
  CHECK(fixed_space(*g, g->generator(0)).dimension() == 2);
  CHECK(parabolic_fixed_space(*g, 3).dimension() == 1);
  CHECK(parabolic_fixed_space(*g, 7).dimension() == 0);
  auto d = dihedral(5);
  CHECK(fixed_space(*d, d->multiply(d->generator(0), d->generator(1))).dimension() == 0);
}
