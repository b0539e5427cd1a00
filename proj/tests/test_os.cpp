#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrtop/gm.hpp"
#include "arrtop/os.hpp"
#include "oracles.hpp"

using namespace arrtop;

namespace {

OSElement mono(std::initializer_list<std::size_t> s, long c = 1) { return {{Monomial(s), Rational(c)}}; }

OSElement plus(OSElement a, const OSElement& b, long s = 1) {
  for (const auto& [k, v] : b) {
    a[k] += s * v;
    if (a[k] == 0) a.erase(k);
  }
  return a;
}

std::vector<long> trimmed(std::vector<long> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

TEST_CASE("circuits of standard arrangements") {
  CHECK(circuits(diagonal_arrangement(3, 2)) == std::vector<Monomial>{{0, 1, 2}});
  auto c = circuits(diagonal_arrangement(4, 2));
  std::size_t triples = 0, quads = 0;
  for (const auto& x : c) (x.size() == 3 ? triples : quads) += 1;
  CHECK(triples == 4);
  CHECK(quads == 3);
  CHECK(c.size() == 7);
  Arrangement gen = hyperplanes_from_ints(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}}, Field::QI);
  auto g = circuits(gen);
  CHECK(g.size() == 4);
  for (const auto& x : g) CHECK(x.size() == 3);
}

TEST_CASE("non-central and non-hyperplane inputs are rejected") {
  CHECK_THROWS_AS(os_algebra(hyperplanes_from_ints(1, {{1, 0}, {1, 1}}, Field::QI)), std::invalid_argument);
  CHECK_THROWS_AS(os_algebra(diagonal_arrangement(4, 3)), std::invalid_argument);
  std::vector<std::vector<long>> rows;
  for (long i = 1; i <= 11; ++i) rows.push_back({1, i, 0});
  CHECK_THROWS_AS(os_algebra(hyperplanes_from_ints(2, rows, Field::QI)), SizeLimitError);
}

TEST_CASE("graded dimensions") {
  CHECK(os_algebra(diagonal_arrangement(3, 2)).dims == std::vector<std::size_t>{1, 3, 2});
  CHECK(os_poincare_polynomial(diagonal_arrangement(4, 2)) == std::vector<long>{1, 6, 11, 6});
  CHECK(os_poincare_polynomial(hyperplanes_from_ints(1, {{1, 0}}, Field::QI)) == std::vector<long>{1, 1});
  Arrangement gen = hyperplanes_from_ints(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}}, Field::QI);
  CHECK(os_poincare_polynomial(gen) == std::vector<long>{1, 4, 3});
}

TEST_CASE("products in the algebra") {
  OSAlgebra a32 = os_algebra(diagonal_arrangement(3, 2));
  CHECK(os_product(mono({0}), mono({0}), a32).empty());
  // α12 α23 + α23 α31 + α31 α12 with α12 = e0, α13 = e1, α23 = e2.
  OSElement s = os_product(mono({0}), mono({2}), a32);
  s = plus(s, os_product(mono({2}), mono({1}), a32));
  s = plus(s, os_product(mono({1}), mono({0}), a32));
  CHECK(s.empty());
  OSAlgebra g = os_algebra(hyperplanes_from_ints(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, Field::QI));
  OSElement r = plus(plus(mono({0, 1}), mono({0, 2}), -1), mono({1, 2}));
  CHECK(os_normal_form(r, g).empty());
  CHECK_FALSE(os_normal_form(mono({0, 1}), g).empty());
}

TEST_CASE("the basis is the lexicographically first set of monomials") {
  OSAlgebra a = os_algebra(diagonal_arrangement(3, 2));
  CHECK(a.basis(2) == std::vector<Monomial>{{0, 1}, {0, 2}});
}

TEST_CASE("dimensions agree with Whitney, Mobius sums, and the GM pipeline") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 3, m = 3 + trial % 4;
    Arrangement a = oracle::random_hyperplanes(rng, n, m, Field::QI, true, 1);
    std::vector<long> os = os_poincare_polynomial(a);
    CHECK(trimmed(os) == oracle::whitney_poincare(a));
    IntersectionPoset p(a);
    std::vector<long> mob(os.size(), 0);
    mob[0] = 1;
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p.node(x).codim < mob.size()) mob[p.node(x).codim] += std::labs(p.mobius(x));
    CHECK(mob == os);
    if (trial < 5) {
      std::vector<long> gm;
      for (auto b : gm_report(a).betti()) gm.push_back(static_cast<long>(b));
      CHECK(trimmed(gm) == trimmed(os));
    }
  }
}

TEST_CASE("all dependent sets generate the same ideal") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    Arrangement a = oracle::random_hyperplanes(rng, 3, 4 + trial % 3, Field::QI, true, 1);
    CHECK(os_algebra(a).dims == os_algebra(a, true).dims);
  }
}

TEST_CASE("anticommutativity and associativity on random monomials") {
  OSAlgebra a = os_algebra(diagonal_arrangement(4, 2));
  std::mt19937 rng(17);
  auto random_element = [&](std::size_t deg) {
    OSElement x;
    for (int k = 0; k < 3; ++k) {
      auto all = k_subsets(6, deg);
      auto s = all[rng() % all.size()];
      x[Monomial(s.begin(), s.end())] += static_cast<long>(rng() % 5) - 2;
    }
    return os_normal_form(x, a);
  };
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t da = 1 + trial % 2, db = 1;
    OSElement x = random_element(da), y = random_element(db), z = random_element(1);
    const long sign = (da * db) % 2 == 0 ? 1 : -1;
    CHECK(plus(os_product(x, y, a), os_product(y, x, a), -sign).empty());
    CHECK(os_product(os_product(x, y, a), z, a) == os_product(x, os_product(y, z, a), a));
  }
}

TEST_CASE("coning an affine arrangement multiplies the polynomial by 1 + t") {
  Arrangement gen = hyperplanes_from_ints(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}, Field::QI);
  Arrangement c = cone(gen);
  CHECK(c.is_central());
  CHECK(c.ambient_dim() == 3);
  CHECK(os_poincare_polynomial(c) == std::vector<long>{1, 4, 6, 3});
  CHECK(decone_polynomial({1, 4, 6, 3}) == std::vector<long>{1, 3, 3});
  CHECK_THROWS(decone_polynomial({1, 1, 1}));
}

TEST_CASE("exterior multiplication of monomials") {
  CHECK(wedge({0}, {1}) == std::pair<int, Monomial>{1, {0, 1}});
  CHECK(wedge({1}, {0}) == std::pair<int, Monomial>{-1, {0, 1}});
  CHECK(wedge({0, 2}, {1}).first == -1);
  CHECK(wedge({0, 1}, {1}).first == 0);
  OSElement b = os_boundary({0, 1, 2});
  CHECK(b == OSElement{{{1, 2}, 1}, {{0, 2}, -1}, {{0, 1}, 1}});
}
