#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrtop/arrangement.hpp"
#include "oracles.hpp"

using namespace arrtop;

namespace {

Vector qrow(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("canonical subspaces ignore how the equations are written") {
  CanonicalSubspace a(3, Field::Q, {qrow({1, 1, 0, 2}), qrow({0, 1, 1, 1})});
  CanonicalSubspace b(3, Field::Q, {qrow({2, 4, 2, 6}), qrow({-1, 0, 1, -1})});
  CHECK(a == b);
  CHECK(a.key() == b.key());
  CHECK(a.dim() == 1);
  CanonicalSubspace empty(2, Field::Q, {qrow({1, 0, 0}), qrow({1, 0, 1})});
  CHECK(empty.is_empty());
  CHECK(CanonicalSubspace::ambient(3, Field::Q).dim() == 3);
}

TEST_CASE("containment and intersection") {
  CanonicalSubspace line(3, Field::Q, {qrow({1, 0, 0, 0}), qrow({0, 1, 0, 0})});
  CanonicalSubspace plane(3, Field::Q, {qrow({1, 0, 0, 0})});
  CHECK(line.contained_in(plane));
  CHECK_FALSE(plane.contained_in(line));
  CHECK(line.intersect(plane) == line);
  CHECK(line.contains_point(qrow({0, 0, 5})));
}

TEST_CASE("arrangement construction validates its input") {
  CHECK_THROWS_AS(Arrangement(2, Field::Q, {{"bad", {qrow({1, 0, 0}), qrow({1, 0, 1})}}}), InconsistentPlaneError);
  CHECK_THROWS(Arrangement(2, Field::Q, {{"whole", {qrow({0, 0, 0})}}}));
  CHECK_THROWS(Arrangement(2, Field::Q, {}));
  CHECK_THROWS(Arrangement(2, Field::Q, {{"short", {qrow({1, 0})}}}));
  Arrangement a(2, Field::Q, {{"", {qrow({1, 0, 0})}}, {"y", {qrow({0, 1, 0})}}});
  CHECK(a.label(0) == "L1");
  CHECK(a.label(1) == "y");
}

TEST_CASE("A(3,2) poset") {
  Arrangement a = diagonal_arrangement(3, 2);
  IntersectionPoset p(a);
  REQUIRE(p.size() == 4);
  auto top = p.node_of_generators(0b111);
  REQUIRE(top.has_value());
  CHECK(p.node(*top).dim == 1);
  CHECK(p.mobius(*top) == 2);
  CHECK(p.rank(*top) == 2);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(p.mobius(p.plane_node(i)) == -1);
    CHECK(p.less(p.plane_node(i), *top));
  }
  CHECK(p.covers().size() == 3);
}

TEST_CASE("Mobius values agree with Whitney's subset formula") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + trial % 3, m = 3 + trial % 4;
    Arrangement a = oracle::random_hyperplanes(rng, n, m, trial % 2 ? Field::QI : Field::Q, trial % 3 == 0);
    IntersectionPoset p(a);
    std::vector<long> chi(n + 1, 0);
    chi[n] = 1;
    for (std::size_t x = 0; x < p.size(); ++x) chi[p.node(x).dim] += p.mobius(x);
    CHECK(chi == oracle::characteristic_polynomial(a));
  }
}

TEST_CASE("interval Mobius function satisfies its defining recursion") {
  IntersectionPoset p(diagonal_arrangement(4, 2));
  for (std::size_t lo = 0; lo < p.size(); ++lo)
    for (std::size_t hi = 0; hi < p.size(); ++hi) {
      if (!p.less(lo, hi)) continue;
      long sum = p.mobius(lo, lo);
      for (std::size_t z = 0; z < p.size(); ++z)
        if (p.less(lo, z) && (z == hi || p.less(z, hi))) sum += p.mobius(lo, z);
      CHECK(sum == 0);
    }
}

TEST_CASE("dimension signature matches direct rank computations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 15; ++trial) {
    Arrangement a = oracle::random_hyperplanes(rng, 3, 5, Field::Q, false, 1);
    DimensionSignature sig = dimensional_data(a);
    for (std::uint32_t s = 1; s < 32; ++s) {
      int c = oracle::subset_codim(a, s);
      CHECK(sig.dims[s] == (c < 0 ? -1 : 3 - c));
    }
  }
}

TEST_CASE("crossing conditions") {
  CHECK(is_normal_crossings(coordinate_cross(3)));
  CHECK(is_generic(coordinate_cross(2)));
  CHECK(is_generic(oracle::parabola_tangents(5)));
  CHECK_FALSE(is_normal_crossings(diagonal_arrangement(3, 2)));
  Arrangement par = hyperplanes_from_ints(2, {{1, 0, 0}, {1, 0, 1}}, Field::Q);
  CHECK(is_normal_crossings(par));
  CHECK_FALSE(is_generic(par));
  for (std::size_t m = 2; m <= 6; ++m) CHECK(is_generic(oracle::moment_hyperplanes(3, m, Field::QI)));
}

TEST_CASE("realification doubles dimensions and keeps the combinatorics") {
  Arrangement c = diagonal_arrangement(4, 2);
  Arrangement r = realify(c);
  CHECK(r.ambient_dim() == 8);
  CHECK(r.complex_source() != nullptr);
  IntersectionPoset pc(c), pr(r);
  REQUIRE(pc.size() == pr.size());
  for (std::size_t i = 0; i < pc.size(); ++i) {
    auto j = pr.node_of_generators(pc.node(i).generators);
    REQUIRE(j.has_value());
    CHECK(pr.node(*j).dim == 2 * pc.node(i).dim);
  }
  CHECK(complexify(coordinate_cross(2)).field() == Field::QI);
}

TEST_CASE("size limits") {
  std::vector<std::vector<long>> rows;
  for (long i = 1; i <= 21; ++i) rows.push_back({1, i});
  CHECK_THROWS_AS(dimensional_data(hyperplanes_from_ints(1, rows, Field::Q)), SizeLimitError);
}

TEST_CASE("transversality and the ge2 condition") {
  IntersectionPoset p(coordinate_cross(2));
  CHECK(transversal(p, p.plane_node(0), p.plane_node(1)));
  CHECK_FALSE(transversal(p, p.plane_node(0), p.plane_node(0)));
  CHECK(is_ge2_arrangement(IntersectionPoset(realify(diagonal_arrangement(3, 2)))));
  CHECK_FALSE(is_ge2_arrangement(p));
}
