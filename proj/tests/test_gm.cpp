#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrtop/gm.hpp"
#include "oracles.hpp"

using namespace arrtop;

namespace {

std::vector<long> as_long(const std::vector<std::size_t>& v) {
  std::vector<long> out(v.begin(), v.end());
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::vector<long> braid_poincare(std::size_t n) {
  std::vector<long> p{1};
  for (long k = 1; k < static_cast<long>(n); ++k) {
    std::vector<long> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 1] += k * p[i];
    }
    p = q;
  }
  return p;
}

using Coords = std::map<std::size_t, Rational>;

Coords unit(std::size_t i) { return {{i, Rational(1)}}; }

Coords add(Coords a, const Coords& b, const Rational& s = 1) {
  for (const auto& [k, v] : b) {
    a[k] += s * v;
    if (a[k] == 0) a.erase(k);
  }
  return a;
}

}  // namespace

TEST_CASE("coordinate cross in the real plane") {
  GMReport r = gm_report(coordinate_cross(2));
  CHECK(r.totals.at(0).rank == 3);
  CHECK(r.totals.at(1).rank == 0);
  CHECK(r.betti() == std::vector<std::size_t>{4, 0});
}

TEST_CASE("braid arrangements") {
  for (std::size_t n = 3; n <= 4; ++n) CHECK(as_long(gm_report(diagonal_arrangement(n, 2)).betti()) == braid_poincare(n));
}

TEST_CASE("complex hyperplane complements match Whitney's formula and are torsion-free") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + trial % 2, m = 3 + trial % 3;
    Arrangement a = oracle::random_hyperplanes(rng, n, m, Field::QI, trial % 2 == 0, 1);
    GMReport r = gm_report(a);
    CHECK(as_long(r.betti()) == oracle::whitney_poincare(a));
    CHECK_FALSE(r.has_torsion());
  }
}

TEST_CASE("real complements: connected components are the regions") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    Arrangement a = oracle::random_hyperplanes(rng, 2 + trial % 2, 4, Field::Q, false, 2);
    GMReport r = gm_report(a);
    CHECK(static_cast<long>(r.betti()[0]) == oracle::zaslavsky_regions(a));
    for (std::size_t d = 1; d < r.betti().size(); ++d) CHECK(r.betti()[d] == 0);
  }
}

TEST_CASE("degree bookkeeping of contributions") {
  Arrangement a = diagonal_arrangement(4, 2);
  GMReport r = gm_report(a);
  IntersectionPoset p(realify(a));
  std::map<int, std::size_t> sum;
  for (const auto& c : r.contributions) {
    CHECK(c.degree + c.pair_degree + static_cast<int>(c.node_dim) + 1 == static_cast<int>(r.ambient_dim));
    CHECK(c.filtration == p.node(c.node).codim);
    sum[c.degree] += c.group.rank;
  }
  for (const auto& [d, g] : r.totals) CHECK(g.rank == sum[d]);
}

TEST_CASE("Folkman concentration on every node of central hyperplane arrangements") {
  std::mt19937 rng(8);
  std::vector<Arrangement> cases{diagonal_arrangement(4, 2), coordinate_cross(3)};
  for (int t = 0; t < 4; ++t) cases.push_back(oracle::random_hyperplanes(rng, 3, 5, Field::QI, true, 1));
  for (const auto& a : cases) {
    Arrangement real = real_form(a);
    IntersectionPoset p(real);
    for (std::size_t x = 0; x < p.size(); ++x) {
      HomologySummary h = homology(local_order_pair(p, x));
      const int want = static_cast<int>(p.rank(x)) - 1;
      for (const auto& [d, g] : h.degrees) {
        CHECK(g.torsion.empty());
        CHECK(g.rank == (d == want ? static_cast<std::size_t>(std::labs(p.mobius(x))) : 0u));
      }
    }
  }
}

TEST_CASE("order-complex cones are acyclic") {
  IntersectionPoset p(realify(diagonal_arrangement(4, 2)));
  for (std::size_t x = 0; x < p.size(); ++x) CHECK(homology(SimplicialPair{local_order_pair(p, x).total, {}}, true).is_zero());
}

TEST_CASE("naive pair at the line of A(3,2)") {
  Arrangement a = realify(diagonal_arrangement(3, 2));
  IntersectionPoset p(a);
  auto top = p.node_of_generators(0b111);
  REQUIRE(top.has_value());
  HomologySummary h = homology(naive_pair(a, p, *top));
  CHECK(h.rank(1) == 2);
  CHECK(h.rank(0) == 0);
}

TEST_CASE("wedge summaries are Alexander dual to the complement") {
  std::mt19937 rng(12);
  std::vector<Arrangement> cases{coordinate_cross(2), diagonal_arrangement(3, 2), hyperplanes_from_ints(2, {{1, 0, 0}}, Field::Q)};
  for (int t = 0; t < 4; ++t) cases.push_back(oracle::random_hyperplanes(rng, 2, 4, t % 2 ? Field::QI : Field::Q, false, 2));
  for (const auto& a : cases) CHECK(alexander_dual(wedge_summary(a), gm_report(a)));
  WedgeSummary w = wedge_summary(diagonal_arrangement(3, 2));
  std::vector<std::size_t> ranks;
  for (const auto& [d, g] : w.totals) ranks.push_back(g.rank);
  CHECK(ranks == std::vector<std::size_t>{0, 0, 0, 2, 3, 0});
}

TEST_CASE("shuffle products vanish off transversal pairs") {
  Arrangement a = realify(diagonal_arrangement(3, 2));
  IntersectionPoset p(a);
  auto frames = default_coorientations(a, p);
  const std::size_t top = *p.node_of_generators(0b111);
  GradedClass plane{p.plane_node(0), 0, {{Face{static_cast<std::uint32_t>(p.plane_node(0))}, 1}}};
  GradedClass line{top, 1, {{Face{static_cast<std::uint32_t>(p.plane_node(0)), static_cast<std::uint32_t>(top)}, 1}}};
  CHECK_FALSE(shuffle_product(plane, line, p, frames).has_value());

  Arrangement par = hyperplanes_from_ints(2, {{1, 0, 0}, {1, 0, 1}}, Field::Q);
  IntersectionPoset pp(par);
  auto pf = default_coorientations(par, pp);
  GradedClass c0{0, 0, {{Face{0}, 1}}}, c1{1, 0, {{Face{1}, 1}}};
  CHECK_FALSE(shuffle_product(c0, c1, pp, pf).has_value());
}

TEST_CASE("shuffle product of transversal hyperplane classes is a relative cycle") {
  Arrangement a = realify(oracle::moment_hyperplanes(2, 3, Field::QI));
  IntersectionPoset p(a);
  auto frames = default_coorientations(a, p);
  const std::size_t x = p.plane_node(0), y = p.plane_node(1);
  GradedClass cx{x, 0, {{Face{static_cast<std::uint32_t>(x)}, 1}}}, cy{y, 0, {{Face{static_cast<std::uint32_t>(y)}, 1}}};
  auto prod = shuffle_product(cx, cy, p, frames);
  REQUIRE(prod.has_value());
  CHECK(prod->chain.size() == 2);
  CHECK(is_relative_cycle(*prod, p));
  auto rev = shuffle_product(cy, cx, p, frames);
  REQUIRE(rev.has_value());
  for (const auto& [f, c] : prod->chain) CHECK(rev->chain.at(f) == -c);  // degree-one classes anticommute
}

TEST_CASE("ring table of two generic complex lines is an exterior algebra") {
  RingTable t = graded_ring_table(hyperplanes_from_ints(2, {{1, 0, 0}, {0, 1, 0}}, Field::QI));
  REQUIRE(t.basis.size() == 4);
  auto a = t.find(0b01, 1), b = t.find(0b10, 1), ab = t.find(0b11, 2);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  REQUIRE(ab.has_value());
  CHECK(t.multiply(unit(*a), unit(*a)).empty());
  Coords x = t.multiply(unit(*a), unit(*b)), y = t.multiply(unit(*b), unit(*a));
  REQUIRE(x.size() == 1);
  CHECK(x.begin()->first == *ab);
  CHECK(add(x, y).empty());
}

TEST_CASE("Arnold relation and ring laws in A(3,2)") {
  RingTable t = graded_ring_table(diagonal_arrangement(3, 2));
  REQUIRE(t.basis.size() == 6);
  auto w12 = t.find(0b001, 1), w13 = t.find(0b010, 1), w23 = t.find(0b100, 1);
  REQUIRE(w12.has_value());
  REQUIRE(w13.has_value());
  REQUIRE(w23.has_value());
  Coords s = t.multiply(unit(*w12), unit(*w23));
  s = add(s, t.multiply(unit(*w23), unit(*w13)));
  s = add(s, t.multiply(unit(*w13), unit(*w12)));
  CHECK(s.empty());
  CHECK_FALSE(t.multiply(unit(*w12), unit(*w23)).empty());
  for (std::size_t i = 0; i < t.basis.size(); ++i) {
    CHECK(t.multiply(unit(0), unit(i)) == unit(i));
    CHECK(t.multiply(unit(i), unit(0)) == unit(i));
    for (std::size_t j = 0; j < t.basis.size(); ++j) {
      const int sign = (t.basis[i].degree * t.basis[j].degree) % 2 == 0 ? 1 : -1;
      CHECK(add(t.multiply(unit(i), unit(j)), t.multiply(unit(j), unit(i)), -sign).empty());
      for (std::size_t k = 0; k < t.basis.size(); ++k)
        CHECK(t.multiply(t.multiply(unit(i), unit(j)), unit(k)) == t.multiply(unit(i), t.multiply(unit(j), unit(k))));
    }
  }
}

TEST_CASE("ring laws in A(4,2)") {
  RingTable t = graded_ring_table(diagonal_arrangement(4, 2));
  std::size_t rank_by_degree[4] = {0, 0, 0, 0};
  for (const auto& b : t.basis) ++rank_by_degree[b.degree];
  CHECK(rank_by_degree[1] == 6);
  CHECK(rank_by_degree[2] == 11);
  CHECK(rank_by_degree[3] == 6);
  for (std::size_t i = 1; i < t.basis.size(); ++i)
    for (std::size_t j = 1; j < t.basis.size(); ++j) {
      if (t.basis[i].degree + t.basis[j].degree > 3) continue;
      const int sign = (t.basis[i].degree * t.basis[j].degree) % 2 == 0 ? 1 : -1;
      CHECK(add(t.multiply(unit(i), unit(j)), t.multiply(unit(j), unit(i)), -sign).empty());
      for (std::size_t k = 1; k < t.basis.size(); ++k)
        if (t.basis[i].degree == 1 && t.basis[j].degree == 1 && t.basis[k].degree == 1)
          CHECK(t.multiply(t.multiply(unit(i), unit(j)), unit(k)) == t.multiply(unit(i), t.multiply(unit(j), unit(k))));
    }
}

TEST_CASE("ring tables depend only on dimension data for complex ge2 arrangements") {
  Arrangement a = diagonal_arrangement(3, 2);
  // A(3,2) pulled back along w = (z1 - i z2, z2, z3 / 2).
  std::vector<PlaneSpec> specs;
  const Scalar i = Scalar::parse("i", Field::QI), one = Scalar::one(Field::QI), zero = Scalar::zero(Field::QI);
  const Scalar half = Scalar(Rational(1, 2), Rational(0));
  specs.push_back({"", {{one, -i - one, zero, zero}}});
  specs.push_back({"", {{one, -i, -half, zero}}});
  specs.push_back({"", {{zero, one, -half, zero}}});
  Arrangement b(3, Field::QI, specs);
  REQUIRE(dimensional_data(a) == dimensional_data(b));
  // Linear relations among the products of labelled degree-one generators do
  // not depend on the basis chosen in degree two.
  auto relations = [](const Arrangement& arr) {
    RingTable t = graded_ring_table(arr);
    std::vector<std::size_t> deg2;
    for (std::size_t x = 0; x < t.basis.size(); ++x)
      if (t.basis[x].degree == 2) deg2.push_back(x);
    std::vector<Vector> cols;
    for (std::uint64_t u = 0; u < arr.size(); ++u)
      for (std::uint64_t v = 0; v < arr.size(); ++v) {
        Coords prod = t.multiply(unit(*t.find(1ull << u, 1)), unit(*t.find(1ull << v, 1)));
        Vector col;
        for (auto x : deg2) col.emplace_back(prod.count(x) ? prod[x] : Rational(0));
        cols.push_back(col);
      }
    Matrix mt = Matrix::from_rows(cols, deg2.size(), Field::Q);  // one row per product
    Matrix prod_matrix(deg2.size(), cols.size(), Field::Q);
    for (std::size_t r = 0; r < deg2.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) prod_matrix(r, c) = mt(c, r);
    return rref(Matrix::from_rows(kernel_basis(prod_matrix), cols.size(), Field::Q)).reduced;
  };
  Matrix ra = relations(a);
  CHECK(ra.rows() == 9 - 2);
  CHECK(ra == relations(b));
}

TEST_CASE("coorientation signs") {
  Arrangement a = coordinate_cross(2);
  IntersectionPoset p(a);
  auto frames = default_coorientations(a, p);
  const std::size_t x = p.plane_node(0), y = p.plane_node(1), k = *p.node_of_generators(0b11);
  CHECK(coorientation_sign(frames, x, y, k) == -coorientation_sign(frames, y, x, k));
  CHECK(std::abs(coorientation_sign(frames, x, y, k)) == 1);
}
