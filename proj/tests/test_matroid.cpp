#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrtop/matroid.hpp"
#include "oracles.hpp"

#include <bit>
#include <set>

using namespace arrtop;

namespace {

// Every pair of subsets with nonempty intersection (or all pairs when
// r(∅) = 0 is in force), plus bounds and monotonicity over all I ⊂ J.
bool brute_force_matroid(const RankFunction& r, bool empty_rank_zero) {
  const std::uint32_t full = (1u << r.m) - 1;
  for (std::uint32_t i = 1; i <= full; ++i) {
    if (r(i) < 1 || r(i) > std::popcount(i)) return false;
    for (std::uint32_t j = 1; j <= full; ++j) {
      if ((i & j) == i && r(i) > r(j)) return false;
      const std::uint32_t meet = i & j;
      if (meet == 0 && !empty_rank_zero) continue;
      const int rm = meet == 0 ? 0 : r(meet);
      if (rm + r(i | j) > r(i) + r(j)) return false;
    }
  }
  return true;
}

Arrangement central_lines(const std::vector<std::vector<long>>& normals) {
  std::vector<std::vector<long>> rows;
  for (auto n : normals) {
    n.push_back(0);
    rows.push_back(n);
  }
  return hyperplanes_from_ints(normals.front().size(), rows, Field::Q);
}

}  // namespace

TEST_CASE("rank functions of small arrangements") {
  RankFunction g = matroid_from_arrangement(central_lines({{1, 0}, {0, 1}, {1, 1}}));
  CHECK(g(0b001) == 1);
  CHECK(g(0b011) == 2);
  CHECK(g(0b101) == 2);
  CHECK(g(0b111) == 2);
  CHECK(matroid_from_arrangement(diagonal_arrangement(3, 2))(0b111) == 2);
  CHECK_THROWS(matroid_from_arrangement(hyperplanes_from_ints(2, {{1, 0, 1}, {0, 1, 0}}, Field::Q)));
}

TEST_CASE("generic central arrangements give uniform matroids") {
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t m = n; m <= 6; ++m) {
      Arrangement a = oracle::moment_hyperplanes(n, m, Field::QI);
      std::vector<PlaneSpec> central;
      for (auto spec : a.specs()) {
        for (auto& row : spec.equations) row.back() = Scalar::zero(Field::QI);
        central.push_back(spec);
      }
      RankFunction r = matroid_from_arrangement(Arrangement(n, Field::QI, central));
      for (std::uint32_t s = 1; s < (1u << m); ++s)
        CHECK(r(s) == std::min<int>(std::popcount(s), static_cast<int>(n)));
    }
}

TEST_CASE("axiom violations") {
  RankFunction bad(2);
  bad[0b01] = 1;
  bad[0b10] = 1;
  bad[0b11] = 3;
  auto v = check_matroid_axioms(bad);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().axiom == 1);
  CHECK(v.front().i == 0b11);

  RankFunction sub(3);
  for (std::uint32_t s = 1; s < 8; ++s) sub[s] = std::min(std::popcount(s), 2);
  sub[0b101] = 1;
  sub[0b111] = 3;
  CHECK_FALSE(brute_force_matroid(sub, false));
  auto w = check_matroid_axioms(sub);
  REQUIRE_FALSE(w.empty());
  bool has3 = false;
  for (const auto& x : w) has3 = has3 || x.axiom == 3;
  CHECK(has3);

  RankFunction mono(3);
  for (std::uint32_t s = 1; s < 8; ++s) mono[s] = std::min(std::popcount(s), 2);
  mono[0b111] = 1;
  bool has2 = false;
  for (const auto& x : check_matroid_axioms(mono)) has2 = has2 || (x.axiom == 2 && x.j == 0b111);
  CHECK(has2);

  CHECK(subset_name(0b1011) == "{1,2,4}");
}

TEST_CASE("arrangement matroids satisfy the axioms") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const std::size_t m = 3 + trial % 6;
    Arrangement a = oracle::random_hyperplanes(rng, n, m, trial % 2 ? Field::QI : Field::Q, true, 2);
    RankFunction r = matroid_from_arrangement(a);
    CHECK(check_matroid_axioms(r).empty());
    CHECK(check_matroid_axioms(r, true).empty());
    for (std::uint32_t s = 1; s < (1u << m); s += 1 + static_cast<std::uint32_t>(rng() % 5)) {
      CHECK(r(s) == oracle::subset_codim(a, s));
      CHECK(r(s) == static_cast<int>(n - a.intersection(s).dim()));
    }
  }
}

TEST_CASE("local axiom check agrees with the all-pairs check") {
  std::mt19937 rng(17);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 3 + trial % 3;
    RankFunction r(m);
    // Monotone bounded candidates: a perturbed uniform matroid.
    const int k = 1 + static_cast<int>(rng() % 3);
    for (std::uint32_t s = 1; s < (1u << m); ++s) r[s] = std::min(std::popcount(s), k);
    const int flips = static_cast<int>(rng() % 3);
    for (int f = 0; f < flips; ++f) {
      const std::uint32_t s = 1 + rng() % ((1u << m) - 1);
      r[s] = std::max(1, std::min(std::popcount(s), r[s] + (rng() % 2 ? 1 : -1)));
    }
    for (bool e : {false, true}) {
      const bool ok = brute_force_matroid(r, e);
      CHECK(check_matroid_axioms(r, e).empty() == ok);
      (ok ? valid : invalid)++;
    }
  }
  CHECK(valid > 20);
  CHECK(invalid > 20);
}

TEST_CASE("same dimensional data") {
  std::vector<std::vector<long>> rows{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, -2, 3}};
  std::vector<std::vector<long>> rotated;
  for (const auto& r : rows) rotated.push_back({3 * r[0] - 4 * r[1], 4 * r[0] + 3 * r[1], 5 * r[2]});
  CHECK(same_dimensional_data(hyperplanes_from_ints(2, rows, Field::Q), hyperplanes_from_ints(2, rotated, Field::Q)));
  CHECK_FALSE(same_dimensional_data(hyperplanes_from_ints(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}, Field::Q),
                                    hyperplanes_from_ints(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, Field::Q)));
  CHECK(same_dimensional_data(oracle::parabola_tangents(4), oracle::moment_hyperplanes(2, 4, Field::Q)));
  CHECK_THROWS(same_dimensional_data(oracle::parabola_tangents(4), oracle::parabola_tangents(3)));
  CHECK_THROWS(same_dimensional_data(coordinate_cross(2), coordinate_cross(3)));
}

TEST_CASE("Mnev configuration") {
  MnevReport ok = mnev_check(Scalar::parse("i", Field::QI));
  CHECK(ok.passed());
  CHECK(ok.verdict() == "PASS");
  CHECK(ok.lines.size() == 10);
  CHECK(mnev_check(Scalar::parse("-i", Field::QI)).passed());

  MnevReport two = mnev_check(Scalar::parse("2", Field::QI));
  CHECK_FALSE(two.passed());
  CHECK(two.verdict() == "FAIL at r(L1,L9,L10)=2");
  CHECK(two.constraints.back().name() == "r(L1,L9,L10)=2");

  MnevReport one = mnev_check(Scalar::parse("1", Field::QI));
  CHECK(one.construction_failure.has_value());
  CHECK(one.verdict() == "FAIL at construction: L5 = L4");
  CHECK_THROWS(mnev_check(Scalar::parse("0", Field::QI)));
}

TEST_CASE("Mnev sweep succeeds exactly at square roots of -1") {
  const Scalar minus_one = Scalar::parse("-1", Field::QI);
  std::set<std::string> passes;
  for (int re = -4; re <= 4; ++re)
    for (int im = -4; im <= 4; ++im)
      for (int den : {1, 2, 3}) {
        if (re == 0 && im == 0) continue;
        Scalar a(parse_rational(std::to_string(re) + "/" + std::to_string(den)),
                 parse_rational(std::to_string(im) + "/" + std::to_string(den)));
        MnevReport rep = mnev_check(a);
        CHECK(rep.passed() == (a * a == minus_one));
        if (rep.passed()) passes.insert(a.to_string());
      }
  CHECK(passes == std::set<std::string>{"i", "-i"});
}
