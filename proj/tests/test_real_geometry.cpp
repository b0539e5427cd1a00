#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrtop/gm.hpp"
#include "arrtop/real_geometry.hpp"
#include "oracles.hpp"

using namespace arrtop;

namespace {

long complement_euler(const Arrangement& real_arr) {
  auto b = gm_report(complexify(real_arr)).betti();
  long chi = 0;
  for (std::size_t d = 0; d < b.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(b[d]);
  return chi;
}

Arrangement fig1() {
  // Four lines: two crossing diagonals, a horizontal line, and a vertical one.
  return hyperplanes_from_ints(2, {{1, -1, 0}, {1, 1, 2}, {0, 1, 0}, {1, 0, 3}}, Field::Q);
}

}  // namespace

TEST_CASE("Fourier-Motzkin feasibility") {
  // x > 0, y > 0, x + y < 1
  std::vector<LinearConstraint> tri = {{{1, 0}, 0, true}, {{0, 1}, 0, true}, {{-1, -1}, -1, true}};
  auto w = fm_feasible(2, tri);
  REQUIRE(w.has_value());
  CHECK((*w)[0] > 0);
  CHECK((*w)[1] > 0);
  CHECK((*w)[0] + (*w)[1] < 1);
  // x >= 1 and x <= 1 is feasible; x > 1 and x <= 1 is not.
  CHECK(fm_feasible(1, {{{1}, 1, false}, {{-1}, -1, false}}).value() == std::vector<Rational>{1});
  CHECK_FALSE(fm_feasible(1, {{{1}, 1, true}, {{-1}, -1, false}}).has_value());
  CHECK_FALSE(fm_feasible(0, {{{}, 0, true}}).has_value());
  CHECK(fm_feasible(0, {{{}, -1, true}}).has_value());
}

TEST_CASE("region counts of small arrangements") {
  Arrangement one = hyperplanes_from_ints(2, {{1, 0, 0}}, Field::Q);
  CHECK(enumerate_regions(one).size() == 2);
  CHECK(count_bounded(one) == 0);
  Arrangement gen3 = hyperplanes_from_ints(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}, Field::Q);
  CHECK(enumerate_regions(gen3).size() == 7);
  CHECK(count_bounded(gen3) == 1);
  CHECK(count_bounded(hyperplanes_from_ints(2, {{1, 0, 0}, {1, 0, 1}}, Field::Q)) == 0);
  CHECK(count_bounded(coordinate_cross(2)) == 0);
  CHECK(enumerate_regions(fig1()).size() == static_cast<std::size_t>(oracle::zaslavsky_regions(fig1())));
  CHECK(count_bounded(fig1()) == static_cast<std::size_t>(oracle::zaslavsky_bounded(fig1())));
  CHECK_THROWS(enumerate_regions(diagonal_arrangement(3, 2)));
}

TEST_CASE("generic lines have C(m-1, 2) bounded regions") {
  for (std::size_t m = 2; m <= 7; ++m) {
    Arrangement a = oracle::parabola_tangents(m);
    const long want = static_cast<long>((m - 1) * (m - 2) / 2);
    CHECK(static_cast<long>(count_bounded(a)) == want);
  }
}

TEST_CASE("regions match Zaslavsky's counts and their witnesses") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    Arrangement a = oracle::random_hyperplanes(rng, n, 3 + trial % 3, Field::Q, false, 2);
    auto regions = enumerate_regions(a);
    CHECK(static_cast<long>(regions.size()) == oracle::zaslavsky_regions(a));
    if (oracle::is_essential(a)) {
      long bounded = 0;
      for (const auto& r : regions) bounded += r.bounded;
      CHECK(bounded == oracle::zaslavsky_bounded(a));
    }
    auto forms = hyperplane_forms(a);
    std::set<std::string> seen;
    for (const auto& r : regions) {
      CHECK(seen.insert(r.signs).second);
      for (std::size_t k = 0; k < forms.size(); ++k) CHECK(sgn(forms[k](r.witness)) == (r.signs[k] == '+' ? 1 : -1));
    }
  }
}

TEST_CASE("deletion-restriction: a new hyperplane adds the regions it induces on itself") {
  for (std::size_t m = 2; m <= 6; ++m) {
    Arrangement full = oracle::parabola_tangents(m);
    Arrangement smaller = oracle::parabola_tangents(m - 1);
    // Restriction to the last tangent line: its crossings with the others are m - 1 points.
    const std::size_t on_line = m;  // m - 1 points cut the line into m intervals
    CHECK(enumerate_regions(full).size() == enumerate_regions(smaller).size() + on_line);
  }
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    Arrangement a = oracle::random_hyperplanes(rng, 2, 4, Field::Q, false, 3);
    std::vector<PlaneSpec> specs(a.specs().begin(), a.specs().end() - 1);
    Arrangement del(2, Field::Q, specs);
    // Points where the last line meets the others, counted as distinct points.
    const auto& last = a.specs().back().equations;
    std::set<std::string> pts;
    bool parallel_dup = false;
    for (const auto& s : specs) {
      CanonicalSubspace x = CanonicalSubspace(2, Field::Q, last).intersect(CanonicalSubspace(2, Field::Q, s.equations));
      if (!x.is_empty() && x.dim() == 0) pts.insert(x.key());
      if (!x.is_empty() && x.dim() == 1) parallel_dup = true;
    }
    if (parallel_dup) continue;
    CHECK(enumerate_regions(a).size() == enumerate_regions(del).size() + pts.size() + 1);
  }
}

TEST_CASE("Salvetti cells of a point in the complex line") {
  Arrangement p = hyperplanes_from_ints(1, {{1, 0}}, Field::Q);
  SalvettiCensus c = salvetti_census(p);
  CHECK(c.cells_by_dim == std::map<int, long>{{1, 2}, {2, 2}});
  CHECK(c.euler_characteristic() == 1);
  CHECK(salvetti_cell_dim(p, "+") == 2);
  CHECK(salvetti_cell_dim(p, "^") == 1);
}

TEST_CASE("factorized census equals the sequence-by-sequence census") {
  std::mt19937 rng(21);
  std::vector<Arrangement> cases{hyperplanes_from_ints(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}, Field::Q),
                                 hyperplanes_from_ints(2, {{1, 0, 0}, {1, 0, 1}}, Field::Q),
                                 hyperplanes_from_ints(3, {{1, -1, 0, 0}, {1, 0, -1, 0}, {0, 1, -1, 0}}, Field::Q)};
  for (int t = 0; t < 4; ++t) cases.push_back(oracle::random_hyperplanes(rng, 2, 4, Field::Q, t % 2 == 0, 1));
  for (const auto& a : cases) CHECK(salvetti_census(a) == salvetti_census_bruteforce(a));
}

TEST_CASE("census Euler characteristic is one more than that of the complement") {
  std::mt19937 rng(4);
  std::vector<Arrangement> cases{coordinate_cross(2), oracle::parabola_tangents(4), fig1()};
  for (int t = 0; t < 5; ++t) cases.push_back(oracle::random_hyperplanes(rng, 2 + t % 2, 4, Field::Q, false, 2));
  for (const auto& a : cases) {
    SalvettiCensus c = salvetti_census(a);
    CHECK(c.euler_characteristic() == 1 + complement_euler(a));
    CHECK(c.total() <= (1L << (2 * a.size())) + 1);
  }
  SalvettiCensus top = salvetti_census(oracle::parabola_tangents(3));
  CHECK(top.cells_by_dim.at(4) == 7);  // the all-real-sign cells are region x whole imaginary space
}

TEST_CASE("imaginary wedges") {
  Arrangement gen3 = hyperplanes_from_ints(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}, Field::Q);
  ImaginaryWedgeCensus w = imaginary_wedge_census(gen3);
  CHECK(w.bm_ranks() == std::map<int, long>{{2, 3}, {3, 3}, {4, 1}});
  ImaginaryWedgeCensus one = imaginary_wedge_census(hyperplanes_from_ints(3, {{1, 0, 0, 0}}, Field::Q));
  CHECK(one.bm_ranks() == std::map<int, long>{{5, 1}, {6, 1}});
  CHECK_THROWS(imaginary_wedge_census(hyperplanes_from_ints(3, {{1, -1, 0, 0}, {1, 0, -1, 0}, {0, 1, -1, 0}}, Field::Q)));
}

TEST_CASE("imaginary wedge ranks are dual to GM ranks") {
  std::mt19937 rng(61);
  int tested = 0;
  while (tested < 6) {
    Arrangement a = oracle::random_hyperplanes(rng, 2 + tested % 2, 3 + tested % 2, Field::Q, false, 2);
    if (!is_normal_crossings(a)) continue;
    ++tested;
    auto bm = imaginary_wedge_census(a).bm_ranks();
    auto b = gm_report(complexify(a)).betti();
    const int top = static_cast<int>(2 * a.ambient_dim());
    for (std::size_t p = 0; p < b.size(); ++p) {
      const long have = bm.count(top - static_cast<int>(p)) ? bm.at(top - static_cast<int>(p)) : 0;
      CHECK(have == static_cast<long>(b[p]));
    }
  }
}
