#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrtop/homology.hpp"
#include "oracles.hpp"

using namespace arrtop;

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  return v;
}

SimplicialComplex torus7() {
  std::vector<Face> f;
  for (std::uint32_t i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex(names(7), f);
}

SimplicialComplex rp2() {
  std::vector<Face> f = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                         {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  return SimplicialComplex(names(6), f);
}

SimplicialPair random_pair(std::mt19937& rng, std::size_t n) {
  std::vector<Face> facets;
  std::uniform_int_distribution<int> size(2, 4);
  for (int k = 0; k < 6; ++k) {
    Face f;
    int s = size(rng);
    while (static_cast<int>(f.size()) < s) {
      std::uint32_t v = rng() % n;
      if (std::find(f.begin(), f.end(), v) == f.end()) f.push_back(v);
    }
    facets.push_back(f);
  }
  SimplicialComplex total(names(n), facets);
  std::vector<Face> sub;
  for (const auto& f : oracle::all_faces(total))
    if (rng() % 4 == 0) sub.push_back(f);
  return {total, SimplicialComplex(names(n), sub)};
}

}  // namespace

TEST_CASE("boundary of a simplex is a sphere") {
  for (std::uint32_t d = 1; d <= 5; ++d) {
    std::vector<Face> faces;
    for (std::uint32_t skip = 0; skip <= d; ++skip) {
      Face f;
      for (std::uint32_t v = 0; v <= d; ++v)
        if (v != skip) f.push_back(v);
      faces.push_back(f);
    }
    HomologySummary h = homology(SimplicialPair{SimplicialComplex(names(d + 1), faces), {}}, true);
    for (const auto& [deg, g] : h.degrees) CHECK(g.rank == (deg == static_cast<int>(d) - 1 ? 1u : 0u));
    CHECK_FALSE(h.has_torsion());
  }
}

TEST_CASE("torus") {
  HomologySummary h = homology(SimplicialPair{torus7(), {}});
  CHECK(h.rank(0) == 1);
  CHECK(h.rank(1) == 2);
  CHECK(h.rank(2) == 1);
  CHECK_FALSE(h.has_torsion());
}

TEST_CASE("projective plane has 2-torsion") {
  HomologySummary h = homology(SimplicialPair{rp2(), {}}, true);
  CHECK(h.rank(0) == 0);
  CHECK(h.rank(1) == 0);
  CHECK(h.degrees.at(1).torsion == std::vector<long>{2});
  CHECK(h.rank(2) == 0);
}

TEST_CASE("relative homology of a disk modulo its boundary") {
  SimplicialComplex disk = SimplicialComplex::simplex(names(3));
  SimplicialComplex circle(names(3), {{0, 1}, {1, 2}, {0, 2}});
  HomologySummary h = homology(SimplicialPair{disk, circle});
  CHECK(h.rank(2) == 1);
  CHECK(h.rank(1) == 0);
  CHECK(h.rank(0) == 0);
}

TEST_CASE("random pairs agree with dense elimination mod p") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    SimplicialPair pair = random_pair(rng, 7);
    HomologySummary h = homology(pair);
    std::map<int, long> b;
    for (const auto& [d, g] : h.degrees)
      if (g.rank) b[d] = static_cast<long>(g.rank);
    std::map<int, long> want = oracle::betti_mod_p(pair);
    CHECK(b == want);
  }
}

TEST_CASE("Euler characteristic of homology equals the face count") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    SimplicialPair pair = random_pair(rng, 8);
    CHECK(euler_characteristic(homology(pair)) == euler_characteristic(pair));
  }
  CHECK(euler_characteristic(homology(SimplicialPair{torus7(), {}})) == 0);
}

TEST_CASE("boundary maps compose to zero on construction") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    SimplicialPair pair = random_pair(rng, 7);
    ChainComplexData cc = chain_complex(pair, trial % 2 == 0);
    CHECK(cc.max_degree() >= cc.min_degree());
  }
  SparseColumns d1 = SparseColumns::from_dense({{1}, {1}});
  SparseColumns d2 = SparseColumns::from_dense({{1}});
  CHECK_THROWS(ChainComplexData(0, {2, 1, 1}, {d1, d2}));
  SparseColumns e1 = SparseColumns::from_dense({{-1}, {1}});
  SparseColumns e2 = SparseColumns::from_dense({{1}});
  CHECK_NOTHROW(ChainComplexData(0, {2, 1, 1}, {e1, SparseColumns::from_dense({{0}})}));
  CHECK_THROWS(ChainComplexData(0, {2, 1, 1}, {e1, e2}));
}

TEST_CASE("face budget") {
  CHECK_THROWS_AS(homology(SimplicialPair{SimplicialComplex::simplex(names(16)), {}}, false, 1000), BudgetExceeded);
}

TEST_CASE("connected graph complexes for small N") {
  long fact = 1;
  for (std::size_t n = 2; n <= 5; ++n) {
    if (n > 2) fact *= static_cast<long>(n - 1);
    HomologySummary h = homology(connected_graph_pair(n));
    for (const auto& [d, g] : h.degrees) {
      CHECK(g.torsion.empty());
      CHECK(g.rank == (d == static_cast<int>(n) - 2 ? static_cast<std::size_t>(fact) : 0u));
    }
  }
}

TEST_CASE("hypergraph connectivity") {
  CHECK(hypergraph_connected(4, {{0, 1, 2}, {2, 3, 0}}));
  CHECK_FALSE(hypergraph_connected(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(hypergraph_connected(4, {{0, 1, 2}}));
  CHECK_THROWS(k_hypergraph_pair(3, 4));
}
