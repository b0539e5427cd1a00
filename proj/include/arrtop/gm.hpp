#pragma once

#include "arrtop/homology.hpp"

#include <map>
#include <optional>
#include <vector>

namespace arrtop {

/// One node's share of the reduced cohomology of the complement.
struct GMContribution {
  std::size_t node = 0;
  std::uint64_t generators = 0;
  std::size_t node_dim = 0;
  /// Cohomological degree i = N - pair_degree - node_dim - 1.
  int degree = 0;
  int pair_degree = 0;
  GroupSummary group;
  /// Codimension of the node.
  std::size_t filtration = 0;
  friend bool operator==(const GMContribution&, const GMContribution&) = default;
};

struct GMReport {
  /// Real dimension of the space whose complement is described.
  std::size_t ambient_dim = 0;
  Field source_field = Field::Q;
  std::vector<GMContribution> contributions;
  /// Reduced cohomology of the complement by degree 0..ambient_dim-1.
  std::map<int, GroupSummary> totals;

  /// Unreduced Betti numbers b_0..b_{N-1}.
  std::vector<std::size_t> betti() const;
  bool has_torsion() const;
  friend bool operator==(const GMReport&, const GMReport&) = default;
};

/// Real form of an arrangement: Q(i) inputs are realified, Q inputs returned as is.
Arrangement real_form(const Arrangement& arr);

GMReport gm_report(const Arrangement& arr, std::size_t max_faces = kDefaultMaxFaces);
GMReport gm_report(const IntersectionPoset& poset, Field source_field, std::size_t max_faces = kDefaultMaxFaces);

struct WedgeSummand {
  std::size_t node = 0;
  std::uint64_t generators = 0;
  std::size_t node_dim = 0;
  HomologySummary pair;
  friend bool operator==(const WedgeSummand&, const WedgeSummand&) = default;
};

/// Pair homology of every node shifted up by the node dimension; the totals
/// are the reduced homology of the one-point compactification of the union.
struct WedgeSummary {
  std::size_t ambient_dim = 0;
  std::vector<WedgeSummand> summands;
  std::map<int, GroupSummary> totals;
  friend bool operator==(const WedgeSummary&, const WedgeSummary&) = default;
};

WedgeSummary wedge_summary(const Arrangement& arr, std::size_t max_faces = kDefaultMaxFaces);
/// True iff totals in degree q match the report in degree N - 1 - q.
bool alexander_dual(const WedgeSummary& w, const GMReport& r);

/// A coorientation of a node: an ordered basis of covectors vanishing on the
/// node's direction space (codim rows, real coordinates).
using Coorientation = Matrix;

/// Complex frames for realified arrangements, canonical row-reduced frames otherwise.
std::vector<Coorientation> default_coorientations(const Arrangement& real_arr, const IntersectionPoset& poset);

/// Relative cycle of (Υ(I), ∂Υ(I)): chains are increasing lists of poset node
/// ids ending in `node`.
struct GradedClass {
  std::size_t node = 0;
  int pair_degree = 0;
  std::map<Face, Integer> chain;
  friend bool operator==(const GradedClass&, const GradedClass&) = default;
};

bool is_relative_cycle(const GradedClass& c, const IntersectionPoset& poset);

/// Sign comparing the ordered pair of coorientations of nodes a and b with
/// that of their intersection k.
int coorientation_sign(const std::vector<Coorientation>& frames, std::size_t a, std::size_t b, std::size_t k);

/// std::nullopt stands for the zero product.
std::optional<GradedClass> shuffle_product(const GradedClass& a, const GradedClass& b, const IntersectionPoset& poset,
                                           const std::vector<Coorientation>& frames);

struct RingBasisElement {
  bool unit = false;
  std::size_t node = 0;
  std::uint64_t generators = 0;
  int degree = 0;
  GradedClass cycle;
  friend bool operator==(const RingBasisElement&, const RingBasisElement&) = default;
};

/// Structure constants of the shuffle product in a rational basis of the
/// free part of the graded ring (element 0 is the unit).
struct RingTable {
  std::size_t ambient_dim = 0;
  std::vector<RingBasisElement> basis;
  std::vector<Coorientation> frames;
  /// products[{a, b}] = coordinates of basis[a] * basis[b]; absent means zero.
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> products;
  std::vector<std::string> notes;

  std::map<std::size_t, Rational> multiply(const std::map<std::size_t, Rational>& x,
                                           const std::map<std::size_t, Rational>& y) const;
  std::optional<std::size_t> find(std::uint64_t generators, int degree) const;
};

RingTable graded_ring_table(const Arrangement& arr, std::size_t max_faces = kDefaultMaxFaces);
RingTable graded_ring_table(const Arrangement& real_arr, const std::vector<Coorientation>& frames,
                            std::size_t max_faces = kDefaultMaxFaces);

}  // namespace arrtop
