#pragma once

#include "arrtop/matrix.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace arrtop {

/// An affine subspace stored as the reduced row echelon form of its
/// augmented system [A | b] (meaning A x = b).  Two subspaces are equal as
/// sets iff their stored rows are identical.
class CanonicalSubspace {
 public:
  CanonicalSubspace() = default;
  /// Rows are [a_1, ..., a_N, b].
  CanonicalSubspace(std::size_t ambient_dim, Field f, const std::vector<Vector>& equations);
  static CanonicalSubspace ambient(std::size_t ambient_dim, Field f);

  std::size_t ambient_dim() const { return ambient_; }
  Field field() const { return field_; }
  bool is_empty() const { return empty_; }
  std::size_t dim() const { return empty_ ? 0 : ambient_ - rows_.rows(); }
  std::size_t codim() const { return rows_.rows(); }
  /// Canonical rows [A | b]; empty for the ambient space.
  const Matrix& equations() const { return rows_; }
  /// The homogeneous part A of the canonical rows.
  Matrix linear_part() const;
  bool is_central() const;

  CanonicalSubspace intersect(const CanonicalSubspace& o) const;
  /// True iff this ⊆ o as point sets (an empty set is contained in everything).
  bool contained_in(const CanonicalSubspace& o) const;
  bool contains_point(std::span<const Scalar> x) const;

  /// Deterministic byte key of the canonical form.
  std::string key() const;

  friend bool operator==(const CanonicalSubspace& a, const CanonicalSubspace& b) {
    return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.empty_ == b.empty_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_ = 0;
  Field field_ = Field::Q;
  bool empty_ = false;
  Matrix rows_;
};

class InconsistentPlaneError : public std::runtime_error {
 public:
  InconsistentPlaneError(std::size_t index, const std::string& label);
  std::size_t index;
};

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlaneSpec {
  std::string label;
  std::vector<Vector> equations;  // rows [a_1..a_N, b]
};

class Arrangement {
 public:
  Arrangement(std::size_t ambient_dim, Field f, const std::vector<PlaneSpec>& planes);

  std::size_t ambient_dim() const { return ambient_; }
  Field field() const { return field_; }
  std::size_t size() const { return planes_.size(); }
  const CanonicalSubspace& plane(std::size_t i) const { return planes_[i]; }
  const std::vector<CanonicalSubspace>& planes() const { return planes_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<PlaneSpec>& specs() const { return specs_; }

  bool all_hyperplanes() const;
  bool is_central() const;

  /// When this arrangement was produced by realify(), the complex original.
  const Arrangement* complex_source() const { return complex_source_.get(); }

  CanonicalSubspace intersection(std::uint64_t mask) const;

 private:
  friend Arrangement realify(const Arrangement& arr);

  std::size_t ambient_ = 0;
  Field field_ = Field::Q;
  std::vector<CanonicalSubspace> planes_;
  std::vector<std::string> labels_;
  std::vector<PlaneSpec> specs_;
  std::shared_ptr<const Arrangement> complex_source_;
};

/// Real arrangement in R^{2N} from a Q(i) arrangement in C^N; coordinates are
/// ordered (Re z_1..Re z_N, Im z_1..Im z_N).
Arrangement realify(const Arrangement& arr);
/// The same real equations read over Q(i).
Arrangement complexify(const Arrangement& arr);

/// Diagonal arrangement A(N,k): the planes x_{i_1} = ... = x_{i_k}.
Arrangement diagonal_arrangement(std::size_t n, std::size_t k, Field f = Field::QI);
/// Coordinate hyperplanes x_i = 0 in ambient N.
Arrangement coordinate_cross(std::size_t n, Field f = Field::Q);
/// Hyperplanes a·x = b from integer rows [a_1..a_N, b].
Arrangement hyperplanes_from_ints(std::size_t n, const std::vector<std::vector<long>>& rows, Field f);

struct PosetNode {
  CanonicalSubspace space;
  std::uint64_t generators = 0;  // bit i set iff the node lies in plane i
  std::size_t dim = 0;
  std::size_t codim = 0;
};

/// All nonempty intersections of the planes, ordered by reverse inclusion.
/// Node a is below node b when L_a strictly contains L_b.
class IntersectionPoset {
 public:
  explicit IntersectionPoset(const Arrangement& arr);

  std::size_t size() const { return nodes_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t plane_count() const { return m_; }
  const PosetNode& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<PosetNode>& nodes() const { return nodes_; }

  bool less(std::size_t a, std::size_t b) const;
  /// Nodes strictly below x (strictly larger subspaces), increasing index.
  const std::vector<std::size_t>& below(std::size_t x) const { return below_[x]; }
  const std::vector<std::size_t>& above(std::size_t x) const { return above_[x]; }
  /// Covering relations a ⋖ b.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  std::vector<std::pair<std::size_t, std::size_t>> order_pairs() const;

  /// μ(0̂, x) with the ambient space as 0̂.
  long mobius(std::size_t x) const { return mobius_[x]; }
  /// μ(lo, hi) between poset nodes (lo == hi gives 1, incomparable gives 0).
  long mobius(std::size_t lo, std::size_t hi) const;
  /// Length of the longest chain 0̂ < ... < x.
  std::size_t rank(std::size_t x) const { return rank_[x]; }

  std::optional<std::size_t> find(const CanonicalSubspace& s) const;
  std::optional<std::size_t> node_of_generators(std::uint64_t mask) const;
  /// Index of the plane node L_i.
  std::size_t plane_node(std::size_t i) const { return plane_nodes_[i]; }

 private:
  std::size_t ambient_ = 0;
  std::size_t m_ = 0;
  std::vector<PosetNode> nodes_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::vector<std::size_t>> above_;
  std::vector<long> mobius_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> plane_nodes_;
};

/// dim L_I for every nonempty I ⊆ {0..m-1}, indexed by bitmask; -1 marks
/// an empty intersection.  Entry 0 is unused.
struct DimensionSignature {
  std::size_t m = 0;
  std::vector<int> dims;
  friend bool operator==(const DimensionSignature&, const DimensionSignature&) = default;
};

inline constexpr std::size_t kMaxSignaturePlanes = 20;

DimensionSignature dimensional_data(const Arrangement& arr);
DimensionSignature dimensional_data(const IntersectionPoset& poset);

bool is_normal_crossings(const Arrangement& arr);
bool is_normal_crossings(const Arrangement& arr, const IntersectionPoset& poset);
bool is_generic(const Arrangement& arr);
bool transversal(const IntersectionPoset& poset, std::size_t a, std::size_t b);
bool is_ge2_arrangement(const IntersectionPoset& poset);

}  // namespace arrtop
