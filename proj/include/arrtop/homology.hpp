#pragma once

#include "arrtop/complexes.hpp"
#include "arrtop/smith.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace arrtop {

inline constexpr std::size_t kDefaultMaxFaces = 2'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse integer matrix in compressed-column form; each column lists its
/// nonzero entries with increasing row index.
struct SparseColumns {
  std::size_t rows = 0;
  std::vector<std::size_t> start{0};
  std::vector<std::uint32_t> index;
  std::vector<std::int64_t> value;

  std::size_t cols() const { return start.size() - 1; }
  std::size_t nnz() const { return index.size(); }
  /// Appends a column; entries are sorted and zero entries dropped.
  void add_column(std::vector<std::pair<std::uint32_t, std::int64_t>> entries);

  static SparseColumns from_dense(const std::vector<std::vector<long>>& m);
};

/// Rank and elementary divisors of an integer matrix given by sparse columns.
SNFResult sparse_smith(const SparseColumns& m);

/// Chain groups C_lo .. C_hi with boundary maps ∂_d : C_d -> C_{d-1}.
class ChainComplexData {
 public:
  ChainComplexData() = default;
  /// `boundaries[i]` is ∂ from degree lo+i+1 to lo+i.  Throws if ∂∘∂ != 0.
  ChainComplexData(int lo, std::vector<std::size_t> ranks, std::vector<SparseColumns> boundaries);

  int min_degree() const { return lo_; }
  int max_degree() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int d) const;
  /// ∂_d; empty (0 columns) when out of range.
  const SparseColumns& boundary(int d) const;
  bool reduced() const { return reduced_; }
  void set_reduced(bool r) { reduced_ = r; }

  /// Candidate collapse pairs (cell of degree d, face of degree d-1), tried in
  /// order before the greedy reduction.  Invalid candidates are skipped.
  struct CellPair {
    int degree;
    std::uint32_t cell;
    std::uint32_t face;
  };
  std::vector<CellPair> collapse_hints;

 private:
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<SparseColumns> boundaries_;
  bool reduced_ = false;
};

struct GroupSummary {
  std::size_t rank = 0;
  std::vector<long> torsion;
  friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

struct HomologySummary {
  bool reduced = false;
  std::map<int, GroupSummary> degrees;

  std::size_t rank(int d) const;
  bool has_torsion() const;
  bool is_zero() const;
  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

/// Relative chain complex of a pair: generators are faces of total not in
/// sub, sorted lexicographically within each degree.  With `reduced` and an
/// empty sub, degree -1 carries the augmentation.
ChainComplexData chain_complex(const SimplicialPair& pair, bool reduced, std::size_t max_faces = kDefaultMaxFaces);
ChainComplexData chain_complex(const SimplicialComplex& c, bool reduced, std::size_t max_faces = kDefaultMaxFaces);

HomologySummary homology(const ChainComplexData& cc);
HomologySummary homology(const SimplicialPair& pair, bool reduced = false, std::size_t max_faces = kDefaultMaxFaces);

/// Σ (-1)^d (number of relative d-faces), without building boundaries.
long euler_characteristic(const SimplicialPair& pair, std::size_t max_faces = kDefaultMaxFaces);
long euler_characteristic(const HomologySummary& h);

/// Faces of a complex of dimension d, flattened (d+1 entries per face),
/// sorted lexicographically.  Throws BudgetExceeded past `max_faces` in total.
std::vector<std::vector<std::uint32_t>> faces_by_degree(const SimplicialComplex& c, std::size_t max_faces);

}  // namespace arrtop
