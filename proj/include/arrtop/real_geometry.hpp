#pragma once

#include "arrtop/arrangement.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arrtop {

/// a·t > b when strict, a·t >= b otherwise.
struct LinearConstraint {
  std::vector<Rational> a;
  Rational b;
  bool strict = true;
};

/// Fourier–Motzkin feasibility over Q; returns a witness point when feasible.
std::optional<std::vector<Rational>> fm_feasible(std::size_t n, std::vector<LinearConstraint> cs);

/// The affine function a·x + c.
struct AffineForm {
  std::vector<Rational> a;
  Rational c;
  Rational operator()(const std::vector<Rational>& x) const;
};

/// Finds a point with sign(f_k(x)) = signs[k] (entries -1, 0, +1) for all k.
std::optional<std::vector<Rational>> sign_cell_witness(std::size_t n, const std::vector<AffineForm>& forms,
                                                       const std::vector<int>& signs);

struct Region {
  std::string signs;  // '+' or '-' per hyperplane
  std::vector<Rational> witness;
  bool bounded = false;
  friend bool operator==(const Region&, const Region&) = default;
};

/// Regions of a real hyperplane arrangement, found by inserting hyperplanes
/// one at a time.  Order: lexicographic in the sign string with '+' < '-'.
std::vector<Region> enumerate_regions(const Arrangement& arr);
std::size_t count_bounded(const Arrangement& arr);
/// The forms a·x - b of a real hyperplane arrangement.
std::vector<AffineForm> hyperplane_forms(const Arrangement& arr);

inline constexpr std::size_t kMaxSalvettiPlanes = 12;

struct SalvettiCensus {
  std::size_t ambient_dim = 0;      // complex dimension N
  std::map<int, long> cells_by_dim;  // real dimension -> count
  long added_point = 1;

  long total() const;
  /// Euler characteristic of the one-point compactification.
  long euler_characteristic() const;
  friend bool operator==(const SalvettiCensus&, const SalvettiCensus&) = default;
};

/// Real dimension of the cell of a sequence over "+-^v" (^ and v for the
/// two imaginary half-lines), or nullopt when the cell is empty.  Decided
/// directly in R^{2N}.
std::optional<int> salvetti_cell_dim(const Arrangement& arr, const std::string& sequence);

/// Census of all 4^m sign-sequence cells of the complexification.
SalvettiCensus salvetti_census(const Arrangement& arr);
/// Same census by checking every sequence with salvetti_cell_dim.
SalvettiCensus salvetti_census_bruteforce(const Arrangement& arr);

struct WedgeCell {
  std::uint64_t generators = 0;  // the set I
  int dim = 0;                   // 2N - |I|
  friend bool operator==(const WedgeCell&, const WedgeCell&) = default;
};

struct ImaginaryWedgeCensus {
  std::size_t ambient_dim = 0;
  std::vector<WedgeCell> cells;
  /// Borel–Moore rank by degree.
  std::map<int, long> bm_ranks() const;
  friend bool operator==(const ImaginaryWedgeCensus&, const ImaginaryWedgeCensus&) = default;
};

/// One cell per nonempty intersection (including the ambient space, I = ∅)
/// of the complexification of a real normal-crossing arrangement.
ImaginaryWedgeCensus imaginary_wedge_census(const Arrangement& arr);

}  // namespace arrtop
