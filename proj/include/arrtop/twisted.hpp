#pragma once

#include "arrtop/arrangement.hpp"
#include "arrtop/homology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arrtop {

/// A monodromy coefficient: an exact Q(i) value, or a formal symbol whose
/// only property is τ ≠ 1 (and τ·x ≠ 1 for any product containing it).
class TauValue {
 public:
  static TauValue generic() { return TauValue(); }
  explicit TauValue(Scalar value);
  /// "generic", or a Gaussian rational such as "-1", "i", "1/2+3i".
  static TauValue parse(std::string_view text);

  bool is_generic() const { return !value_; }
  const std::optional<Scalar>& value() const { return value_; }
  bool is_one() const { return value_ && value_->is_one(); }
  std::string to_string() const;
  friend bool operator==(const TauValue&, const TauValue&) = default;

 private:
  TauValue() = default;
  std::optional<Scalar> value_;
};

struct MonodromyData {
  std::vector<TauValue> tau;
  explicit MonodromyData(std::vector<TauValue> tau);
  /// Comma-separated TauValue tokens.
  static MonodromyData parse(std::string_view list);
  std::size_t size() const { return tau.size(); }
  TauValue tau0() const;
};

struct TwistedPrediction {
  bool applicable = false;
  std::string reason;
  int degree = 0;
  long dimension = 0;
  /// Unset when the criterion used does not decide bijectivity.
  std::optional<bool> canonical_map_bijective;
  friend bool operator==(const TwistedPrediction&, const TwistedPrediction&) = default;
};

long binomial(long n, long k);

/// Generic arrangement of md.size() hyperplanes in C^N.
TwistedPrediction resonance_generic(const MonodromyData& md, std::size_t n);
/// Complexification of a real normal-crossing arrangement.
TwistedPrediction twisted_dim_normal_crossing(const Arrangement& arr, const MonodromyData& md);

/// Locally finite twisted homology of C minus m points from the complex of
/// m rays and one 2-cell with boundary Σ (τ_j - 1) ∇_j.
HomologySummary one_dim_twisted_complex(const std::vector<Rational>& points, const MonodromyData& md);

}  // namespace arrtop
