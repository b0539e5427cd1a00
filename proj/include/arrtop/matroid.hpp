#pragma once

#include "arrtop/arrangement.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arrtop {

inline constexpr std::size_t kMaxMatroidElements = 16;

/// r(I) for every subset I of {0..m-1}, indexed by bitmask.  Entry 0 holds
/// r(∅), which the axioms only consult when asked to.
struct RankFunction {
  std::size_t m = 0;
  std::vector<int> r;

  RankFunction() = default;
  explicit RankFunction(std::size_t m);
  int operator()(std::uint32_t mask) const { return r.at(mask); }
  int& operator[](std::uint32_t mask) { return r.at(mask); }
  friend bool operator==(const RankFunction&, const RankFunction&) = default;
};

/// r(I) = codim L_I.
RankFunction matroid_from_arrangement(const Arrangement& arr);

struct AxiomViolation {
  int axiom = 0;  // 1 bounds, 2 monotonicity, 3 submodularity
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::string message;
  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

/// Axiom 1: 1 <= r(I) <= |I|.  Axiom 2: r(I) <= r(J) for I ⊂ J, checked on
/// one-element extensions.  Axiom 3: submodularity, checked on pairs
/// (S+a, S+b), which covers every pair meeting in S; S must be nonempty
/// unless `empty_rank_zero`, in which case r(∅) = 0 is used.
std::vector<AxiomViolation> check_matroid_axioms(const RankFunction& r, bool empty_rank_zero = false);

std::string subset_name(std::uint32_t mask);

bool same_dimensional_data(const Arrangement& a, const Arrangement& b);

struct MnevConstraint {
  std::vector<int> lines;  // 1-based
  int required = 0;
  int actual = 0;
  bool holds() const { return required == actual; }
  std::string name() const;
  friend bool operator==(const MnevConstraint&, const MnevConstraint&) = default;
};

struct MnevReport {
  Scalar alpha;
  /// Homogeneous line coordinates (a, b, c): a x + b y + c = 0; entry 0 is L1.
  std::vector<Vector> lines;
  std::optional<std::string> construction_failure;
  std::vector<MnevConstraint> constraints;

  bool passed() const;
  /// "PASS", "FAIL at <constraint>", or "FAIL at construction: <reason>".
  std::string verdict() const;
  friend bool operator==(const MnevReport&, const MnevReport&) = default;
};

/// Builds the ten-line configuration whose last incidence forces α^4 = 1.
MnevReport mnev_check(const Scalar& alpha);

}  // namespace arrtop
