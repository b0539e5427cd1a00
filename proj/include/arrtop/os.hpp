#pragma once

#include "arrtop/arrangement.hpp"

#include <map>
#include <vector>

namespace arrtop {

using Monomial = std::vector<std::size_t>;  // sorted generator indices, 0-based
using OSElement = std::map<Monomial, Rational>;

inline constexpr std::size_t kMaxOSGenerators = 10;

/// Minimal dependent sets of hyperplanes of a central arrangement.
std::vector<Monomial> circuits(const Arrangement& arr);
/// All dependent sets, minimal or not.
std::vector<Monomial> dependent_sets(const Arrangement& arr);

struct OSDegree {
  std::vector<Monomial> monomials;  // column order: reverse lexicographic
  std::map<Monomial, std::size_t> column;
  std::vector<std::vector<Rational>> relations;  // reduced rows
  std::vector<std::size_t> pivots;               // pivot column of each row
  std::vector<Monomial> basis;                   // lexicographic order
};

/// Exterior algebra on the hyperplanes modulo the circuit relations, over Q.
struct OSAlgebra {
  std::size_t m = 0;
  std::vector<std::size_t> dims;
  std::vector<OSDegree> degrees;
  std::vector<Monomial> circuits;

  const std::vector<Monomial>& basis(std::size_t d) const { return degrees.at(d).basis; }
};

OSAlgebra os_algebra(const Arrangement& arr, bool all_dependent_sets = false);

/// e_S ∧ e_T as (sign, union); sign 0 when S and T meet.
std::pair<int, Monomial> wedge(const Monomial& s, const Monomial& t);
/// Σ (-1)^j e_{C \ c_j}
OSElement os_boundary(const Monomial& c);

OSElement os_normal_form(const OSElement& x, const OSAlgebra& alg);
OSElement os_product(const OSElement& x, const OSElement& y, const OSAlgebra& alg);

/// Coefficients of the Poincaré polynomial, low degree first.
std::vector<long> os_poincare_polynomial(const Arrangement& arr);

/// Central arrangement in one more dimension: a·x = b becomes a·x - b·x0 = 0,
/// and the hyperplane x0 = 0 is appended.
Arrangement cone(const Arrangement& arr);
/// Divides a polynomial by (1 + t).
std::vector<long> decone_polynomial(const std::vector<long>& p);

}  // namespace arrtop
