#pragma once

#include "arrtop/scalar.hpp"

#include <cstddef>
#include <vector>

namespace arrtop {

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static IntMatrix from_ints(const std::vector<std::vector<long>>& rows);

  Integer& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct SNFResult {
  std::size_t rank = 0;
  /// d_1 | d_2 | ... | d_rank, all positive.
  std::vector<Integer> elementary_divisors;
};

SNFResult smith_normal_form(IntMatrix m);

/// Sorts a list of nonzero diagonal entries into a divisor chain with the
/// same product and the same gcd structure.
std::vector<Integer> normalize_divisors(std::vector<Integer> diagonal);

}  // namespace arrtop
