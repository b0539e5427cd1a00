#include "arrtop/smith.hpp"

#include <stdexcept>
#include <utility>

namespace arrtop {

IntMatrix IntMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (rows[r].size() != m.cols) throw std::invalid_argument("ragged integer matrix");
    for (std::size_t c = 0; c < m.cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Integer> normalize_divisors(std::vector<Integer> d) {
  for (auto& x : d) x = abs(x);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

SNFResult smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.rows, cols = a.cols;
  std::vector<Integer> diagonal;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (sgn(a(r, c)) != 0 && (pr == rows || mpz_cmpabs(a(r, c).get_mpz_t(), a(pr, pc).get_mpz_t()) < 0)) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    if (pr != t)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(pr, c), a(t, c));
    if (pc != t)
      for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, pc), a(r, t));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (sgn(a(r, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) a(r, c) -= q * a(t, c);
        if (sgn(a(r, t)) != 0) {
          for (std::size_t c = t; c < cols; ++c) std::swap(a(r, c), a(t, c));
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (sgn(a(t, c)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) a(r, c) -= q * a(r, t);
        if (sgn(a(t, c)) != 0) {
          for (std::size_t r = t; r < rows; ++r) std::swap(a(r, c), a(r, t));
          clean = false;
        }
      }
    }
    diagonal.push_back(a(t, t));
    ++t;
  }
  SNFResult res;
  res.rank = diagonal.size();
  res.elementary_divisors = normalize_divisors(std::move(diagonal));
  return res;
}

}  // namespace arrtop
