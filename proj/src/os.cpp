#include "arrtop/os.hpp"

#include "arrtop/complexes.hpp"

#include <algorithm>
#include <bit>

namespace arrtop {

namespace {

void require_central_hyperplanes(const Arrangement& arr) {
  if (!arr.all_hyperplanes()) throw std::invalid_argument("Orlik-Solomon algebra needs hyperplanes");
  if (!arr.is_central()) throw std::invalid_argument("Orlik-Solomon algebra needs a central arrangement");
}

std::size_t subset_rank(const Arrangement& arr, std::uint32_t mask) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (mask >> i & 1) rows.push_back(arr.plane(i).equations().row_vector(0));
  return rank(Matrix::from_rows(rows, arr.ambient_dim() + 1, arr.field()));
}

Monomial to_monomial(std::uint32_t mask) {
  Monomial m;
  for (std::size_t i = 0; i < 32; ++i)
    if (mask >> i & 1) m.push_back(i);
  return m;
}

}  // namespace

std::vector<Monomial> dependent_sets(const Arrangement& arr) {
  require_central_hyperplanes(arr);
  if (arr.size() > 16) throw SizeLimitError("circuit search needs m <= 16");
  std::vector<Monomial> out;
  const std::uint32_t full = 1u << arr.size();
  for (std::uint32_t s = 1; s < full; ++s)
    if (subset_rank(arr, s) < static_cast<std::size_t>(std::popcount(s))) out.push_back(to_monomial(s));
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Monomial> circuits(const Arrangement& arr) {
  require_central_hyperplanes(arr);
  if (arr.size() > 16) throw SizeLimitError("circuit search needs m <= 16");
  const std::size_t m = arr.size();
  std::vector<std::uint32_t> found;
  for (std::size_t k = 2; k <= m; ++k)
    for (const auto& sub : k_subsets(m, k)) {
      std::uint32_t s = 0;
      for (auto i : sub) s |= 1u << i;
      bool has_circuit = std::any_of(found.begin(), found.end(), [&](std::uint32_t c) { return (c & s) == c; });
      if (has_circuit) continue;
      if (subset_rank(arr, s) < k) found.push_back(s);
    }
  std::vector<Monomial> out;
  for (auto s : found) out.push_back(to_monomial(s));
  return out;
}

std::pair<int, Monomial> wedge(const Monomial& s, const Monomial& t) {
  Monomial u;
  std::size_t inversions = 0, i = 0, j = 0;
  while (i < s.size() || j < t.size()) {
    if (j == t.size() || (i < s.size() && s[i] < t[j])) {
      u.push_back(s[i++]);
    } else if (i == s.size() || t[j] < s[i]) {
      inversions += s.size() - i;
      u.push_back(t[j++]);
    } else {
      return {0, {}};
    }
  }
  return {inversions % 2 == 0 ? 1 : -1, u};
}

OSElement os_boundary(const Monomial& c) {
  OSElement out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    Monomial f = c;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
    out[f] += j % 2 == 0 ? 1 : -1;
  }
  return out;
}

namespace {

// Adds `row` to the reduced row set of degree `deg` if it is independent.
void insert_relation(OSDegree& deg, std::vector<Rational> row) {
  for (std::size_t r = 0; r < deg.relations.size(); ++r) {
    const Rational f = row[deg.pivots[r]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (deg.relations[r][c] != 0) row[c] -= f * deg.relations[r][c];
  }
  std::size_t p = 0;
  while (p < row.size() && row[p] == 0) ++p;
  if (p == row.size()) return;
  const Rational inv = 1 / row[p];
  for (auto& x : row) x *= inv;
  for (std::size_t r = 0; r < deg.relations.size(); ++r) {
    const Rational f = deg.relations[r][p];
    if (f == 0) continue;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) deg.relations[r][c] -= f * row[c];
  }
  deg.relations.push_back(std::move(row));
  deg.pivots.push_back(p);
}

}  // namespace

OSAlgebra os_algebra(const Arrangement& arr, bool all_dependent_sets) {
  require_central_hyperplanes(arr);
  if (arr.size() > kMaxOSGenerators)
    throw SizeLimitError("Orlik-Solomon algebra needs m <= " + std::to_string(kMaxOSGenerators));
  OSAlgebra alg;
  alg.m = arr.size();
  alg.circuits = all_dependent_sets ? dependent_sets(arr) : circuits(arr);
  std::vector<OSElement> bd;
  for (const auto& c : alg.circuits) bd.push_back(os_boundary(c));

  for (std::size_t d = 0; d <= alg.m; ++d) {
    OSDegree deg;
    deg.monomials = k_subsets(alg.m, d).empty() && d == 0 ? std::vector<Monomial>{Monomial{}} : std::vector<Monomial>{};
    for (const auto& s : k_subsets(alg.m, d)) deg.monomials.emplace_back(s.begin(), s.end());
    std::sort(deg.monomials.begin(), deg.monomials.end(), std::greater<>());
    for (std::size_t c = 0; c < deg.monomials.size(); ++c) deg.column[deg.monomials[c]] = c;
    const std::size_t width = deg.monomials.size();
    for (std::size_t ci = 0; ci < alg.circuits.size() && deg.relations.size() < width; ++ci) {
      const std::size_t c = alg.circuits[ci].size();
      if (c == 0 || c - 1 > d) continue;
      for (const auto& sv : k_subsets(alg.m, d - (c - 1))) {
        if (deg.relations.size() == width) break;
        Monomial s(sv.begin(), sv.end());
        std::vector<Rational> row(width, 0);
        bool nonzero = false;
        for (const auto& [t, coef] : bd[ci]) {
          auto [sign, u] = wedge(s, t);
          if (sign == 0) continue;
          row[deg.column.at(u)] += coef * sign;
          nonzero = true;
        }
        if (nonzero) insert_relation(deg, std::move(row));
      }
    }
    std::vector<bool> pivot(width, false);
    for (auto p : deg.pivots) pivot[p] = true;
    for (std::size_t c = 0; c < width; ++c)
      if (!pivot[c]) deg.basis.push_back(deg.monomials[c]);
    std::sort(deg.basis.begin(), deg.basis.end());
    alg.dims.push_back(deg.basis.size());
    alg.degrees.push_back(std::move(deg));
  }
  while (alg.dims.size() > 1 && alg.dims.back() == 0) {
    alg.dims.pop_back();
    alg.degrees.pop_back();
  }
  return alg;
}

OSElement os_normal_form(const OSElement& x, const OSAlgebra& alg) {
  std::map<std::size_t, OSElement> by_degree;
  for (const auto& [mono, c] : x)
    if (c != 0) by_degree[mono.size()][mono] += c;
  OSElement out;
  for (auto& [d, part] : by_degree) {
    if (d >= alg.degrees.size()) continue;
    const OSDegree& deg = alg.degrees[d];
    std::vector<Rational> v(deg.monomials.size(), 0);
    for (const auto& [mono, c] : part) v[deg.column.at(mono)] += c;
    for (std::size_t r = 0; r < deg.relations.size(); ++r) {
      const Rational f = v[deg.pivots[r]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (deg.relations[r][c] != 0) v[c] -= f * deg.relations[r][c];
    }
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) out[deg.monomials[c]] = v[c];
  }
  return out;
}

OSElement os_product(const OSElement& x, const OSElement& y, const OSAlgebra& alg) {
  OSElement raw;
  for (const auto& [s, a] : x)
    for (const auto& [t, b] : y) {
      auto [sign, u] = wedge(s, t);
      if (sign != 0) raw[u] += a * b * sign;
    }
  return os_normal_form(raw, alg);
}

std::vector<long> os_poincare_polynomial(const Arrangement& arr) {
  OSAlgebra alg = os_algebra(arr);
  return std::vector<long>(alg.dims.begin(), alg.dims.end());
}

Arrangement cone(const Arrangement& arr) {
  if (!arr.all_hyperplanes()) throw std::invalid_argument("coning needs hyperplanes");
  const std::size_t n = arr.ambient_dim();
  const Field f = arr.field();
  std::vector<PlaneSpec> specs;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Matrix& eq = arr.plane(i).equations();
    Vector row(n + 2, Scalar::zero(f));
    for (std::size_t c = 0; c < n; ++c) row[c] = eq(0, c);
    row[n] = -eq(0, n);
    specs.push_back({arr.label(i), {row}});
  }
  Vector inf(n + 2, Scalar::zero(f));
  inf[n] = Scalar::one(f);
  specs.push_back({"H0", {inf}});
  return Arrangement(n + 1, f, specs);
}

std::vector<long> decone_polynomial(const std::vector<long>& p) {
  std::vector<long> q;
  long carry = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    long c = p[k] - carry;
    q.push_back(c);
    carry = c;
  }
  if (!p.empty() && p.back() != carry) throw std::logic_error("polynomial is not divisible by 1 + t");
  if (q.empty()) q.push_back(0);
  return q;
}

}  // namespace arrtop
