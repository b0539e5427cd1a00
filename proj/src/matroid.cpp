#include "arrtop/matroid.hpp"

#include <bit>
#include <stdexcept>

namespace arrtop {

RankFunction::RankFunction(std::size_t size) : m(size), r(std::size_t{1} << size, 0) {
  if (size > kMaxMatroidElements)
    throw SizeLimitError("rank functions need m <= " + std::to_string(kMaxMatroidElements));
}

RankFunction matroid_from_arrangement(const Arrangement& arr) {
  if (!arr.all_hyperplanes()) throw std::invalid_argument("matroid needs hyperplanes");
  if (!arr.is_central()) throw std::invalid_argument("matroid needs a central arrangement");
  RankFunction rf(arr.size());
  const std::size_t n = arr.ambient_dim();
  for (std::uint32_t s = 1; s < rf.r.size(); ++s) {
    Matrix rows(0, n, arr.field());
    for (std::size_t i = 0; i < arr.size(); ++i)
      if (s >> i & 1) {
        auto row = arr.plane(i).equations().row(0);
        rows.append_row(row.first(n));
      }
    rf[s] = static_cast<int>(rank(rows));
  }
  return rf;
}

std::string subset_name(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < 32; ++i)
    if (mask >> i & 1) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

std::vector<AxiomViolation> check_matroid_axioms(const RankFunction& r, bool empty_rank_zero) {
  std::vector<AxiomViolation> out;
  const std::uint32_t full = static_cast<std::uint32_t>(r.r.size());
  auto value = [&](std::uint32_t s) { return s == 0 && empty_rank_zero ? 0 : r(s); };
  for (std::uint32_t s = 1; s < full; ++s) {
    const int k = std::popcount(s);
    if (r(s) < 1 || r(s) > k)
      out.push_back({1, s, 0, "r(" + subset_name(s) + ") = " + std::to_string(r(s)) + " outside [1, " + std::to_string(k) + "]"});
  }
  for (std::uint32_t s = 1; s < full; ++s)
    for (std::size_t a = 0; a < r.m; ++a) {
      const std::uint32_t t = s | (1u << a);
      if (t != s && r(s) > r(t))
        out.push_back({2, s, t, "r(" + subset_name(s) + ") > r(" + subset_name(t) + ")"});
    }
  for (std::uint32_t s = empty_rank_zero ? 0 : 1; s < full; ++s)
    for (std::size_t a = 0; a < r.m; ++a) {
      if (s >> a & 1) continue;
      for (std::size_t b = a + 1; b < r.m; ++b) {
        if (s >> b & 1) continue;
        const std::uint32_t i = s | (1u << a), j = s | (1u << b);
        if (value(s) + r(i | j) > r(i) + r(j))
          out.push_back({3, i, j,
                         "r(" + subset_name(s) + ") + r(" + subset_name(i | j) + ") > r(" + subset_name(i) + ") + r(" +
                             subset_name(j) + ")"});
      }
    }
  return out;
}

bool same_dimensional_data(const Arrangement& a, const Arrangement& b) {
  if (a.size() != b.size()) throw std::invalid_argument("arrangements have different numbers of planes");
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("arrangements have different ambient dimensions");
  return dimensional_data(a) == dimensional_data(b);
}

std::string MnevConstraint::name() const {
  std::string s = "r(";
  for (std::size_t k = 0; k < lines.size(); ++k) s += (k ? ",L" : "L") + std::to_string(lines[k]);
  return s + ")=" + std::to_string(required);
}

bool MnevReport::passed() const {
  if (construction_failure) return false;
  for (const auto& c : constraints)
    if (!c.holds()) return false;
  return true;
}

std::string MnevReport::verdict() const {
  if (construction_failure) return "FAIL at construction: " + *construction_failure;
  for (const auto& c : constraints)
    if (!c.holds()) return "FAIL at " + c.name();
  return "PASS";
}

namespace {

Vector cross(const Vector& u, const Vector& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

int rank_of(const std::vector<Vector>& rows) { return static_cast<int>(rank(Matrix::from_rows(rows, 3, Field::QI))); }

}  // namespace

MnevReport mnev_check(const Scalar& alpha_in) {
  const Scalar alpha = alpha_in.in_field(Field::QI);
  if (alpha.is_zero()) throw std::invalid_argument("alpha must be nonzero");
  auto c = [](long v) { return Scalar::from_int(v, Field::QI); };
  MnevReport rep;
  rep.alpha = alpha;
  auto& L = rep.lines;
  L.push_back({c(0), c(0), c(1)});   // L1, the improper line
  L.push_back({c(1), c(0), c(0)});   // L2: x = 0
  L.push_back({c(0), c(1), c(0)});   // L3: y = 0
  L.push_back({c(1), c(1), c(-1)});  // L4: x + y = 1
  auto meet = [&](int i, int j) { return cross(L[i - 1], L[j - 1]); };
  auto add = [&](int k, const Vector& p, const Vector& q, const char* how) {
    Vector line = cross(p, q);
    if (is_zero(line)) {
      rep.construction_failure = "L" + std::to_string(k) + " undefined (" + how + ")";
      return false;
    }
    for (std::size_t j = 0; j < L.size(); ++j)
      if (rank_of({line, L[j]}) == 1) {
        rep.construction_failure = "L" + std::to_string(k) + " = L" + std::to_string(j + 1);
        L.push_back(line);
        return false;
      }
    L.push_back(line);
    return true;
  };
  const Vector on_l2{c(0), alpha, c(1)};
  bool ok = add(5, meet(3, 4), on_l2, "through L3∩L4 and (0,alpha)") &&
            add(6, meet(5, 2), meet(4, 1), "through L5∩L2 parallel to L4") &&
            add(7, meet(6, 3), meet(5, 1), "through L6∩L3 parallel to L5") &&
            add(8, meet(7, 2), meet(6, 1), "through L7∩L2 parallel to L6") &&
            add(9, meet(3, 4), meet(2, 7), "through L3∩L4 and L2∩L7") &&
            add(10, meet(2, 4), meet(3, 8), "through L2∩L4 and L3∩L8");
  if (!ok) return rep;

  const std::vector<std::pair<std::vector<int>, int>> spec = {
      {{1, 2, 3}, 3},     {{1, 2, 4}, 3},    {{1, 3, 4}, 3},     {{2, 3, 4}, 3},     {{3, 4, 5}, 2},
      {{2, 5, 6}, 2},     {{1, 4, 6}, 2},    {{3, 6, 7}, 2},     {{1, 5, 7}, 2},     {{2, 7, 8}, 2},
      {{1, 4, 6, 8}, 2},  {{3, 4, 5, 9}, 2}, {{2, 7, 8, 9}, 2},  {{2, 4, 10}, 2},    {{3, 8, 10}, 2},
      {{1, 9, 10}, 2},
  };
  for (const auto& [lines, required] : spec) {
    std::vector<Vector> rows;
    for (int l : lines) rows.push_back(L[l - 1]);
    rep.constraints.push_back({lines, required, rank_of(rows)});
  }
  return rep;
}

}  // namespace arrtop
