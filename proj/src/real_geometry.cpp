#include "arrtop/real_geometry.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace arrtop {

namespace {

bool holds_trivially(const LinearConstraint& c) { return c.strict ? 0 > c.b : 0 >= c.b; }

bool is_zero_vector(const std::vector<Rational>& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// Scales so the first nonzero coefficient is ±1 and drops redundant copies.
bool normalize(std::vector<LinearConstraint>& cs) {
  std::map<std::vector<Rational>, LinearConstraint> best;
  std::vector<LinearConstraint> out;
  for (auto& c : cs) {
    if (is_zero_vector(c.a)) {
      if (!holds_trivially(c)) return false;
      continue;
    }
    auto it = std::find_if(c.a.begin(), c.a.end(), [](const Rational& x) { return sgn(x) != 0; });
    Rational s = abs(*it);
    if (s != 1) {
      for (auto& x : c.a) x /= s;
      c.b /= s;
    }
    auto [pos, inserted] = best.try_emplace(c.a, c);
    if (!inserted) {
      LinearConstraint& old = pos->second;
      if (c.b > old.b || (c.b == old.b && c.strict)) old = c;
    }
  }
  cs.clear();
  for (auto& [a, c] : best) cs.push_back(std::move(c));
  return true;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(a[i]) != 0) s += a[i] * x[i];
  return s;
}

}  // namespace

std::optional<std::vector<Rational>> fm_feasible(std::size_t n, std::vector<LinearConstraint> cs) {
  for (const auto& c : cs)
    if (c.a.size() != n) throw std::invalid_argument("constraint length mismatch");
  if (!normalize(cs)) return std::nullopt;
  if (n == 0) return std::vector<Rational>{};
  const std::size_t v = n - 1;
  std::vector<LinearConstraint> lower, upper, next;
  for (auto& c : cs) {
    const int s = sgn(c.a[v]);
    if (s > 0) lower.push_back(c);
    else if (s < 0) upper.push_back(c);
    else {
      c.a.pop_back();
      next.push_back(std::move(c));
    }
  }
  for (const auto& l : lower)
    for (const auto& u : upper) {
      const Rational p = l.a[v], q = -u.a[v];
      LinearConstraint c;
      c.a.resize(v);
      for (std::size_t i = 0; i < v; ++i) c.a[i] = q * l.a[i] + p * u.a[i];
      c.b = q * l.b + p * u.b;
      c.strict = l.strict || u.strict;
      next.push_back(std::move(c));
    }
  auto rest = fm_feasible(v, std::move(next));
  if (!rest) return std::nullopt;

  std::optional<Rational> lo, hi;
  bool lo_strict = false, hi_strict = false;
  for (const auto& l : lower) {
    Rational x = (l.b - dot(l.a, *rest)) / l.a[v];
    if (!lo || x > *lo) {
      lo = x;
      lo_strict = l.strict;
    } else if (x == *lo) {
      lo_strict = lo_strict || l.strict;
    }
  }
  for (const auto& u : upper) {
    Rational x = (u.b - dot(u.a, *rest)) / u.a[v];
    if (!hi || x < *hi) {
      hi = x;
      hi_strict = u.strict;
    } else if (x == *hi) {
      hi_strict = hi_strict || u.strict;
    }
  }
  Rational t = 0;
  if (lo && hi) {
    if (*lo > *hi || (*lo == *hi && (lo_strict || hi_strict)))
      throw std::logic_error("Fourier-Motzkin back substitution failed");
    t = (*lo + *hi) / 2;
  } else if (lo) {
    t = *lo + 1;
  } else if (hi) {
    t = *hi - 1;
  }
  rest->push_back(t);
  return rest;
}

Rational AffineForm::operator()(const std::vector<Rational>& x) const { return dot(a, x) + c; }

std::optional<std::vector<Rational>> sign_cell_witness(std::size_t n, const std::vector<AffineForm>& forms,
                                                       const std::vector<int>& signs) {
  if (forms.size() != signs.size()) throw std::invalid_argument("sign vector length mismatch");
  Matrix eq(0, n, Field::Q);
  Vector rhs;
  for (std::size_t k = 0; k < forms.size(); ++k) {
    if (signs[k] != 0) continue;
    Vector row;
    for (const auto& x : forms[k].a) row.emplace_back(x);
    eq.append_row(row);
    rhs.emplace_back(-forms[k].c);
  }
  std::vector<Rational> p(n, 0);
  std::vector<std::vector<Rational>> basis;
  if (eq.rows() > 0) {
    auto sol = solve_affine(eq, rhs);
    if (!sol) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) p[i] = sol->point[i].re();
    for (const auto& k : sol->kernel) {
      std::vector<Rational> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = k[i].re();
      basis.push_back(std::move(v));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> v(n, 0);
      v[i] = 1;
      basis.push_back(std::move(v));
    }
  }
  const std::size_t d = basis.size();
  std::vector<LinearConstraint> cs;
  for (std::size_t k = 0; k < forms.size(); ++k) {
    if (signs[k] == 0) continue;
    LinearConstraint c;
    c.a.resize(d);
    for (std::size_t j = 0; j < d; ++j) c.a[j] = signs[k] * dot(forms[k].a, basis[j]);
    c.b = -signs[k] * forms[k](p);
    cs.push_back(std::move(c));
  }
  auto t = fm_feasible(d, std::move(cs));
  if (!t) return std::nullopt;
  std::vector<Rational> x = p;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) x[i] += (*t)[j] * basis[j][i];
  return x;
}

namespace {

struct SignCell {
  std::vector<int> signs;
  std::vector<Rational> witness;
};

// All cells with every sign nonzero.
std::vector<SignCell> full_cells(std::size_t n, const std::vector<AffineForm>& forms) {
  std::vector<SignCell> cells{{{}, std::vector<Rational>(n, 0)}};
  for (std::size_t k = 0; k < forms.size(); ++k) {
    std::vector<AffineForm> prefix(forms.begin(), forms.begin() + static_cast<std::ptrdiff_t>(k + 1));
    std::vector<SignCell> next;
    for (const auto& cell : cells) {
      const int here = sgn(forms[k](cell.witness));
      for (int s : {1, -1}) {
        std::vector<int> signs = cell.signs;
        signs.push_back(s);
        if (here == s) {
          next.push_back({std::move(signs), cell.witness});
        } else if (auto w = sign_cell_witness(n, prefix, signs)) {
          next.push_back({std::move(signs), std::move(*w)});
        }
      }
    }
    cells = std::move(next);
  }
  return cells;
}

void require_real_hyperplanes(const Arrangement& arr) {
  if (arr.field() != Field::Q) throw std::invalid_argument("real geometry needs a real arrangement (field Q)");
  if (!arr.all_hyperplanes()) throw std::invalid_argument("real geometry needs hyperplanes");
}

std::string sign_string(const std::vector<int>& s) {
  std::string out;
  for (int x : s) out += x > 0 ? '+' : '-';
  return out;
}

bool recession_cone_trivial(const std::vector<AffineForm>& forms, const std::vector<int>& signs, std::size_t n) {
  std::vector<LinearConstraint> cone;
  for (std::size_t k = 0; k < forms.size(); ++k) {
    LinearConstraint c;
    for (const auto& x : forms[k].a) c.a.push_back(signs[k] * x);
    c.b = 0;
    c.strict = false;
    cone.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      auto cs = cone;
      LinearConstraint dir;
      dir.a.assign(n, 0);
      dir.a[i] = s;
      dir.b = 0;
      cs.push_back(std::move(dir));
      if (fm_feasible(n, std::move(cs))) return false;
    }
  return true;
}

}  // namespace

std::vector<AffineForm> hyperplane_forms(const Arrangement& arr) {
  require_real_hyperplanes(arr);
  std::vector<AffineForm> forms;
  const std::size_t n = arr.ambient_dim();
  for (const auto& p : arr.planes()) {
    AffineForm f;
    for (std::size_t c = 0; c < n; ++c) f.a.push_back(p.equations()(0, c).re());
    f.c = -p.equations()(0, n).re();
    forms.push_back(std::move(f));
  }
  return forms;
}

std::vector<Region> enumerate_regions(const Arrangement& arr) {
  const auto forms = hyperplane_forms(arr);
  const std::size_t n = arr.ambient_dim();
  std::vector<Region> out;
  for (auto& cell : full_cells(n, forms)) {
    Region r;
    r.signs = sign_string(cell.signs);
    r.bounded = recession_cone_trivial(forms, cell.signs, n);
    r.witness = std::move(cell.witness);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Region& a, const Region& b) { return a.signs < b.signs; });
  return out;
}

std::size_t count_bounded(const Arrangement& arr) {
  auto regions = enumerate_regions(arr);
  return static_cast<std::size_t>(std::count_if(regions.begin(), regions.end(), [](const Region& r) { return r.bounded; }));
}

long SalvettiCensus::total() const {
  long t = added_point;
  for (const auto& [d, c] : cells_by_dim) t += c;
  return t;
}

long SalvettiCensus::euler_characteristic() const {
  long chi = added_point;
  for (const auto& [d, c] : cells_by_dim) chi += d % 2 == 0 ? c : -c;
  return chi;
}

std::optional<int> salvetti_cell_dim(const Arrangement& arr, const std::string& sequence) {
  const auto forms = hyperplane_forms(arr);
  const std::size_t n = arr.ambient_dim();
  if (sequence.size() != forms.size()) throw std::invalid_argument("sign sequence length mismatch");
  std::vector<AffineForm> big;
  std::vector<int> signs;
  Matrix eq(0, 2 * n, Field::Q);
  for (std::size_t j = 0; j < forms.size(); ++j) {
    AffineForm re, im;
    re.a = forms[j].a;
    re.a.resize(2 * n, 0);
    re.c = forms[j].c;
    im.a.assign(n, 0);
    im.a.insert(im.a.end(), forms[j].a.begin(), forms[j].a.end());
    im.c = 0;
    switch (sequence[j]) {
      case '+': big.push_back(re); signs.push_back(1); break;
      case '-': big.push_back(re); signs.push_back(-1); break;
      case '^':
      case 'v': {
        Vector row;
        for (const auto& x : re.a) row.emplace_back(x);
        eq.append_row(row);
        big.push_back(re);
        signs.push_back(0);
        big.push_back(im);
        signs.push_back(sequence[j] == '^' ? 1 : -1);
        break;
      }
      default: throw std::invalid_argument("sign sequence uses characters + - ^ v");
    }
  }
  if (!sign_cell_witness(2 * n, big, signs)) return std::nullopt;
  return static_cast<int>(2 * n - rank(eq));
}

namespace {

void require_salvetti_size(const Arrangement& arr) {
  if (arr.size() > kMaxSalvettiPlanes)
    throw SizeLimitError("Salvetti census needs m <= " + std::to_string(kMaxSalvettiPlanes));
}

}  // namespace

SalvettiCensus salvetti_census(const Arrangement& arr) {
  const auto forms = hyperplane_forms(arr);
  require_salvetti_size(arr);
  const std::size_t n = arr.ambient_dim(), m = forms.size();
  SalvettiCensus census;
  census.ambient_dim = n;
  for (std::uint32_t z = 0; z < (1u << m); ++z) {
    // Real part: cells of the other forms restricted to L_Z.
    std::vector<AffineForm> zero_forms, imag_forms;
    std::vector<int> zero_signs;
    for (std::size_t j = 0; j < m; ++j)
      if (z >> j & 1) {
        zero_forms.push_back(forms[j]);
        zero_signs.push_back(0);
        imag_forms.push_back({forms[j].a, 0});
      }
    auto p = sign_cell_witness(n, zero_forms, zero_signs);
    if (!p) continue;
    Matrix eq(0, n, Field::Q);
    for (const auto& f : zero_forms) {
      Vector row;
      for (const auto& x : f.a) row.emplace_back(x);
      eq.append_row(row);
    }
    std::vector<std::vector<Rational>> basis;
    for (const auto& k : kernel_basis(eq)) {
      std::vector<Rational> v;
      for (const auto& x : k) v.push_back(x.re());
      basis.push_back(std::move(v));
    }
    const std::size_t d = basis.size();
    std::vector<AffineForm> restricted;
    bool degenerate = false;
    for (std::size_t j = 0; j < m && !degenerate; ++j) {
      if (z >> j & 1) continue;
      AffineForm g;
      for (const auto& b : basis) g.a.push_back(dot(forms[j].a, b));
      g.c = forms[j](*p);
      if (is_zero_vector(g.a) && sgn(g.c) == 0) degenerate = true;
      restricted.push_back(std::move(g));
    }
    if (degenerate) continue;
    const long real_cells = static_cast<long>(full_cells(d, restricted).size());
    const long imag_cells = static_cast<long>(full_cells(n, imag_forms).size());
    if (real_cells * imag_cells > 0) census.cells_by_dim[static_cast<int>(d + n)] += real_cells * imag_cells;
  }
  return census;
}

SalvettiCensus salvetti_census_bruteforce(const Arrangement& arr) {
  require_real_hyperplanes(arr);
  require_salvetti_size(arr);
  const std::size_t m = arr.size();
  SalvettiCensus census;
  census.ambient_dim = arr.ambient_dim();
  std::string seq(m, '+');
  const char alphabet[4] = {'+', '-', '^', 'v'};
  std::size_t total = std::size_t{1} << (2 * m);
  for (std::size_t code = 0; code < total; ++code) {
    for (std::size_t j = 0; j < m; ++j) seq[j] = alphabet[(code >> (2 * j)) & 3];
    if (auto d = salvetti_cell_dim(arr, seq)) ++census.cells_by_dim[*d];
  }
  return census;
}

std::map<int, long> ImaginaryWedgeCensus::bm_ranks() const {
  std::map<int, long> r;
  for (const auto& c : cells) ++r[c.dim];
  return r;
}

ImaginaryWedgeCensus imaginary_wedge_census(const Arrangement& arr) {
  require_real_hyperplanes(arr);
  IntersectionPoset poset(arr);
  if (!is_normal_crossings(arr, poset)) throw std::invalid_argument("imaginary wedges need normal crossings");
  const int top = static_cast<int>(2 * arr.ambient_dim());
  ImaginaryWedgeCensus w;
  w.ambient_dim = arr.ambient_dim();
  w.cells.push_back({0, top});
  for (const auto& node : poset.nodes())
    w.cells.push_back({node.generators, top - std::popcount(node.generators)});
  return w;
}

}  // namespace arrtop
