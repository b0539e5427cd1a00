#include "arrtop/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <sstream>

namespace arrtop {

CanonicalSubspace::CanonicalSubspace(std::size_t ambient_dim, Field f, const std::vector<Vector>& equations)
    : ambient_(ambient_dim), field_(f), rows_(0, ambient_dim + 1, f) {
  Matrix m = Matrix::from_rows(equations, ambient_dim + 1, f);
  if (m.cols() != ambient_dim + 1) throw std::invalid_argument("equation length does not match ambient dimension");
  RrefResult rr = rref(m);
  if (!rr.pivot_columns.empty() && rr.pivot_columns.back() == ambient_dim) {
    empty_ = true;
    Vector row(ambient_dim + 1, Scalar::zero(f));
    row.back() = Scalar::one(f);
    rows_.append_row(row);
    return;
  }
  for (std::size_t r = 0; r < rr.rank; ++r) rows_.append_row(rr.reduced.row(r));
}

CanonicalSubspace CanonicalSubspace::ambient(std::size_t ambient_dim, Field f) {
  return CanonicalSubspace(ambient_dim, f, {});
}

Matrix CanonicalSubspace::linear_part() const {
  Matrix a(rows_.rows(), ambient_, field_);
  for (std::size_t r = 0; r < rows_.rows(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) a(r, c) = rows_(r, c);
  return a;
}

bool CanonicalSubspace::is_central() const {
  if (empty_) return false;
  for (std::size_t r = 0; r < rows_.rows(); ++r)
    if (!rows_(r, ambient_).is_zero()) return false;
  return true;
}

CanonicalSubspace CanonicalSubspace::intersect(const CanonicalSubspace& o) const {
  if (o.ambient_ != ambient_ || o.field_ != field_) throw std::invalid_argument("intersecting subspaces of different spaces");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < rows_.rows(); ++r) rows.push_back(rows_.row_vector(r));
  for (std::size_t r = 0; r < o.rows_.rows(); ++r) rows.push_back(o.rows_.row_vector(r));
  return CanonicalSubspace(ambient_, field_, rows);
}

bool CanonicalSubspace::contained_in(const CanonicalSubspace& o) const {
  if (empty_) return true;
  if (o.empty_) return false;
  if (o.codim() > codim()) return false;
  return intersect(o) == *this;
}

bool CanonicalSubspace::contains_point(std::span<const Scalar> x) const {
  if (empty_) return false;
  if (x.size() != ambient_) throw std::invalid_argument("point dimension mismatch");
  for (std::size_t r = 0; r < rows_.rows(); ++r) {
    Scalar s = Scalar::zero(field_);
    for (std::size_t c = 0; c < ambient_; ++c) s += rows_(r, c) * x[c];
    if (s != rows_(r, ambient_)) return false;
  }
  return true;
}

std::string CanonicalSubspace::key() const {
  std::ostringstream os;
  os << field_name(field_) << ':' << ambient_ << (empty_ ? ":E" : ":") ;
  for (std::size_t r = 0; r < rows_.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < rows_.cols(); ++c) os << rows_(r, c).to_string() << ',';
    os << ']';
  }
  return os.str();
}

InconsistentPlaneError::InconsistentPlaneError(std::size_t i, const std::string& label)
    : std::runtime_error("plane " + std::to_string(i + 1) + (label.empty() ? "" : " (" + label + ")") +
                         " has inconsistent equations"),
      index(i) {}

Arrangement::Arrangement(std::size_t ambient_dim, Field f, const std::vector<PlaneSpec>& planes)
    : ambient_(ambient_dim), field_(f), specs_(planes) {
  if (ambient_dim == 0) throw std::invalid_argument("ambient dimension must be positive");
  if (planes.empty()) throw std::invalid_argument("an arrangement needs at least one plane");
  if (planes.size() > 64) throw SizeLimitError("at most 64 planes are supported");
  for (std::size_t i = 0; i < planes.size(); ++i) {
    for (const auto& row : planes[i].equations) {
      if (row.size() != ambient_dim + 1)
        throw std::invalid_argument("plane " + std::to_string(i + 1) + ": equation has " + std::to_string(row.size()) +
                                    " entries, expected " + std::to_string(ambient_dim + 1));
      for (const auto& v : row)
        if (v.field() != f) throw std::invalid_argument("plane " + std::to_string(i + 1) + ": coefficient field mismatch");
    }
    CanonicalSubspace s(ambient_dim, f, planes[i].equations);
    if (s.is_empty()) throw InconsistentPlaneError(i, planes[i].label);
    if (s.codim() == 0)
      throw std::invalid_argument("plane " + std::to_string(i + 1) + " is the whole ambient space");
    planes_.push_back(std::move(s));
    labels_.push_back(planes[i].label.empty() ? "L" + std::to_string(i + 1) : planes[i].label);
  }
}

bool Arrangement::all_hyperplanes() const {
  return std::all_of(planes_.begin(), planes_.end(), [](const auto& p) { return p.codim() == 1; });
}

bool Arrangement::is_central() const {
  return std::all_of(planes_.begin(), planes_.end(), [](const auto& p) { return p.is_central(); });
}

CanonicalSubspace Arrangement::intersection(std::uint64_t mask) const {
  CanonicalSubspace s = CanonicalSubspace::ambient(ambient_, field_);
  for (std::size_t i = 0; i < planes_.size(); ++i)
    if (mask >> i & 1) {
      s = s.intersect(planes_[i]);
      if (s.is_empty()) break;
    }
  return s;
}

Arrangement realify(const Arrangement& arr) {
  if (arr.field() != Field::QI) throw std::invalid_argument("realify expects a Q(i) arrangement");
  const std::size_t n = arr.ambient_dim();
  std::vector<PlaneSpec> specs;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    PlaneSpec ps{arr.label(i), {}};
    const Matrix& eq = arr.plane(i).equations();
    for (std::size_t r = 0; r < eq.rows(); ++r) {
      Vector re_row(2 * n + 1, Scalar::zero(Field::Q)), im_row(2 * n + 1, Scalar::zero(Field::Q));
      for (std::size_t c = 0; c < n; ++c) {
        const Rational& alpha = eq(r, c).re();
        const Rational& beta = eq(r, c).im();
        re_row[c] = Scalar(alpha);
        re_row[n + c] = Scalar(Rational(-beta));
        im_row[c] = Scalar(beta);
        im_row[n + c] = Scalar(alpha);
      }
      re_row[2 * n] = Scalar(eq(r, n).re());
      im_row[2 * n] = Scalar(eq(r, n).im());
      ps.equations.push_back(std::move(re_row));
      ps.equations.push_back(std::move(im_row));
    }
    specs.push_back(std::move(ps));
  }
  Arrangement out(2 * n, Field::Q, specs);
  out.complex_source_ = std::make_shared<const Arrangement>(arr);
  return out;
}

Arrangement complexify(const Arrangement& arr) {
  if (arr.field() != Field::Q) throw std::invalid_argument("complexify expects a Q arrangement");
  std::vector<PlaneSpec> specs;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    PlaneSpec ps{arr.label(i), {}};
    for (const auto& row : arr.specs()[i].equations) {
      Vector r;
      for (const auto& v : row) r.push_back(v.in_field(Field::QI));
      ps.equations.push_back(std::move(r));
    }
    specs.push_back(std::move(ps));
  }
  return Arrangement(arr.ambient_dim(), Field::QI, specs);
}

Arrangement diagonal_arrangement(std::size_t n, std::size_t k, Field f) {
  if (k < 2 || k > n) throw std::invalid_argument("diagonal arrangement needs 2 <= k <= N");
  std::vector<PlaneSpec> specs;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    PlaneSpec ps;
    ps.label = "V";
    for (auto i : idx) ps.label += std::to_string(i + 1);
    for (std::size_t t = 1; t < k; ++t) {
      Vector row(n + 1, Scalar::zero(f));
      row[idx[0]] = Scalar::one(f);
      row[idx[t]] = -Scalar::one(f);
      ps.equations.push_back(std::move(row));
    }
    specs.push_back(std::move(ps));
    std::size_t p = k;
    while (p > 0 && idx[p - 1] == n - k + p - 1) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return Arrangement(n, f, specs);
}

Arrangement coordinate_cross(std::size_t n, Field f) {
  std::vector<PlaneSpec> specs;
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(n + 1, Scalar::zero(f));
    row[i] = Scalar::one(f);
    specs.push_back({"x" + std::to_string(i + 1), {row}});
  }
  return Arrangement(n, f, specs);
}

Arrangement hyperplanes_from_ints(std::size_t n, const std::vector<std::vector<long>>& rows, Field f) {
  std::vector<PlaneSpec> specs;
  for (const auto& r : rows) {
    if (r.size() != n + 1) throw std::invalid_argument("hyperplane row length mismatch");
    Vector v;
    for (long x : r) v.push_back(Scalar::from_int(x, f));
    specs.push_back({"", {v}});
  }
  return Arrangement(n, f, specs);
}

namespace {

int compare_rows(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      auto o = a(r, c) <=> b(r, c);
      if (o != 0) return o < 0 ? -1 : 1;
    }
  return 0;
}

}  // namespace

IntersectionPoset::IntersectionPoset(const Arrangement& arr) : ambient_(arr.ambient_dim()), m_(arr.size()) {
  std::map<std::string, std::size_t> seen;
  std::vector<CanonicalSubspace> spaces;
  std::deque<std::size_t> queue;
  auto add = [&](CanonicalSubspace s) {
    auto [it, inserted] = seen.emplace(s.key(), spaces.size());
    if (inserted) {
      spaces.push_back(std::move(s));
      queue.push_back(it->second);
    }
  };
  for (const auto& p : arr.planes()) add(p);
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& p : arr.planes()) {
      if (spaces[x].contained_in(p)) continue;
      CanonicalSubspace s = spaces[x].intersect(p);
      if (!s.is_empty()) add(std::move(s));
    }
  }

  std::vector<PosetNode> nodes;
  for (auto& s : spaces) {
    PosetNode n;
    for (std::size_t i = 0; i < m_; ++i)
      if (s.contained_in(arr.plane(i))) n.generators |= std::uint64_t{1} << i;
    n.dim = s.dim();
    n.codim = s.codim();
    n.space = std::move(s);
    nodes.push_back(std::move(n));
  }
  std::sort(nodes.begin(), nodes.end(), [](const PosetNode& a, const PosetNode& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return compare_rows(a.space.equations(), b.space.equations()) < 0;
  });
  nodes_ = std::move(nodes);

  const std::size_t n = nodes_.size();
  below_.assign(n, {});
  above_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && (nodes_[a].generators & nodes_[b].generators) == nodes_[a].generators &&
          nodes_[a].generators != nodes_[b].generators) {
        below_[b].push_back(a);
        above_[a].push_back(b);
      }
  mobius_.assign(n, 0);
  rank_.assign(n, 1);
  for (std::size_t x = 0; x < n; ++x) {
    long s = -1;
    for (auto y : below_[x]) {
      s -= mobius_[y];
      rank_[x] = std::max(rank_[x], rank_[y] + 1);
    }
    mobius_[x] = s;
  }
  plane_nodes_.resize(m_);
  for (std::size_t i = 0; i < m_; ++i) plane_nodes_[i] = *find(arr.plane(i));
}

bool IntersectionPoset::less(std::size_t a, std::size_t b) const {
  return std::binary_search(below_[b].begin(), below_[b].end(), a);
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionPoset::order_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < size(); ++b)
    for (auto a : below_[b]) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < size(); ++b)
    for (auto a : below_[b]) {
      bool covering = true;
      for (auto c : below_[b])
        if (c != a && less(a, c)) {
          covering = false;
          break;
        }
      if (covering) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

long IntersectionPoset::mobius(std::size_t lo, std::size_t hi) const {
  if (lo == hi) return 1;
  if (!less(lo, hi)) return 0;
  // Nodes are sorted by codim, so every interval element between lo and hi
  // has an index between them.
  std::map<std::size_t, long> mu{{lo, 1}};
  for (std::size_t z = lo + 1; z <= hi; ++z) {
    if (!less(lo, z) || (z != hi && !less(z, hi))) continue;
    long s = 0;
    for (const auto& [y, v] : mu)
      if (y == lo || less(y, z)) s -= v;
    mu[z] = s;
  }
  return mu[hi];
}

std::optional<std::size_t> IntersectionPoset::find(const CanonicalSubspace& s) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].space == s) return i;
  return std::nullopt;
}

std::optional<std::size_t> IntersectionPoset::node_of_generators(std::uint64_t mask) const {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if ((nodes_[i].generators & mask) == mask && (!best || nodes_[i].dim > nodes_[*best].dim)) best = i;
  return best;
}

DimensionSignature dimensional_data(const IntersectionPoset& poset) {
  const std::size_t m = poset.plane_count();
  if (m > kMaxSignaturePlanes)
    throw SizeLimitError("dimensional data needs m <= " + std::to_string(kMaxSignaturePlanes) + " (got " +
                         std::to_string(m) + ")");
  DimensionSignature sig{m, std::vector<int>(std::size_t{1} << m, -1)};
  for (const auto& n : poset.nodes())
    sig.dims[n.generators] = std::max(sig.dims[n.generators], static_cast<int>(n.dim));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t s = sig.dims.size(); s-- > 0;)
      if (!(s >> i & 1)) sig.dims[s] = std::max(sig.dims[s], sig.dims[s | (std::size_t{1} << i)]);
  sig.dims[0] = static_cast<int>(poset.ambient_dim());
  return sig;
}

DimensionSignature dimensional_data(const Arrangement& arr) {
  if (arr.size() > kMaxSignaturePlanes)
    throw SizeLimitError("dimensional data needs m <= " + std::to_string(kMaxSignaturePlanes) + " (got " +
                         std::to_string(arr.size()) + ")");
  return dimensional_data(IntersectionPoset(arr));
}

bool is_normal_crossings(const Arrangement& arr, const IntersectionPoset& poset) {
  if (!arr.all_hyperplanes()) throw std::invalid_argument("normal crossings test needs hyperplanes");
  for (const auto& n : poset.nodes())
    if (n.codim != static_cast<std::size_t>(std::popcount(n.generators))) return false;
  return true;
}

bool is_normal_crossings(const Arrangement& arr) { return is_normal_crossings(arr, IntersectionPoset(arr)); }

bool is_generic(const Arrangement& arr) {
  if (!arr.all_hyperplanes()) throw std::invalid_argument("genericity test needs hyperplanes");
  const std::size_t n = arr.ambient_dim();
  std::vector<Vector> homog;
  for (const auto& p : arr.planes()) {
    Vector v = p.equations().row_vector(0);
    v.back() = -v.back();
    homog.push_back(std::move(v));
  }
  Vector improper(n + 1, Scalar::zero(arr.field()));
  improper.back() = Scalar::one(arr.field());
  homog.push_back(improper);

  const std::size_t total = homog.size();
  const std::size_t s = std::min(total, n + 1);
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  std::size_t checked = 0;
  while (true) {
    if (++checked > 2'000'000) throw SizeLimitError("genericity test: too many subsets");
    std::vector<Vector> rows;
    for (auto i : idx) rows.push_back(homog[i]);
    if (rank(Matrix::from_rows(rows, n + 1, arr.field())) < s) return false;
    std::size_t p = s;
    while (p > 0 && idx[p - 1] == total - s + p - 1) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (std::size_t q = p; q < s; ++q) idx[q] = idx[q - 1] + 1;
  }
  return true;
}

bool transversal(const IntersectionPoset& poset, std::size_t a, std::size_t b) {
  CanonicalSubspace s = poset.node(a).space.intersect(poset.node(b).space);
  if (s.is_empty()) return false;
  return s.codim() == poset.node(a).codim + poset.node(b).codim;
}

bool is_ge2_arrangement(const IntersectionPoset& poset) {
  for (std::size_t b = 0; b < poset.size(); ++b)
    for (auto a : poset.below(b))
      if (poset.node(a).dim - poset.node(b).dim < 2) return false;
  return true;
}

}  // namespace arrtop
