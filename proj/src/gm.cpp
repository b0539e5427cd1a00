#include "arrtop/gm.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace arrtop {

namespace {

std::map<int, GroupSummary> combine(const std::map<int, std::vector<GroupSummary>>& parts) {
  std::map<int, GroupSummary> out;
  for (const auto& [d, gs] : parts) {
    GroupSummary g;
    std::vector<Integer> tors;
    for (const auto& x : gs) {
      g.rank += x.rank;
      for (long t : x.torsion) tors.emplace_back(t);
    }
    for (const auto& t : normalize_divisors(std::move(tors)))
      if (t > 1) g.torsion.push_back(t.get_si());
    out[d] = std::move(g);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> GMReport::betti() const {
  std::vector<std::size_t> b(ambient_dim, 0);
  for (const auto& [d, g] : totals)
    if (d >= 0 && static_cast<std::size_t>(d) < ambient_dim) b[static_cast<std::size_t>(d)] = g.rank;
  if (!b.empty()) b[0] += 1;
  return b;
}

bool GMReport::has_torsion() const {
  return std::any_of(totals.begin(), totals.end(), [](const auto& kv) { return !kv.second.torsion.empty(); });
}

Arrangement real_form(const Arrangement& arr) { return arr.field() == Field::QI ? realify(arr) : arr; }

GMReport gm_report(const IntersectionPoset& poset, Field source_field, std::size_t max_faces) {
  GMReport r;
  r.ambient_dim = poset.ambient_dim();
  r.source_field = source_field;
  const int n = static_cast<int>(r.ambient_dim);
  std::map<int, std::vector<GroupSummary>> parts;
  for (int i = 0; i < n; ++i) parts[i];
  for (std::size_t x = 0; x < poset.size(); ++x) {
    const PosetNode& node = poset.node(x);
    HomologySummary h = homology(local_order_pair(poset, x), false, max_faces);
    for (const auto& [j, g] : h.degrees) {
      if (g.rank == 0 && g.torsion.empty()) continue;
      GMContribution c;
      c.node = x;
      c.generators = node.generators;
      c.node_dim = node.dim;
      c.pair_degree = j;
      c.degree = n - j - static_cast<int>(node.dim) - 1;
      c.group = g;
      c.filtration = node.codim;
      parts[c.degree].push_back(g);
      r.contributions.push_back(std::move(c));
    }
  }
  std::stable_sort(r.contributions.begin(), r.contributions.end(), [](const auto& a, const auto& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.node < b.node;
  });
  r.totals = combine(parts);
  return r;
}

GMReport gm_report(const Arrangement& arr, std::size_t max_faces) {
  Arrangement real = real_form(arr);
  return gm_report(IntersectionPoset(real), arr.field(), max_faces);
}

WedgeSummary wedge_summary(const Arrangement& arr, std::size_t max_faces) {
  Arrangement real = real_form(arr);
  IntersectionPoset poset(real);
  WedgeSummary w;
  w.ambient_dim = real.ambient_dim();
  std::map<int, std::vector<GroupSummary>> parts;
  for (std::size_t q = 0; q < w.ambient_dim; ++q) parts[static_cast<int>(q)];
  for (std::size_t x = 0; x < poset.size(); ++x) {
    WedgeSummand s;
    s.node = x;
    s.generators = poset.node(x).generators;
    s.node_dim = poset.node(x).dim;
    s.pair = homology(local_order_pair(poset, x), false, max_faces);
    for (const auto& [j, g] : s.pair.degrees)
      if (g.rank > 0 || !g.torsion.empty()) parts[j + static_cast<int>(s.node_dim)].push_back(g);
    w.summands.push_back(std::move(s));
  }
  w.totals = combine(parts);
  return w;
}

bool alexander_dual(const WedgeSummary& w, const GMReport& r) {
  if (w.ambient_dim != r.ambient_dim) return false;
  const int n = static_cast<int>(w.ambient_dim);
  auto get = [](const std::map<int, GroupSummary>& m, int d) {
    auto it = m.find(d);
    return it == m.end() ? GroupSummary{} : it->second;
  };
  for (const auto& [q, g] : w.totals)
    if (q < 0 || q >= n) {
      if (g.rank != 0 || !g.torsion.empty()) return false;
    }
  for (const auto& [i, g] : r.totals)
    if (i < 0 || i >= n) {
      if (g.rank != 0 || !g.torsion.empty()) return false;
    }
  for (int q = 0; q < n; ++q)
    if (!(get(w.totals, q) == get(r.totals, n - 1 - q))) return false;
  return true;
}

std::vector<Coorientation> default_coorientations(const Arrangement& real_arr, const IntersectionPoset& poset) {
  std::vector<Coorientation> frames;
  const Arrangement* cs = real_arr.complex_source();
  for (const auto& node : poset.nodes()) {
    if (cs == nullptr) {
      frames.push_back(node.space.linear_part());
      continue;
    }
    Matrix w = cs->intersection(node.generators).linear_part();
    const std::size_t n = cs->ambient_dim();
    Matrix f(0, 2 * n, Field::Q);
    for (std::size_t r = 0; r < w.rows(); ++r) {
      Vector re_row(2 * n, Scalar::zero(Field::Q)), im_row(2 * n, Scalar::zero(Field::Q));
      for (std::size_t c = 0; c < n; ++c) {
        re_row[c] = Scalar(w(r, c).re());
        re_row[n + c] = Scalar(Rational(-w(r, c).im()));
        im_row[c] = Scalar(w(r, c).im());
        im_row[n + c] = Scalar(w(r, c).re());
      }
      f.append_row(re_row);
      f.append_row(im_row);
    }
    frames.push_back(std::move(f));
  }
  return frames;
}

bool is_relative_cycle(const GradedClass& c, const IntersectionPoset& poset) {
  std::map<Face, Integer> bd;
  for (const auto& [face, coef] : c.chain) {
    if (face.empty() || face.back() != c.node || static_cast<int>(face.size()) != c.pair_degree + 1) return false;
    for (std::size_t k = 0; k + 1 < face.size(); ++k)
      if (!poset.less(face[k], face[k + 1])) return false;
    for (std::size_t j = 0; j + 1 < face.size(); ++j) {
      Face f = face;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
      bd[f] += j % 2 == 0 ? coef : Integer(-coef);
    }
  }
  return std::all_of(bd.begin(), bd.end(), [](const auto& kv) { return kv.second == 0; });
}

int coorientation_sign(const std::vector<Coorientation>& frames, std::size_t a, std::size_t b, std::size_t k) {
  if (a >= frames.size() || b >= frames.size() || k >= frames.size())
    throw std::invalid_argument("shuffle product: orientation data missing for a node");
  const Matrix& fk = frames[k];
  const std::size_t ck = fk.rows();
  if (frames[a].rows() + frames[b].rows() != ck) throw std::logic_error("coorientation sizes do not add up");
  Matrix fkt(fk.cols(), ck, Field::Q);
  for (std::size_t r = 0; r < ck; ++r)
    for (std::size_t c = 0; c < fk.cols(); ++c) fkt(c, r) = fk(r, c);
  Matrix t(0, ck, Field::Q);
  for (const Matrix* src : {&frames[a], &frames[b]})
    for (std::size_t r = 0; r < src->rows(); ++r) {
      auto sol = solve_affine(fkt, src->row(r));
      if (!sol) throw std::logic_error("coorientation of a factor is not normal to the intersection");
      t.append_row(sol->point);
    }
  int s = determinant_sign(t);
  if (s == 0) throw std::logic_error("coorientation frames are not transversal");
  return s;
}

std::optional<GradedClass> shuffle_product(const GradedClass& a, const GradedClass& b, const IntersectionPoset& poset,
                                           const std::vector<Coorientation>& frames) {
  const PosetNode& ni = poset.node(a.node);
  const PosetNode& nj = poset.node(b.node);
  CanonicalSubspace meet_space = ni.space.intersect(nj.space);
  if (meet_space.is_empty() || meet_space.codim() != ni.codim + nj.codim) return std::nullopt;
  auto k = poset.node_of_generators(ni.generators | nj.generators);
  if (!k || !(poset.node(*k).space == meet_space)) throw std::logic_error("intersection of two nodes is not a node");

  const int u = a.pair_degree, v = b.pair_degree;
  int sign = coorientation_sign(frames, a.node, b.node, *k);
  if ((nj.codim * static_cast<std::size_t>(u + 1)) % 2 == 1) sign = -sign;

  std::unordered_map<std::uint64_t, std::size_t> meet_cache;
  auto meet = [&](std::size_t x, std::size_t y) {
    std::uint64_t key = poset.node(x).generators | poset.node(y).generators;
    auto it = meet_cache.find(key);
    if (it != meet_cache.end()) return it->second;
    auto m = poset.node_of_generators(key);
    if (!m) throw std::logic_error("meet of two nodes is empty");
    meet_cache.emplace(key, *m);
    return *m;
  };

  const std::size_t la = static_cast<std::size_t>(u) + 1, lb = static_cast<std::size_t>(v) + 1;
  const auto positions = k_subsets(la + lb, la);
  GradedClass out;
  out.node = *k;
  out.pair_degree = u + v + 1;
  Face seq(la + lb);
  for (const auto& [fa, ca] : a.chain)
    for (const auto& [fb, cb] : b.chain) {
      for (const auto& pos : positions) {
        std::size_t ia = 0, ib = 0, inversions = 0;
        std::optional<std::size_t> last_a, last_b;
        for (std::size_t s = 0; s < la + lb; ++s) {
          if (ia < la && pos[ia] == s) {
            std::size_t x = fa[ia++];
            seq[s] = static_cast<std::uint32_t>(last_b ? meet(x, *last_b) : x);
            last_a = x;
            inversions += ib;
          } else {
            std::size_t y = fb[ib++];
            seq[s] = static_cast<std::uint32_t>(last_a ? meet(y, *last_a) : y);
            last_b = y;
          }
        }
        bool degenerate = false;
        for (std::size_t s = 0; s + 1 < seq.size(); ++s) {
          if (seq[s] == seq[s + 1]) {
            degenerate = true;
            break;
          }
          if (!poset.less(seq[s], seq[s + 1])) throw std::logic_error("shuffle produced a non-monotone sequence");
        }
        if (degenerate) continue;
        Integer c = ca * cb;
        if ((inversions % 2 == 1) != (sign < 0)) c = -c;
        out.chain[seq] += c;
      }
    }
  for (auto it = out.chain.begin(); it != out.chain.end();)
    it = it->second == 0 ? out.chain.erase(it) : std::next(it);
  return out;
}

namespace {

// Rational relative homology of one local pair, computed from chains ending
// at the node.
struct LocalHomologyQ {
  std::vector<std::vector<Face>> cells;                 // by pair degree
  std::vector<std::map<Face, std::size_t>> index;       // by pair degree
  std::vector<std::vector<Vector>> basis;               // homology cycles, by degree
  std::vector<Matrix> solver;                           // [basis | boundaries] by degree
};

void chains_ending_at(const IntersectionPoset& poset, std::size_t x, Face& suffix, std::vector<std::vector<Face>>& out) {
  Face chain(suffix.rbegin(), suffix.rend());
  if (out.size() < chain.size()) out.resize(chain.size());
  out[chain.size() - 1].push_back(chain);
  for (auto y : poset.below(x)) {
    suffix.push_back(static_cast<std::uint32_t>(y));
    chains_ending_at(poset, y, suffix, out);
    suffix.pop_back();
  }
}

Matrix boundary_q(const LocalHomologyQ& h, std::size_t u) {
  // ∂_u : C_u -> C_{u-1}; the face dropping the node itself lies in the subcomplex.
  const std::size_t rows = u == 0 ? 0 : h.cells[u - 1].size();
  Matrix m(rows, h.cells[u].size(), Field::Q);
  if (u == 0) return m;
  for (std::size_t c = 0; c < h.cells[u].size(); ++c) {
    const Face& f = h.cells[u][c];
    for (std::size_t j = 0; j + 1 < f.size(); ++j) {
      Face g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
      m(h.index[u - 1].at(g), c) += Scalar(Rational(j % 2 == 0 ? 1 : -1));
    }
  }
  return m;
}

Vector primitive(Vector v) {
  Integer l = 1, g = 0;
  for (const auto& x : v) l = lcm(l, x.re().get_den());
  for (auto& x : v) {
    x = Scalar(Rational(x.re() * l));
    g = gcd(g, x.re().get_num());
  }
  if (g > 1)
    for (auto& x : v) x = Scalar(Rational(x.re() / g));
  return v;
}

LocalHomologyQ local_homology_q(const IntersectionPoset& poset, std::size_t x) {
  LocalHomologyQ h;
  Face suffix{static_cast<std::uint32_t>(x)};
  chains_ending_at(poset, x, suffix, h.cells);
  const std::size_t top = h.cells.size();
  h.index.resize(top);
  for (std::size_t u = 0; u < top; ++u) {
    std::sort(h.cells[u].begin(), h.cells[u].end());
    for (std::size_t c = 0; c < h.cells[u].size(); ++c) h.index[u][h.cells[u][c]] = c;
  }
  h.basis.resize(top);
  h.solver.resize(top);
  for (std::size_t u = 0; u < top; ++u) {
    const std::size_t n = h.cells[u].size();
    std::vector<Vector> cycles = kernel_basis(boundary_q(h, u));
    std::vector<Vector> bounds;
    if (u + 1 < top) {
      Matrix b = boundary_q(h, u + 1);
      for (std::size_t c = 0; c < b.cols(); ++c) {
        Vector col(n, Scalar::zero(Field::Q));
        for (std::size_t r = 0; r < n; ++r) col[r] = b(r, c);
        bounds.push_back(std::move(col));
      }
    }
    // Cycles independent modulo boundaries.
    Matrix span = Matrix::from_rows(bounds, n, Field::Q);
    std::size_t rk = rank(span);
    for (auto& z : cycles) {
      Matrix trial = span;
      trial.append_row(z);
      std::size_t r2 = rank(trial);
      if (r2 > rk) {
        span = std::move(trial);
        rk = r2;
        h.basis[u].push_back(primitive(z));
      }
    }
    std::vector<Vector> cols = h.basis[u];
    cols.insert(cols.end(), bounds.begin(), bounds.end());
    Matrix solver(n, cols.size(), Field::Q);
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < n; ++r) solver(r, c) = cols[c][r];
    h.solver[u] = std::move(solver);
  }
  return h;
}

}  // namespace

std::map<std::size_t, Rational> RingTable::multiply(const std::map<std::size_t, Rational>& x,
                                                    const std::map<std::size_t, Rational>& y) const {
  std::map<std::size_t, Rational> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      auto it = products.find({a, b});
      if (it == products.end()) continue;
      for (const auto& [c, cc] : it->second) out[c] += ca * cb * cc;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::optional<std::size_t> RingTable::find(std::uint64_t generators, int degree) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].unit && basis[i].generators == generators && basis[i].degree == degree) return i;
  return std::nullopt;
}

RingTable graded_ring_table(const Arrangement& real_arr, const std::vector<Coorientation>& frames,
                            std::size_t max_faces) {
  if (real_arr.field() != Field::Q) throw std::invalid_argument("ring table expects a real arrangement");
  IntersectionPoset poset(real_arr);
  if (frames.size() != poset.size()) throw std::invalid_argument("ring table: one coorientation per node is required");
  RingTable t;
  t.ambient_dim = poset.ambient_dim();
  t.frames = frames;
  RingBasisElement unit;
  unit.unit = true;
  t.basis.push_back(unit);

  const int n = static_cast<int>(poset.ambient_dim());
  std::vector<LocalHomologyQ> local;
  std::vector<std::vector<std::size_t>> first_id(poset.size());
  for (std::size_t x = 0; x < poset.size(); ++x) {
    HomologySummary hz = homology(local_order_pair(poset, x), false, max_faces);
    if (hz.has_torsion()) {
      std::string s = "node " + std::to_string(x) + ": torsion classes skipped";
      t.notes.push_back(s);
    }
    local.push_back(local_homology_q(poset, x));
    const auto& lh = local.back();
    first_id[x].assign(lh.basis.size(), 0);
    for (std::size_t u = 0; u < lh.basis.size(); ++u) {
      first_id[x][u] = t.basis.size();
      for (const auto& z : lh.basis[u]) {
        RingBasisElement e;
        e.node = x;
        e.generators = poset.node(x).generators;
        e.degree = n - static_cast<int>(u) - static_cast<int>(poset.node(x).dim) - 1;
        e.cycle.node = x;
        e.cycle.pair_degree = static_cast<int>(u);
        for (std::size_t c = 0; c < z.size(); ++c)
          if (!z[c].is_zero()) e.cycle.chain[lh.cells[u][c]] = z[c].re().get_num();
        t.basis.push_back(std::move(e));
      }
    }
  }

  for (std::size_t i = 0; i < t.basis.size(); ++i) {
    t.products[{0, i}] = {{i, Rational(1)}};
    if (i != 0) t.products[{i, 0}] = {{i, Rational(1)}};
  }
  for (std::size_t i = 1; i < t.basis.size(); ++i)
    for (std::size_t j = 1; j < t.basis.size(); ++j) {
      auto p = shuffle_product(t.basis[i].cycle, t.basis[j].cycle, poset, frames);
      if (!p || p->chain.empty()) continue;
      const auto& lh = local[p->node];
      const std::size_t u = static_cast<std::size_t>(p->pair_degree);
      if (u >= lh.cells.size() || lh.basis[u].empty()) continue;
      Vector rhs(lh.cells[u].size(), Scalar::zero(Field::Q));
      for (const auto& [f, c] : p->chain) rhs[lh.index[u].at(f)] = Scalar(Rational(c));
      auto sol = solve_affine(lh.solver[u], rhs);
      if (!sol) throw std::logic_error("shuffle product is not a relative cycle");
      std::map<std::size_t, Rational> coords;
      for (std::size_t k = 0; k < lh.basis[u].size(); ++k)
        if (!sol->point[k].is_zero()) coords[first_id[p->node][u] + k] = sol->point[k].re();
      if (!coords.empty()) t.products[{i, j}] = std::move(coords);
    }
  return t;
}

RingTable graded_ring_table(const Arrangement& arr, std::size_t max_faces) {
  Arrangement real = real_form(arr);
  IntersectionPoset poset(real);
  return graded_ring_table(real, default_coorientations(real, poset), max_faces);
}

}  // namespace arrtop
