#include "arrtop/homology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <span>
#include <unordered_map>

namespace arrtop {

void SparseColumns::add_column(std::vector<std::pair<std::uint32_t, std::int64_t>> entries) {
  std::sort(entries.begin(), entries.end());
  std::size_t i = 0;
  while (i < entries.size()) {
    std::uint32_t r = entries[i].first;
    std::int64_t v = 0;
    for (; i < entries.size() && entries[i].first == r; ++i) v += entries[i].second;
    if (v == 0) continue;
    if (r >= rows) throw std::out_of_range("sparse entry outside the row range");
    index.push_back(r);
    value.push_back(v);
  }
  start.push_back(index.size());
}

SparseColumns SparseColumns::from_dense(const std::vector<std::vector<long>>& m) {
  SparseColumns s;
  s.rows = m.size();
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<std::pair<std::uint32_t, std::int64_t>> col;
    for (std::size_t r = 0; r < m.size(); ++r)
      if (m[r][c] != 0) col.emplace_back(static_cast<std::uint32_t>(r), m[r][c]);
    s.add_column(std::move(col));
  }
  return s;
}

namespace {

using Entry = std::pair<std::uint32_t, std::int64_t>;
using Column = std::vector<Entry>;

bool checked_axpy(const Column& target, std::int64_t f, const Column& pivot, Column& out) {
  // out = target - f * pivot
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.push_back(target[i++]);
    } else {
      __int128 v = -static_cast<__int128>(f) * pivot[j].second;
      std::uint32_t r = pivot[j].first;
      if (i < target.size() && target[i].first == r) v += target[i++].second;
      ++j;
      if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) return false;
      if (v != 0) out.emplace_back(r, static_cast<std::int64_t>(v));
    }
  }
  return true;
}

}  // namespace

SNFResult sparse_smith(const SparseColumns& m) {
  const std::size_t ncols = m.cols();
  std::vector<Column> cols(ncols);
  std::vector<std::vector<std::uint32_t>> row_cols(m.rows);
  for (std::size_t c = 0; c < ncols; ++c) {
    for (std::size_t k = m.start[c]; k < m.start[c + 1]; ++k) {
      cols[c].emplace_back(m.index[k], m.value[k]);
      row_cols[m.index[k]].push_back(static_cast<std::uint32_t>(c));
    }
  }
  std::vector<bool> active(ncols, true);
  std::size_t unit_rank = 0;
  bool overflow = false;
  Column scratch;

  bool progress = true;
  while (progress && !overflow) {
    progress = false;
    std::vector<std::uint32_t> order;
    for (std::size_t c = 0; c < ncols; ++c)
      if (active[c]) {
        if (cols[c].empty()) {
          active[c] = false;
          continue;
        }
        order.push_back(static_cast<std::uint32_t>(c));
      }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return cols[a].size() < cols[b].size(); });
    for (auto c : order) {
      if (!active[c] || cols[c].empty()) continue;
      // Unit entry whose row meets the fewest columns.
      std::size_t best = cols[c].size();
      for (std::size_t k = 0; k < cols[c].size(); ++k) {
        auto v = cols[c][k].second;
        if (v != 1 && v != -1) continue;
        if (best == cols[c].size() || row_cols[cols[c][k].first].size() < row_cols[cols[c][best].first].size())
          best = k;
      }
      if (best == cols[c].size()) continue;
      const std::uint32_t r = cols[c][best].first;
      const std::int64_t pv = cols[c][best].second;
      std::vector<std::uint32_t> touched = row_cols[r];
      for (auto c2 : touched) {
        if (c2 == c || !active[c2]) continue;
        auto it = std::lower_bound(cols[c2].begin(), cols[c2].end(), Entry{r, std::numeric_limits<std::int64_t>::min()});
        if (it == cols[c2].end() || it->first != r) continue;
        std::int64_t f = it->second * pv;
        if (!checked_axpy(cols[c2], f, cols[c], scratch)) {
          overflow = true;
          break;
        }
        for (const auto& [row, v] : scratch) {
          (void)v;
          if (row != r) row_cols[row].push_back(c2);
        }
        cols[c2].swap(scratch);
      }
      if (overflow) break;
      active[c] = false;
      row_cols[r].clear();
      ++unit_rank;
      progress = true;
    }
    // Deduplicate row membership lists so pivot costs stay honest.
    for (auto& rc : row_cols) {
      std::sort(rc.begin(), rc.end());
      rc.erase(std::unique(rc.begin(), rc.end()), rc.end());
      rc.erase(std::remove_if(rc.begin(), rc.end(), [&](std::uint32_t c) { return !active[c]; }), rc.end());
    }
  }

  // Dense Smith form of whatever is left.
  std::vector<std::uint32_t> rest_cols;
  std::unordered_map<std::uint32_t, std::size_t> row_id;
  for (std::size_t c = 0; c < ncols; ++c)
    if (active[c] && !cols[c].empty()) {
      rest_cols.push_back(static_cast<std::uint32_t>(c));
      for (const auto& e : cols[c]) row_id.emplace(e.first, row_id.size());
    }
  SNFResult res;
  res.rank = unit_rank;
  res.elementary_divisors.assign(unit_rank, Integer(1));
  if (!rest_cols.empty()) {
    if (static_cast<double>(rest_cols.size()) * static_cast<double>(row_id.size()) > 25e6)
      throw BudgetExceeded("dense Smith residual of " + std::to_string(row_id.size()) + "x" +
                           std::to_string(rest_cols.size()) + " is too large");
    IntMatrix dense(row_id.size(), rest_cols.size());
    for (std::size_t j = 0; j < rest_cols.size(); ++j)
      for (const auto& [r, v] : cols[rest_cols[j]]) dense(row_id[r], j) = static_cast<long>(v);
    SNFResult tail = smith_normal_form(std::move(dense));
    res.rank += tail.rank;
    for (auto& d : tail.elementary_divisors) res.elementary_divisors.push_back(d);
  }
  return res;
}

ChainComplexData::ChainComplexData(int lo, std::vector<std::size_t> ranks, std::vector<SparseColumns> boundaries)
    : lo_(lo), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (ranks_.empty()) throw std::invalid_argument("chain complex needs at least one degree");
  if (boundaries_.size() + 1 != ranks_.size()) throw std::invalid_argument("chain complex: wrong number of boundary maps");
  for (std::size_t i = 0; i < boundaries_.size(); ++i) {
    if (boundaries_[i].cols() != ranks_[i + 1] || boundaries_[i].rows != ranks_[i])
      throw std::invalid_argument("chain complex: boundary shape does not match chain ranks");
  }
  // ∂∘∂ = 0
  for (std::size_t i = 1; i < boundaries_.size(); ++i) {
    const SparseColumns& hi = boundaries_[i];
    const SparseColumns& low = boundaries_[i - 1];
    std::vector<__int128> acc(low.rows, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t c = 0; c < hi.cols(); ++c) {
      for (std::size_t k = hi.start[c]; k < hi.start[c + 1]; ++k) {
        std::uint32_t mid = hi.index[k];
        for (std::size_t q = low.start[mid]; q < low.start[mid + 1]; ++q) {
          acc[low.index[q]] += static_cast<__int128>(hi.value[k]) * low.value[q];
          touched.push_back(low.index[q]);
        }
      }
      for (auto r : touched) {
        if (acc[r] != 0)
          throw std::logic_error("boundary of a boundary is nonzero in degree " + std::to_string(lo_ + i + 1));
      }
      touched.clear();
    }
  }
}

std::size_t ChainComplexData::rank(int d) const {
  if (d < lo_ || d > max_degree()) return 0;
  return ranks_[static_cast<std::size_t>(d - lo_)];
}

const SparseColumns& ChainComplexData::boundary(int d) const {
  static const SparseColumns kEmpty;
  if (d <= lo_ || d > max_degree()) return kEmpty;
  return boundaries_[static_cast<std::size_t>(d - lo_ - 1)];
}

std::size_t HomologySummary::rank(int d) const {
  auto it = degrees.find(d);
  return it == degrees.end() ? 0 : it->second.rank;
}

bool HomologySummary::has_torsion() const {
  return std::any_of(degrees.begin(), degrees.end(), [](const auto& kv) { return !kv.second.torsion.empty(); });
}

bool HomologySummary::is_zero() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const auto& kv) { return kv.second.rank == 0 && kv.second.torsion.empty(); });
}

namespace {

struct FlatFaces {
  std::size_t width = 0;
  std::vector<std::uint32_t> data;
  std::size_t size() const { return width == 0 ? 0 : data.size() / width; }
  std::span<const std::uint32_t> at(std::size_t i) const { return {data.data() + i * width, width}; }
};

void sort_unique(FlatFaces& f) {
  const std::size_t n = f.size(), w = f.width;
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0u);
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(f.data.begin() + a * w, f.data.begin() + (a + 1) * w, f.data.begin() + b * w,
                                        f.data.begin() + (b + 1) * w);
  };
  std::sort(idx.begin(), idx.end(), less);
  std::vector<std::uint32_t> out;
  out.reserve(f.data.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && !less(idx[k - 1], idx[k])) continue;
    out.insert(out.end(), f.data.begin() + idx[k] * w, f.data.begin() + (idx[k] + 1) * w);
  }
  f.data.swap(out);
}

std::vector<FlatFaces> enumerate_faces(const SimplicialComplex& c, std::size_t max_faces) {
  const int dim = c.dim();
  std::vector<FlatFaces> out;
  if (dim < 0) return out;
  for (const auto& f : c.facets())
    if (f.size() >= 63 || (std::size_t{1} << f.size()) - 1 > max_faces)
      throw BudgetExceeded("face budget exceeded: a facet with " + std::to_string(f.size()) + " vertices has " +
                           (f.size() >= 63 ? std::string("more than 2^62") : std::to_string((std::size_t{1} << f.size()) - 1)) +
                           " faces (budget " + std::to_string(max_faces) + ")");
  std::size_t total = 0;
  for (int d = 0; d <= dim; ++d) {
    FlatFaces ff;
    ff.width = static_cast<std::size_t>(d) + 1;
    const std::size_t w = ff.width;
    std::vector<std::uint32_t> pick(w);
    for (const auto& f : c.facets()) {
      if (f.size() < w) continue;
      std::vector<std::size_t> idx(w);
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      while (true) {
        for (std::size_t t = 0; t < w; ++t) ff.data.push_back(f[idx[t]]);
        std::size_t p = w;
        while (p > 0 && idx[p - 1] == f.size() - w + p - 1) --p;
        if (p == 0) break;
        ++idx[p - 1];
        for (std::size_t q = p; q < w; ++q) idx[q] = idx[q - 1] + 1;
      }
      if (ff.size() > 4 * max_faces) {
        sort_unique(ff);
        if (total + ff.size() > max_faces)
          throw BudgetExceeded("face budget exceeded: more than " + std::to_string(max_faces) + " faces");
      }
    }
    sort_unique(ff);
    total += ff.size();
    if (total > max_faces) throw BudgetExceeded("face budget exceeded: more than " + std::to_string(max_faces) + " faces");
    out.push_back(std::move(ff));
  }
  return out;
}

// Faces of `a` that are not in `b` (both sorted, same width).
FlatFaces difference(const FlatFaces& a, const FlatFaces* b) {
  if (b == nullptr || b->size() == 0) return a;
  FlatFaces out;
  out.width = a.width;
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto x = a.at(i);
    while (j < b->size() && std::lexicographical_compare(b->at(j).begin(), b->at(j).end(), x.begin(), x.end())) ++j;
    if (j < b->size() && std::equal(x.begin(), x.end(), b->at(j).begin())) continue;
    out.data.insert(out.data.end(), x.begin(), x.end());
  }
  return out;
}

std::uint64_t hash_face(std::span<const std::uint32_t> x) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto v : x) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return h ^ (h >> 29);
}

// Open-addressing index from a face to its position in a FlatFaces list.
class FaceIndex {
 public:
  explicit FaceIndex(const FlatFaces& f) : faces_(&f) {
    std::size_t cap = 16;
    while (cap < 2 * f.size() + 1) cap <<= 1;
    mask_ = cap - 1;
    slots_.assign(cap, kEmpty);
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::size_t s = hash_face(f.at(i)) & mask_;
      while (slots_[s] != kEmpty) s = (s + 1) & mask_;
      slots_[s] = static_cast<std::uint32_t>(i);
    }
  }
  std::int64_t find(std::span<const std::uint32_t> x) const {
    std::size_t s = hash_face(x) & mask_;
    while (slots_[s] != kEmpty) {
      auto y = faces_->at(slots_[s]);
      if (std::equal(x.begin(), x.end(), y.begin())) return slots_[s];
      s = (s + 1) & mask_;
    }
    return -1;
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;
  const FlatFaces* faces_;
  std::size_t mask_ = 0;
  std::vector<std::uint32_t> slots_;
};

}  // namespace

std::vector<std::vector<std::uint32_t>> faces_by_degree(const SimplicialComplex& c, std::size_t max_faces) {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& ff : enumerate_faces(c, max_faces)) out.push_back(std::move(ff.data));
  return out;
}

ChainComplexData chain_complex(const SimplicialPair& pair, bool reduced, std::size_t max_faces) {
  auto total = enumerate_faces(pair.total, max_faces);
  std::size_t budget_left = max_faces;
  for (const auto& t : total) budget_left -= t.size();
  auto sub = enumerate_faces(pair.sub, max_faces);
  const bool augment = reduced && pair.sub.empty();
  const int lo = augment ? -1 : 0;
  const int hi = std::max(pair.total.dim(), 0);

  std::vector<FlatFaces> rel;
  for (std::size_t d = 0; d < total.size(); ++d) rel.push_back(difference(total[d], d < sub.size() ? &sub[d] : nullptr));

  std::vector<std::size_t> ranks;
  if (augment) ranks.push_back(1);
  for (int d = 0; d <= hi; ++d) ranks.push_back(static_cast<std::size_t>(d) < rel.size() ? rel[d].size() : 0);

  std::vector<SparseColumns> bd;
  if (augment) {
    SparseColumns s;
    s.rows = 1;
    for (std::size_t c = 0; c < ranks[1]; ++c) s.add_column({{0u, 1}});
    bd.push_back(std::move(s));
  }
  std::vector<FaceIndex> lookup;
  for (const auto& r : rel) lookup.emplace_back(r);
  std::vector<std::uint32_t> buf;
  for (int d = 1; d <= hi; ++d) {
    SparseColumns s;
    s.rows = ranks[static_cast<std::size_t>(d - lo - 1)];
    const std::size_t n = static_cast<std::size_t>(d) < rel.size() ? rel[d].size() : 0;
    s.index.reserve(n * static_cast<std::size_t>(d + 1));
    s.value.reserve(n * static_cast<std::size_t>(d + 1));
    s.start.reserve(n + 1);
    for (std::size_t c = 0; c < n; ++c) {
      auto cell = rel[d].at(c);
      std::vector<std::pair<std::uint32_t, std::int64_t>> col;
      for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j) {
        buf.assign(cell.begin(), cell.end());
        buf.erase(buf.begin() + static_cast<std::ptrdiff_t>(j));
        std::int64_t r = lookup[d - 1].find(buf);
        if (r >= 0) col.emplace_back(static_cast<std::uint32_t>(r), j % 2 == 0 ? 1 : -1);
      }
      s.add_column(std::move(col));
    }
    bd.push_back(std::move(s));
  }
  ChainComplexData cc(lo, std::move(ranks), std::move(bd));
  cc.set_reduced(reduced);
  // Cone pairs σ ↔ σ ∪ {v} for the first vertex v, top dimension first.  For a
  // full simplex modulo a subcomplex these collapse everything except the
  // cells whose link with v lands in the subcomplex.
  if (!pair.total.facets().empty()) {
    const std::uint32_t v = pair.total.facets().front().front();
    for (int d = hi; d >= 1; --d) {
      const FlatFaces& up = rel[d];
      for (std::size_t c = 0; c < up.size(); ++c) {
        auto cell = up.at(c);
        if (cell.front() != v) continue;
        std::int64_t r = lookup[d - 1].find(cell.subspan(1));
        if (r >= 0) cc.collapse_hints.push_back({d, static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(r)});
      }
    }
  }
  return cc;
}

ChainComplexData chain_complex(const SimplicialComplex& c, bool reduced, std::size_t max_faces) {
  return chain_complex(SimplicialPair{c, SimplicialComplex(c.labels(), {})}, reduced, max_faces);
}

HomologySummary homology(const ChainComplexData& cc) {
  const int lo = cc.min_degree(), hi = cc.max_degree();
  const std::size_t nd = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::size_t> offset(nd + 1, 0);
  for (std::size_t i = 0; i < nd; ++i) offset[i + 1] = offset[i] + cc.rank(lo + static_cast<int>(i));
  const std::size_t ncells = offset[nd];
  auto degree_of = [&](std::size_t cell) {
    return static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), cell) - offset.begin()) - 1;
  };

  // Coboundary (transposed) structure per degree.
  std::vector<std::vector<std::size_t>> co_start(nd);
  std::vector<std::vector<std::uint32_t>> co_index(nd);
  std::vector<std::vector<std::int64_t>> co_value(nd);
  for (std::size_t i = 0; i + 1 < nd; ++i) {
    const SparseColumns& b = cc.boundary(lo + static_cast<int>(i) + 1);
    std::vector<std::size_t> count(cc.rank(lo + static_cast<int>(i)) + 1, 0);
    for (auto r : b.index) ++count[r + 1];
    std::partial_sum(count.begin(), count.end(), count.begin());
    co_start[i] = count;
    co_index[i].resize(b.nnz());
    co_value[i].resize(b.nnz());
    std::vector<std::size_t> fill(count.begin(), count.end() - 1);
    for (std::size_t c = 0; c < b.cols(); ++c)
      for (std::size_t k = b.start[c]; k < b.start[c + 1]; ++k) {
        std::size_t pos = fill[b.index[k]]++;
        co_index[i][pos] = static_cast<std::uint32_t>(c);
        co_value[i][pos] = b.value[k];
      }
  }

  std::vector<char> alive(ncells, 1);
  std::vector<std::uint32_t> nface(ncells, 0), ncoface(ncells, 0);
  for (std::size_t i = 0; i < nd; ++i) {
    const int d = lo + static_cast<int>(i);
    const SparseColumns& b = cc.boundary(d);
    for (std::size_t c = 0; c < cc.rank(d); ++c) {
      nface[offset[i] + c] = i == 0 ? 0 : static_cast<std::uint32_t>(b.start[c + 1] - b.start[c]);
      ncoface[offset[i] + c] = i + 1 < nd ? static_cast<std::uint32_t>(co_start[i][c + 1] - co_start[i][c]) : 0;
    }
  }

  std::vector<std::size_t> stack(ncells);
  std::iota(stack.rbegin(), stack.rend(), std::size_t{0});
  auto remove = [&](std::size_t cell) {
    alive[cell] = 0;
    const std::size_t i = degree_of(cell);
    const std::size_t c = cell - offset[i];
    if (i > 0) {
      const SparseColumns& b = cc.boundary(lo + static_cast<int>(i));
      for (std::size_t k = b.start[c]; k < b.start[c + 1]; ++k) {
        std::size_t f = offset[i - 1] + b.index[k];
        if (alive[f]) {
          --ncoface[f];
          stack.push_back(f);
        }
      }
    }
    if (i + 1 < nd) {
      for (std::size_t k = co_start[i][c]; k < co_start[i][c + 1]; ++k) {
        std::size_t g = offset[i + 1] + co_index[i][k];
        if (alive[g]) {
          --nface[g];
          stack.push_back(g);
        }
      }
    }
  };
  for (const auto& hint : cc.collapse_hints) {
    if (hint.degree <= lo || hint.degree > hi) continue;
    const std::size_t i = static_cast<std::size_t>(hint.degree - lo);
    const std::size_t up = offset[i] + hint.cell, down = offset[i - 1] + hint.face;
    if (!alive[up] || !alive[down] || ncoface[down] != 1) continue;
    const SparseColumns& b = cc.boundary(hint.degree);
    auto first = b.index.begin() + static_cast<std::ptrdiff_t>(b.start[hint.cell]);
    auto last = b.index.begin() + static_cast<std::ptrdiff_t>(b.start[hint.cell + 1]);
    auto it = std::lower_bound(first, last, hint.face);
    if (it == last || *it != hint.face) continue;
    auto v = b.value[static_cast<std::size_t>(it - b.index.begin())];
    if (v != 1 && v != -1) continue;
    remove(down);
    remove(up);
  }
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    if (!alive[x]) continue;
    const std::size_t i = degree_of(x);
    const std::size_t c = x - offset[i];
    if (ncoface[x] == 1) {
      for (std::size_t k = co_start[i][c]; k < co_start[i][c + 1]; ++k) {
        std::size_t g = offset[i + 1] + co_index[i][k];
        if (!alive[g]) continue;
        if (co_value[i][k] == 1 || co_value[i][k] == -1) {
          remove(x);
          remove(g);
        }
        break;
      }
    } else if (nface[x] == 1) {
      const SparseColumns& b = cc.boundary(lo + static_cast<int>(i));
      for (std::size_t k = b.start[c]; k < b.start[c + 1]; ++k) {
        std::size_t f = offset[i - 1] + b.index[k];
        if (!alive[f]) continue;
        if (b.value[k] == 1 || b.value[k] == -1) {
          remove(x);
          remove(f);
        }
        break;
      }
    }
  }

  // Restrict to surviving cells and take Smith forms degree by degree.
  std::vector<std::vector<std::uint32_t>> new_id(nd);
  std::vector<std::size_t> live(nd, 0);
  for (std::size_t i = 0; i < nd; ++i) {
    new_id[i].assign(cc.rank(lo + static_cast<int>(i)), 0);
    for (std::size_t c = 0; c < new_id[i].size(); ++c)
      if (alive[offset[i] + c]) new_id[i][c] = static_cast<std::uint32_t>(live[i]++);
  }
  std::vector<SNFResult> snf(nd);
  for (std::size_t i = 1; i < nd; ++i) {
    const SparseColumns& b = cc.boundary(lo + static_cast<int>(i));
    SparseColumns r;
    r.rows = live[i - 1];
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (!alive[offset[i] + c]) continue;
      std::vector<std::pair<std::uint32_t, std::int64_t>> col;
      for (std::size_t k = b.start[c]; k < b.start[c + 1]; ++k)
        if (alive[offset[i - 1] + b.index[k]]) col.emplace_back(new_id[i - 1][b.index[k]], b.value[k]);
      r.add_column(std::move(col));
    }
    snf[i] = sparse_smith(r);
  }

  HomologySummary h;
  h.reduced = cc.reduced();
  for (std::size_t i = 0; i < nd; ++i) {
    const int d = lo + static_cast<int>(i);
    GroupSummary g;
    std::size_t rk_out = snf[i].rank;
    std::size_t rk_in = i + 1 < nd ? snf[i + 1].rank : 0;
    g.rank = live[i] - rk_out - rk_in;
    if (i + 1 < nd)
      for (const auto& dv : snf[i + 1].elementary_divisors)
        if (dv > 1) {
          if (!dv.fits_slong_p()) throw std::overflow_error("torsion coefficient does not fit in a machine integer");
          g.torsion.push_back(dv.get_si());
        }
    if (d < 0 && g.rank == 0 && g.torsion.empty()) continue;
    h.degrees[d] = std::move(g);
  }
  return h;
}

HomologySummary homology(const SimplicialPair& pair, bool reduced, std::size_t max_faces) {
  return homology(chain_complex(pair, reduced, max_faces));
}

long euler_characteristic(const SimplicialPair& pair, std::size_t max_faces) {
  auto total = enumerate_faces(pair.total, max_faces);
  auto sub = enumerate_faces(pair.sub, max_faces);
  long chi = 0;
  for (std::size_t d = 0; d < total.size(); ++d) {
    long n = static_cast<long>(total[d].size()) - (d < sub.size() ? static_cast<long>(sub[d].size()) : 0);
    chi += d % 2 == 0 ? n : -n;
  }
  return chi;
}

long euler_characteristic(const HomologySummary& h) {
  long chi = 0;
  for (const auto& [d, g] : h.degrees) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(g.rank);
  return chi;
}

}  // namespace arrtop
