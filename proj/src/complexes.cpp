#include "arrtop/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arrtop {

namespace {

bool is_subset(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Face> faces)
    : labels_(std::move(labels)) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (auto v : f)
      if (v >= labels_.size()) throw std::invalid_argument("face uses an unknown vertex");
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (auto& f : faces) {
    if (f.empty()) continue;
    bool dominated = std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return is_subset(f, g); });
    if (!dominated) facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end());
}

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> labels) {
  Face all(labels.size());
  std::iota(all.begin(), all.end(), 0u);
  return SimplicialComplex(std::move(labels), {all});
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::has_face(const Face& f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return is_subset(f, g); });
}

std::string node_label(const Arrangement& arr, const PosetNode& node) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (node.generators >> i & 1) {
      if (!first) s += ",";
      s += arr.label(i);
      first = false;
    }
  return s + "}";
}

namespace {

std::string poset_label(const IntersectionPoset& poset, std::size_t x) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < poset.plane_count(); ++i)
    if (poset.node(x).generators >> i & 1) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

// Maximal chains of the sub-poset `allowed`, as lists of local vertex ids.
void maximal_chains(const IntersectionPoset& poset, const std::vector<int>& local, std::size_t x, Face& chain,
                    std::vector<Face>& out, const std::vector<std::vector<std::size_t>>& up) {
  chain.push_back(static_cast<std::uint32_t>(local[x]));
  if (up[x].empty()) {
    out.push_back(chain);
  } else {
    for (auto y : up[x]) maximal_chains(poset, local, y, chain, out, up);
  }
  chain.pop_back();
}

// Chains of the order ideal given by `members` (sorted node ids, closed downward).
SimplicialComplex chains_of(const IntersectionPoset& poset, const std::vector<std::size_t>& members,
                            const std::vector<std::size_t>& vertex_nodes) {
  std::vector<int> local(poset.size(), -1);
  for (std::size_t i = 0; i < vertex_nodes.size(); ++i) local[vertex_nodes[i]] = static_cast<int>(i);
  std::vector<bool> in(poset.size(), false);
  for (auto v : members) in[v] = true;
  // Covering relations restricted to the member set.
  std::vector<std::vector<std::size_t>> up(poset.size());
  for (auto [a, b] : poset.covers())
    if (in[a] && in[b]) up[a].push_back(b);
  std::vector<std::string> labels;
  for (auto v : vertex_nodes) labels.push_back(poset_label(poset, v));
  std::vector<Face> facets;
  Face chain;
  for (auto v : members) {
    bool minimal = std::none_of(poset.below(v).begin(), poset.below(v).end(), [&](std::size_t y) { return in[y]; });
    if (minimal) maximal_chains(poset, local, v, chain, facets, up);
  }
  return SimplicialComplex(std::move(labels), std::move(facets));
}

}  // namespace

SimplicialComplex order_complex(const IntersectionPoset& poset) {
  std::vector<std::size_t> all(poset.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return chains_of(poset, all, all);
}

SimplicialPair local_order_pair(const IntersectionPoset& poset, std::size_t x) {
  std::vector<std::size_t> down = poset.below(x);
  std::vector<std::size_t> with_x = down;
  with_x.push_back(x);
  SimplicialPair p;
  p.total = chains_of(poset, with_x, with_x);
  p.sub = down.empty() ? SimplicialComplex(p.total.labels(), {}) : chains_of(poset, down, with_x);
  return p;
}

SimplicialPair naive_pair(const Arrangement& arr, const IntersectionPoset& poset, std::size_t x) {
  std::vector<std::size_t> gens;
  std::vector<int> local(arr.size(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (poset.node(x).generators >> i & 1) {
      local[i] = static_cast<int>(gens.size());
      gens.push_back(i);
      labels.push_back(arr.label(i));
    }
  std::vector<Face> marginal;
  for (auto y : poset.below(x)) {
    Face f;
    for (auto i : gens)
      if (poset.node(y).generators >> i & 1) f.push_back(static_cast<std::uint32_t>(local[i]));
    marginal.push_back(std::move(f));
  }
  SimplicialPair p;
  p.total = SimplicialComplex::simplex(labels);
  p.sub = SimplicialComplex(labels, std::move(marginal));
  return p;
}

std::vector<std::vector<std::uint32_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  if (k > n) return out;
  std::vector<std::uint32_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0u);
  while (true) {
    out.push_back(idx);
    std::size_t p = k;
    while (p > 0 && idx[p - 1] == n - k + p - 1) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

bool hypergraph_connected(std::size_t n, const std::vector<std::vector<std::uint32_t>>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> covered(n, false);
  for (const auto& e : edges)
    for (auto v : e) {
      covered[v] = true;
      parent[find(v)] = find(e.front());
    }
  for (std::size_t v = 0; v < n; ++v)
    if (!covered[v] || find(v) != find(0)) return false;
  return true;
}

SimplicialPair k_hypergraph_pair(std::size_t n, std::size_t k) {
  if (k < 2 || k > n || n > 8) throw std::invalid_argument("hypergraph complex needs 2 <= k <= N <= 8");
  auto edges = k_subsets(n, k);
  std::vector<std::string> labels;
  for (const auto& e : edges) {
    std::string s;
    for (auto v : e) s += std::to_string(v + 1);
    labels.push_back(s);
  }
  // Maximal disconnected faces: all hyperedges inside S or inside its
  // complement, for every split with node 0 in S.
  std::vector<Face> sub;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 1; s < full; s += 2) {
    Face f;
    for (std::uint32_t e = 0; e < edges.size(); ++e) {
      std::uint32_t mask = 0;
      for (auto v : edges[e]) mask |= 1u << v;
      if ((mask & s) == mask || (mask & ~s & full) == mask) f.push_back(e);
    }
    if (!f.empty()) sub.push_back(std::move(f));
  }
  SimplicialPair p;
  p.total = SimplicialComplex::simplex(labels);
  p.sub = SimplicialComplex(labels, std::move(sub));
  return p;
}

SimplicialPair connected_graph_pair(std::size_t n) {
  if (n < 2 || n > 8) throw std::invalid_argument("graph complex needs 2 <= N <= 8");
  return k_hypergraph_pair(n, 2);
}

}  // namespace arrtop
