#pragma once

#include "arrtop/arrangement.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace arrtop {

/// A simplex as a strictly increasing list of vertex indices.
using Face = std::vector<std::uint32_t>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps only the inclusion-maximal sets among `faces` (each is sorted first).
  SimplicialComplex(std::vector<std::string> labels, std::vector<Face> faces);
  static SimplicialComplex simplex(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<Face>& facets() const { return facets_; }
  bool empty() const { return facets_.empty(); }
  /// -1 for the empty complex.
  int dim() const;
  bool has_face(const Face& f) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Face> facets_;
};

/// A complex with a subcomplex; `sub` uses the vertex indexing of `total`.
struct SimplicialPair {
  SimplicialComplex total;
  SimplicialComplex sub;
};

SimplicialComplex order_complex(const IntersectionPoset& poset);
/// (Υ(I), ∂Υ(I)): chains of nodes containing L_x, and those chains that omit x.
SimplicialPair local_order_pair(const IntersectionPoset& poset, std::size_t x);
/// (Δ(I), ∂Δ(I)) on the generators of node x.
SimplicialPair naive_pair(const Arrangement& arr, const IntersectionPoset& poset, std::size_t x);

/// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::uint32_t>> k_subsets(std::size_t n, std::size_t k);
/// True iff the hyperedges cover {0..n-1} and their overlap graph is connected.
bool hypergraph_connected(std::size_t n, const std::vector<std::vector<std::uint32_t>>& edges);

SimplicialPair k_hypergraph_pair(std::size_t n, std::size_t k);
SimplicialPair connected_graph_pair(std::size_t n);

std::string node_label(const Arrangement& arr, const PosetNode& node);

}  // namespace arrtop
