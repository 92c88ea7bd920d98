#ifndef PTMC_GRAPH_HPP
#define PTMC_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ptmc/ambient.hpp"

namespace ptmc {

using VertexId = std::uint32_t;

/// Finite simple undirected graph with stable string labels per vertex.
/// Adjacency lists are kept sorted and duplicate-free.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : labels_(n), adj_(n) {}
  Graph(std::vector<std::string> labels, const std::vector<std::pair<VertexId, VertexId>> &edges);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const;
  const std::vector<VertexId> &neighbors(VertexId v) const { return adj_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }
  bool has_edge(VertexId u, VertexId v) const;
  const std::string &label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string> &labels() const { return labels_; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  bool operator==(const Graph &) const = default;

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> adj_;
};

/// The grid graph on an ambient: vertices are the ambient points (index order),
/// edges join points at unit offset along one axis, wrapping on a torus.
Graph lattice_graph(const Ambient &a);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

/// Vertices sorted ascending; convenience for the verifiers.
using VertexIdSet = std::vector<VertexId>;

} // namespace ptmc

#endif // PTMC_GRAPH_HPP
