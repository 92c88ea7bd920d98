#include "ptmc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptmc {

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<VertexId, VertexId>> &edges)
    : labels_(std::move(labels)), adj_(labels_.size()) {
  for (auto [u, v] : edges) {
    if (u >= adj_.size() || v >= adj_.size()) throw std::out_of_range("edge endpoint out of range");
    if (u == v) continue;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto &nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (const auto &nb : adj_) s += nb.size();
  return s / 2;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < adj_.size(); ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph lattice_graph(const Ambient &a) {
  const std::size_t n = a.size();
  std::vector<std::string> labels(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = a.point_at(i);
    labels[i] = to_string(p);
    for (std::size_t axis = 0; axis < a.dim(); ++axis) {
      Point q = p;
      ++q[axis];
      q = a.wrap(q);
      if (!a.contains(q)) continue;
      edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(a.index_of(q)));
    }
  }
  return Graph(std::move(labels), edges);
}

Graph path_graph(std::size_t n) {
  std::vector<std::string> labels(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    if (i + 1 < n) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  }
  return Graph(std::move(labels), edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  std::vector<std::string> labels(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  }
  return Graph(std::move(labels), edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::string> labels(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (std::size_t j = i + 1; j < n; ++j)
      edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
  }
  return Graph(std::move(labels), edges);
}

} // namespace ptmc
