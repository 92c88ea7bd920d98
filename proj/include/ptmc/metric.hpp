#ifndef PTMC_METRIC_HPP
#define PTMC_METRIC_HPP

#include <cstdint>
#include <vector>

#include "ptmc/ambient.hpp"

namespace ptmc {

/// Number of axes on which u and v differ (wrapped on a torus).
int hamming(const Point &u, const Point &v);
int hamming(const Point &u, const Point &v, const Ambient &a);

/// Truncated distance: the Hamming distance when every per-axis (wrapped)
/// offset is in {-1,0,1}, and n+1 otherwise.
int truncated_distance(const Point &u, const Point &v, const Ambient &a);

/// Wrapped Chebyshev and l1 distances, used by the diagnostics.
Coord chebyshev_distance(const Point &u, const Point &v, const Ambient &a);
Coord l1_distance(const Point &u, const Point &v, const Ambient &a);

struct Ball {
  VertexSet vertices;
  /// Window only: some ball point fell outside the bounds and was dropped.
  bool clipped = false;
};

/// All ambient points u with min_{s in H} rho(u, s) <= t. Requires H nonempty
/// and 0 <= t <= n.
Ball truncated_ball(const VertexSet &H, int t, const Ambient &a);

/// sum_{i=0..t} 2^i C(n, i): the size of an unclipped truncated t-ball around
/// a single vertex.
std::int64_t ball_size_formula(int n, int t);

/// Every ambient vertex once, lexicographic order.
std::vector<Point> enumerate_vertices(const Ambient &a);

template <typename Fn> void for_each_vertex(const Ambient &a, Fn &&fn) {
  const std::size_t total = a.size();
  for (std::size_t i = 0; i < total; ++i) fn(a.point_at(i));
}

/// The 3^n offsets in {-1,0,1}^n in lexicographic order.
std::vector<Point> unit_offsets(std::size_t n);

} // namespace ptmc

#endif // PTMC_METRIC_HPP
