#include "ptmc/metric.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ptmc {

namespace {

void require_compatible(const Point &u, const Point &v, const Ambient &a) {
  if (u.dim() != v.dim() || u.dim() != a.dim())
    throw std::invalid_argument("dimension mismatch between points and ambient");
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

int hamming(const Point &u, const Point &v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  int h = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) h += u[i] != v[i];
  return h;
}

int hamming(const Point &u, const Point &v, const Ambient &a) {
  require_compatible(u, v, a);
  int h = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) h += a.axis_difference(u, v, i) != 0;
  return h;
}

int truncated_distance(const Point &u, const Point &v, const Ambient &a) {
  require_compatible(u, v, a);
  int h = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const Coord d = a.axis_difference(u, v, i);
    if (d > 1 || d < -1) return static_cast<int>(u.dim()) + 1;
    h += d != 0;
  }
  return h;
}

Coord chebyshev_distance(const Point &u, const Point &v, const Ambient &a) {
  require_compatible(u, v, a);
  Coord m = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) m = std::max(m, std::abs(a.axis_difference(u, v, i)));
  return m;
}

Coord l1_distance(const Point &u, const Point &v, const Ambient &a) {
  require_compatible(u, v, a);
  Coord s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::abs(a.axis_difference(u, v, i));
  return s;
}

std::vector<Point> unit_offsets(std::size_t n) {
  std::vector<Point> out;
  std::vector<Coord> c(n, -1);
  for (;;) {
    out.emplace_back(c);
    std::size_t i = n;
    while (i > 0 && c[i - 1] == 1) c[--i] = -1;
    if (i == 0) return out;
    ++c[i - 1];
  }
}

Ball truncated_ball(const VertexSet &H, int t, const Ambient &a) {
  if (H.empty()) throw std::invalid_argument("truncated_ball: empty center");
  const int n = static_cast<int>(a.dim());
  if (t < 0 || t > n) throw std::invalid_argument("truncated_ball: radius outside [0, n]");

  // rho <= t <= n forces every offset into {-1,0,1}, so the ball is covered by
  // the unit cubes around the centers.
  const auto offsets = unit_offsets(a.dim());
  std::vector<Point> pts;
  bool clipped = false;
  for (const Point &s : H) {
    if (s.dim() != a.dim()) throw std::invalid_argument("truncated_ball: dimension mismatch");
    for (const Point &d : offsets) {
      int nz = 0;
      for (Coord x : d.coords) nz += x != 0;
      if (nz > t) continue;
      Point u = a.wrap(s + d);
      if (!a.contains(u)) {
        clipped = true;
        continue;
      }
      pts.push_back(std::move(u));
    }
  }
  return Ball{VertexSet(std::move(pts)), clipped};
}

std::int64_t ball_size_formula(int n, int t) {
  if (n < 0 || t < 0 || t > n) throw std::invalid_argument("ball_size_formula: need 0 <= t <= n");
  std::int64_t s = 0;
  for (int i = 0; i <= t; ++i) s += (std::int64_t{1} << i) * binomial(n, i);
  return s;
}

std::vector<Point> enumerate_vertices(const Ambient &a) {
  std::vector<Point> out;
  out.reserve(a.size());
  for_each_vertex(a, [&](Point p) { out.push_back(std::move(p)); });
  return out;
}

} // namespace ptmc
