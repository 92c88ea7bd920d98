#include "ptmc/ambient.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptmc {

namespace {

void require_same_dim(const Point &a, const Point &b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
}

Coord floor_mod(Coord x, Coord m) {
  Coord r = x % m;
  return r < 0 ? r + m : r;
}

} // namespace

Point operator+(const Point &a, const Point &b) {
  require_same_dim(a, b);
  Point r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] += b[i];
  return r;
}

Point operator-(const Point &a, const Point &b) {
  require_same_dim(a, b);
  Point r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= b[i];
  return r;
}

std::string to_string(const Point &p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Ambient Ambient::window(std::vector<std::pair<Coord, Coord>> bounds) {
  if (bounds.empty()) throw std::invalid_argument("window needs at least one axis");
  for (const auto &[lo, hi] : bounds)
    if (lo > hi) throw std::invalid_argument("window bounds empty on some axis");
  Ambient a;
  a.kind_ = Kind::window;
  a.dim_ = bounds.size();
  a.bounds_ = std::move(bounds);
  return a;
}

Ambient Ambient::torus(std::vector<Coord> moduli) {
  if (moduli.empty()) throw std::invalid_argument("torus needs at least one axis");
  for (Coord m : moduli)
    if (m < 1) throw std::invalid_argument("torus moduli must be >= 1");
  Ambient a;
  a.kind_ = Kind::torus;
  a.dim_ = moduli.size();
  a.moduli_ = std::move(moduli);
  return a;
}

Coord Ambient::extent(std::size_t axis) const {
  if (is_torus()) return moduli_[axis];
  return bounds_[axis].second - bounds_[axis].first + 1;
}

std::size_t Ambient::size() const {
  std::size_t s = 1;
  for (std::size_t i = 0; i < dim_; ++i) s *= static_cast<std::size_t>(extent(i));
  return s;
}

bool Ambient::is_degenerate() const {
  return is_torus() && std::any_of(moduli_.begin(), moduli_.end(), [](Coord m) { return m < 3; });
}

bool Ambient::contains(const Point &p) const {
  if (p.dim() != dim_) return false;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_torus()) {
      if (p[i] < 0 || p[i] >= moduli_[i]) return false;
    } else if (p[i] < bounds_[i].first || p[i] > bounds_[i].second) {
      return false;
    }
  }
  return true;
}

Point Ambient::wrap(const Point &p) const {
  if (p.dim() != dim_) throw std::invalid_argument("dimension mismatch against ambient");
  if (!is_torus()) return p;
  Point r = p;
  for (std::size_t i = 0; i < dim_; ++i) r[i] = floor_mod(r[i], moduli_[i]);
  return r;
}

Coord Ambient::axis_difference(const Point &u, const Point &v, std::size_t axis) const {
  const Coord d = v[axis] - u[axis];
  if (!is_torus()) return d;
  const Coord m = moduli_[axis];
  Coord r = floor_mod(d, m);
  // r in [0, m); keep it unless the negative representative is strictly shorter
  if (2 * r > m) r -= m;
  return r;
}

std::size_t Ambient::index_of(const Point &p) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    const Coord base = is_torus() ? 0 : bounds_[i].first;
    idx = idx * static_cast<std::size_t>(extent(i)) + static_cast<std::size_t>(p[i] - base);
  }
  return idx;
}

Point Ambient::point_at(std::size_t index) const {
  std::vector<Coord> c(dim_);
  for (std::size_t i = dim_; i-- > 0;) {
    const auto e = static_cast<std::size_t>(extent(i));
    const Coord base = is_torus() ? 0 : bounds_[i].first;
    c[i] = base + static_cast<Coord>(index % e);
    index /= e;
  }
  return Point(std::move(c));
}

VertexSet::VertexSet(std::vector<Point> pts) : points_(std::move(pts)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool VertexSet::contains(const Point &p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

} // namespace ptmc
