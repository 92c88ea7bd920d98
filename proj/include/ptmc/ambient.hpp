#ifndef PTMC_AMBIENT_HPP
#define PTMC_AMBIENT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ptmc {

using Coord = std::int64_t;

/// Integer n-vector. Lives in a window of Z^n or on a torus.
struct Point {
  std::vector<Coord> coords;

  Point() = default;
  explicit Point(std::vector<Coord> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Coord> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  Coord operator[](std::size_t i) const { return coords[i]; }
  Coord &operator[](std::size_t i) { return coords[i]; }

  auto operator<=>(const Point &) const = default;
  bool operator==(const Point &) const = default;
};

Point operator+(const Point &a, const Point &b);
Point operator-(const Point &a, const Point &b);
std::string to_string(const Point &p);

/// A finite piece of Z^n: either an axis-aligned window (inclusive bounds) or a
/// torus C_{m_1} x ... x C_{m_n}.
class Ambient {
public:
  enum class Kind { window, torus };

  static Ambient window(std::vector<std::pair<Coord, Coord>> bounds);
  static Ambient torus(std::vector<Coord> moduli);

  Kind kind() const { return kind_; }
  bool is_torus() const { return kind_ == Kind::torus; }
  std::size_t dim() const { return dim_; }
  const std::vector<Coord> &moduli() const { return moduli_; }
  const std::vector<std::pair<Coord, Coord>> &bounds() const { return bounds_; }

  /// Number of vertices per axis.
  Coord extent(std::size_t axis) const;
  std::size_t size() const;

  /// True when some torus modulus is below 3; balls wrap onto themselves there.
  bool is_degenerate() const;

  bool contains(const Point &p) const;
  /// Reduces coordinates mod the moduli on a torus; identity on a window.
  Point wrap(const Point &p) const;

  /// Signed difference v_i - u_i. On a torus this is the representative of
  /// least absolute value, ties (even modulus, half offset) going positive.
  Coord axis_difference(const Point &u, const Point &v, std::size_t axis) const;

  /// Mixed-radix index in lexicographic order; p must be contained.
  std::size_t index_of(const Point &p) const;
  Point point_at(std::size_t index) const;

  bool operator==(const Ambient &) const = default;

private:
  Kind kind_ = Kind::window;
  std::size_t dim_ = 0;
  std::vector<std::pair<Coord, Coord>> bounds_;
  std::vector<Coord> moduli_;
};

/// Duplicate-free, lexicographically ordered set of points.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Point> pts);

  const std::vector<Point> &points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const Point &p) const;
  const Point &front() const { return points_.front(); }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool operator==(const VertexSet &) const = default;
  auto operator<=>(const VertexSet &) const = default;

private:
  std::vector<Point> points_;
};

} // namespace ptmc

#endif // PTMC_AMBIENT_HPP
