#ifndef PTMC_LATTICE_CODES_HPP
#define PTMC_LATTICE_CODES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptmc/ambient.hpp"
#include "ptmc/metric.hpp"

namespace ptmc {

/// A vertex subset S of a window or torus.
struct CodeSet {
  Ambient ambient;
  VertexSet vertices;

  CodeSet(Ambient a, VertexSet v);
};

/// Translation-class key: the component's (unwrapped) vertex set shifted so
/// that its coordinate-wise minimum is the origin, sorted.
using ClassKey = std::vector<Point>;

/// "x,y;x,y;..." rendering of a class key.
std::string class_key_text(const ClassKey &key);
/// 16 hex digits of FNV-1a over class_key_text; the JSON key for kappa maps.
std::string class_key_hash(const ClassKey &key);
ClassKey normalize_shape(std::vector<Point> cells);

/// A maximal connected piece of S under grid adjacency (unit step along one
/// axis, wrapped on a torus).
struct Component {
  VertexSet vertices;
  /// Coordinates in Z^n obtained by unwrapping from the minimal vertex; same
  /// order as vertices.
  std::vector<Point> lifted;
  ClassKey class_key;
  /// The component closes up around some torus axis; lifting is inconsistent.
  bool wraps = false;

  const Point &min_vertex() const { return vertices.front(); }
};

/// Components sorted by minimal vertex.
std::vector<Component> components_of(const CodeSet &S);

/// Radius per translation class, with an optional radius for classes not
/// listed explicitly.
class KappaAssignment {
public:
  KappaAssignment() = default;
  static KappaAssignment uniform(int t);

  void set(const ClassKey &key, int t) { by_hash_[class_key_hash(key)] = t; }
  void set_by_hash(const std::string &hash, int t) { by_hash_[hash] = t; }
  std::optional<int> radius_for(const ClassKey &key) const;

  const std::map<std::string, int> &by_hash() const { return by_hash_; }
  std::optional<int> uniform_radius() const { return uniform_; }

  /// Explicit entry for every class of S (uniform radius expanded).
  KappaAssignment expanded_for(const CodeSet &S) const;

  bool operator==(const KappaAssignment &) const = default;

private:
  std::map<std::string, int> by_hash_;
  std::optional<int> uniform_;
};

struct TruncatedSphere {
  Component center;
  int radius = 0;
  VertexSet ball;
};

TruncatedSphere make_sphere(const Component &center, int radius, const Ambient &a);

/// Per-axis vertex counts of a full integer box; r counts axes with extent > 1.
struct BoxSpec {
  std::vector<Coord> extents;
  int r = 0;

  bool operator==(const BoxSpec &) const = default;
};

/// The box spanned by the component if its vertex set is exactly that box,
/// std::nullopt otherwise. Throws std::domain_error for wrapping components.
std::optional<BoxSpec> box_hull_check(const Component &H, const Ambient &a);

/// Preimage of S under the projection of the torus with moduli m_i k_i onto
/// the torus of S.
CodeSet inflate_code(const CodeSet &S, const std::vector<Coord> &k);

std::map<ClassKey, std::size_t> class_census(const CodeSet &S);

/// Minimum wrapped l1 distance between vertices of distinct components; -1
/// when S has fewer than two components.
Coord min_inter_component_l1(const CodeSet &S);

/// S shifted by z (wrapped on a torus).
CodeSet translate(const CodeSet &S, const Point &z);

} // namespace ptmc

#endif // PTMC_LATTICE_CODES_HPP
