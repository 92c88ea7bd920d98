#include "ptmc/lattice_codes.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <limits>
#include <stdexcept>

namespace ptmc {

CodeSet::CodeSet(Ambient a, VertexSet v) : ambient(std::move(a)), vertices(std::move(v)) {
  for (const Point &p : vertices)
    if (!ambient.contains(p))
      throw std::invalid_argument("code vertex " + to_string(p) + " outside its ambient");
}

std::string class_key_text(const ClassKey &key) {
  std::string s;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < key[i].dim(); ++j) {
      if (j) s += ',';
      s += std::to_string(key[i][j]);
    }
  }
  return s;
}

std::string class_key_hash(const ClassKey &key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : class_key_text(key)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ClassKey normalize_shape(std::vector<Point> cells) {
  if (cells.empty()) return {};
  Point lo = cells.front();
  for (const Point &p : cells)
    for (std::size_t i = 0; i < lo.dim(); ++i) lo[i] = std::min(lo[i], p[i]);
  for (Point &p : cells) p = p - lo;
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

namespace {

std::size_t position_in(const std::vector<Point> &sorted, const Point &p) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
  if (it == sorted.end() || *it != p) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(it - sorted.begin());
}

} // namespace

std::vector<Component> components_of(const CodeSet &S) {
  const auto &pts = S.vertices.points();
  const Ambient &a = S.ambient;
  const std::size_t n = a.dim();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  std::vector<bool> seen(pts.size(), false);
  std::vector<Component> out;
  for (std::size_t start = 0; start < pts.size(); ++start) {
    if (seen[start]) continue;
    // BFS from the minimal vertex; lift[] maps pts index to its Z^n lift.
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    bool wraps = false;
    std::map<std::size_t, Point> lift;
    lift[start] = pts[start];
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      members.push_back(u);
      for (std::size_t axis = 0; axis < n; ++axis) {
        for (Coord step : {Coord{-1}, Coord{1}}) {
          Point q = pts[u];
          q[axis] += step;
          q = a.wrap(q);
          if (!a.contains(q)) continue;
          const std::size_t qi = position_in(pts, q);
          if (qi == none) continue;
          Point expected = lift[u];
          expected[axis] += step;
          if (!seen[qi]) {
            seen[qi] = true;
            lift[qi] = expected;
            queue.push_back(qi);
          } else if (lift.count(qi) && lift[qi] != expected) {
            wraps = true;
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    Component c;
    std::vector<Point> vs;
    for (std::size_t m : members) {
      vs.push_back(pts[m]);
      c.lifted.push_back(lift[m]);
    }
    c.vertices = VertexSet(std::move(vs));
    c.class_key = normalize_shape(c.lifted);
    c.wraps = wraps;
    out.push_back(std::move(c));
  }
  return out;
}

KappaAssignment KappaAssignment::uniform(int t) {
  KappaAssignment k;
  k.uniform_ = t;
  return k;
}

std::optional<int> KappaAssignment::radius_for(const ClassKey &key) const {
  if (auto it = by_hash_.find(class_key_hash(key)); it != by_hash_.end()) return it->second;
  return uniform_;
}

KappaAssignment KappaAssignment::expanded_for(const CodeSet &S) const {
  KappaAssignment k;
  k.by_hash_ = by_hash_;
  for (const Component &c : components_of(S)) {
    const auto r = radius_for(c.class_key);
    if (!r) throw std::out_of_range("no radius for class " + class_key_text(c.class_key));
    k.set(c.class_key, *r);
  }
  return k;
}

TruncatedSphere make_sphere(const Component &center, int radius, const Ambient &a) {
  return TruncatedSphere{center, radius, truncated_ball(center.vertices, radius, a).vertices};
}

std::optional<BoxSpec> box_hull_check(const Component &H, const Ambient &a) {
  if (H.vertices.empty()) throw std::invalid_argument("box_hull_check: empty component");
  if (H.wraps) throw std::domain_error("box_hull_check: component wraps around the torus");
  const std::size_t n = H.lifted.front().dim();
  Point lo = H.lifted.front(), hi = H.lifted.front();
  for (const Point &p : H.lifted)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  BoxSpec box;
  std::size_t volume = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Coord e = hi[i] - lo[i] + 1;
    if (a.is_torus() && e >= a.moduli()[i])
      throw std::domain_error("box_hull_check: component spans a full torus axis");
    box.extents.push_back(e);
    box.r += e > 1;
    volume *= static_cast<std::size_t>(e);
  }
  // Lifts are distinct points inside [lo, hi], so equal counts mean equal sets.
  if (volume != H.lifted.size()) return std::nullopt;
  return box;
}

CodeSet inflate_code(const CodeSet &S, const std::vector<Coord> &k) {
  const Ambient &a = S.ambient;
  if (!a.is_torus()) throw std::invalid_argument("inflate_code: code must live on a torus");
  if (k.size() != a.dim()) throw std::invalid_argument("inflate_code: one multiplier per axis");
  std::vector<Coord> moduli;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1) throw std::invalid_argument("inflate_code: multipliers must be >= 1");
    moduli.push_back(a.moduli()[i] * k[i]);
  }
  const Ambient big = Ambient::torus(moduli);
  const Ambient copies = Ambient::torus(k);
  std::vector<Point> pts;
  for (const Point &s : S.vertices)
    for_each_vertex(copies, [&](const Point &j) {
      Point p = s;
      for (std::size_t i = 0; i < p.dim(); ++i) p[i] += j[i] * a.moduli()[i];
      pts.push_back(std::move(p));
    });
  return CodeSet(big, VertexSet(std::move(pts)));
}

std::map<ClassKey, std::size_t> class_census(const CodeSet &S) {
  std::map<ClassKey, std::size_t> census;
  for (const Component &c : components_of(S)) ++census[c.class_key];
  return census;
}

Coord min_inter_component_l1(const CodeSet &S) {
  const auto comps = components_of(S);
  if (comps.size() < 2) return -1;
  Coord best = std::numeric_limits<Coord>::max();
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      for (const Point &u : comps[i].vertices)
        for (const Point &v : comps[j].vertices) best = std::min(best, l1_distance(u, v, S.ambient));
  return best;
}

CodeSet translate(const CodeSet &S, const Point &z) {
  std::vector<Point> pts;
  for (const Point &p : S.vertices) pts.push_back(S.ambient.wrap(p + z));
  return CodeSet(S.ambient, VertexSet(std::move(pts)));
}

} // namespace ptmc
