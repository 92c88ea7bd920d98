#include <algorithm>
#include <array>
#include <cstdint>

#include "ptmc/verify.hpp"
#include "verify_common.hpp"

namespace ptmc {

namespace {

enum : std::uint8_t { kOverlap = 1, kGap = 2, kNearest = 4 };

struct Touch {
  int comp;
  int dist;  // min rho from the vertex to the component
  int count; // component vertices attaining dist
};

/// Everything the scan needs to classify one vertex from its 3^n unit cube.
class NeighbourhoodScan {
public:
  NeighbourhoodScan(const CodeSet &S, const detail::PreparedCode &prep, NearestRule rule)
      : S_(S), prep_(prep), rule_(rule), offsets_(unit_offsets(S.ambient.dim())),
        comp_of_(S.ambient.size(), -1) {
    for (const Point &d : offsets_) {
      int nz = 0;
      for (Coord x : d.coords) nz += x != 0;
      weight_.push_back(nz);
    }
    for (std::size_t c = 0; c < prep.comps.size(); ++c)
      for (const Point &v : prep.comps[c].vertices) comp_of_[S.ambient.index_of(v)] = static_cast<int>(c);
  }

  std::uint8_t flags(std::size_t index) const {
    std::vector<Touch> touched;
    int global_min = 0, global_count = 0;
    scan(index, touched, global_min, global_count);
    return classify(touched, global_count);
  }

  /// Witness list for a vertex flagged with `kind`.
  std::vector<Point> witness(std::size_t index, FailureKind kind) const {
    const Ambient &a = S_.ambient;
    const Point u = a.point_at(index);
    std::vector<Touch> touched;
    int global_min = 0, global_count = 0;
    scan(index, touched, global_min, global_count);
    std::vector<Point> w{u};
    const auto owners = owners_of(touched);
    if (kind == FailureKind::overlap) {
      for (const Touch &t : owners) w.push_back(prep_.comps[t.comp].min_vertex());
      return w;
    }
    if (kind != FailureKind::nonunique_nearest) return w;
    std::vector<Point> tied;
    if (rule_ == NearestRule::owner) {
      const Touch &t = owners.front();
      for (const Point &s : prep_.comps[t.comp].vertices)
        if (truncated_distance(u, s, a) == t.dist) tied.push_back(s);
    } else if (touched.empty()) {
      tied = S_.vertices.points();
    } else {
      for (const Touch &t : touched)
        for (const Point &s : prep_.comps[t.comp].vertices)
          if (truncated_distance(u, s, a) == global_min) tied.push_back(s);
    }
    std::sort(tied.begin(), tied.end());
    w.insert(w.end(), tied.begin(), tied.end());
    return w;
  }

private:
  void scan(std::size_t index, std::vector<Touch> &touched, int &global_min, int &global_count) const {
    const Ambient &a = S_.ambient;
    const Point u = a.point_at(index);
    const int far = static_cast<int>(a.dim()) + 1;
    global_min = far;
    global_count = 0;
    for (std::size_t k = 0; k < offsets_.size(); ++k) {
      const int c = comp_of_[a.index_of(a.wrap(u + offsets_[k]))];
      if (c < 0) continue;
      const int d = weight_[k];
      auto it = std::find_if(touched.begin(), touched.end(), [c](const Touch &t) { return t.comp == c; });
      if (it == touched.end()) {
        touched.push_back({c, d, 1});
      } else if (d < it->dist) {
        it->dist = d;
        it->count = 1;
      } else if (d == it->dist) {
        ++it->count;
      }
      if (d < global_min) {
        global_min = d;
        global_count = 1;
      } else if (d == global_min) {
        ++global_count;
      }
    }
    // Every code vertex outside the unit cube sits at distance n+1.
    if (touched.empty()) global_count = static_cast<int>(S_.vertices.size());
    std::sort(touched.begin(), touched.end(), [](const Touch &x, const Touch &y) { return x.comp < y.comp; });
  }

  std::vector<Touch> owners_of(const std::vector<Touch> &touched) const {
    std::vector<Touch> owners;
    for (const Touch &t : touched)
      if (t.dist <= prep_.radius[t.comp]) owners.push_back(t);
    return owners;
  }

  std::uint8_t classify(const std::vector<Touch> &touched, int global_count) const {
    const auto owners = owners_of(touched);
    std::uint8_t f = 0;
    if (owners.size() > 1) f |= kOverlap;
    if (owners.empty()) f |= kGap;
    if (rule_ == NearestRule::global) {
      if (global_count > 1) f |= kNearest;
    } else if (owners.size() == 1 && owners.front().count > 1) {
      f |= kNearest;
    }
    return f;
  }

  const CodeSet &S_;
  const detail::PreparedCode &prep_;
  NearestRule rule_;
  std::vector<Point> offsets_;
  std::vector<int> weight_;
  std::vector<int> comp_of_;
};

} // namespace

VerifyReport verify_kappa_ptmc(const CodeSet &S, const KappaAssignment &kappa, NearestRule rule) {
  const detail::PreparedCode prep = detail::prepare_code(S, kappa);
  if (prep.early) return *prep.early;

  const NeighbourhoodScan scan(S, prep, rule);
  const auto total = static_cast<std::int64_t>(S.ambient.size());
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) flags[static_cast<std::size_t>(i)] = scan.flags(static_cast<std::size_t>(i));

  constexpr std::array<std::pair<std::uint8_t, FailureKind>, 3> order{{
      {kOverlap, FailureKind::overlap},
      {kGap, FailureKind::gap},
      {kNearest, FailureKind::nonunique_nearest},
  }};
  for (auto [bit, kind] : order) {
    auto it = std::find_if(flags.begin(), flags.end(), [bit](std::uint8_t f) { return (f & bit) != 0; });
    if (it != flags.end())
      return detail::failure_report(kind, scan.witness(static_cast<std::size_t>(it - flags.begin()), kind));
  }
  return VerifyReport{};
}

VerifyReport verify_pds(const Graph &G, const VertexIdSet &S) {
  std::vector<bool> in(G.size(), false);
  for (VertexId v : S) in[v] = true;
  VerifyReport r;
  r.isolated = true;
  for (VertexId v : S)
    for (VertexId w : G.neighbors(v))
      if (in[w]) r.isolated = false;

  std::optional<std::pair<FailureKind, VertexId>> first_overlap, first_gap;
  for (VertexId v = 0; v < G.size(); ++v) {
    if (in[v]) continue;
    std::size_t seen = 0;
    for (VertexId w : G.neighbors(v)) seen += in[w];
    if (seen > 1 && !first_overlap) first_overlap = {FailureKind::overlap, v};
    if (seen == 0 && !first_gap) first_gap = {FailureKind::gap, v};
  }
  const auto bad = first_overlap ? first_overlap : first_gap;
  if (bad) {
    r.pass = false;
    r.failure = bad->first;
    r.witness_vertices.push_back(bad->second);
    for (VertexId w : G.neighbors(bad->second))
      if (in[w]) r.witness_vertices.push_back(w);
    r.detail = "vertex " + G.label(bad->second) +
               (bad->first == FailureKind::gap ? " is undominated" : " is dominated more than once");
  }
  return r;
}

VerifyReport verify_non_isolated_pds(const Graph &G, const VertexIdSet &S) {
  std::vector<bool> in(G.size(), false);
  for (VertexId v : S) in[v] = true;
  VerifyReport r;
  r.isolated = true;
  for (VertexId v : S)
    for (VertexId w : G.neighbors(v))
      if (in[w]) r.isolated = false;

  for (VertexId v = 0; v < G.size(); ++v) {
    if (in[v]) continue;
    std::vector<VertexId> seen;
    for (VertexId w : G.neighbors(v))
      if (in[w]) seen.push_back(w);
    const bool single = seen.size() == 1;
    const bool edge_pair = seen.size() == 2 && G.has_edge(seen[0], seen[1]);
    if (single || edge_pair) continue;
    r.pass = false;
    r.failure = seen.empty() ? FailureKind::gap : FailureKind::overlap;
    r.witness_vertices.push_back(v);
    r.witness_vertices.insert(r.witness_vertices.end(), seen.begin(), seen.end());
    r.detail = "vertex " + G.label(v) + " sees " + std::to_string(seen.size()) +
               " code vertices that are not a single vertex or an edge";
    break;
  }
  return r;
}

} // namespace ptmc
