#include <algorithm>
#include <limits>

#include "ptmc/verify.hpp"
#include "verify_common.hpp"

namespace ptmc::serial {

VerifyReport verify_kappa_ptmc(const CodeSet &S, const KappaAssignment &kappa, NearestRule rule) {
  const detail::PreparedCode prep = detail::prepare_code(S, kappa);
  if (prep.early) return *prep.early;
  const Ambient &a = S.ambient;
  const std::size_t total = a.size();

  std::vector<std::vector<std::size_t>> owners(total);
  for (std::size_t c = 0; c < prep.comps.size(); ++c) {
    const TruncatedSphere sphere = make_sphere(prep.comps[c], prep.radius[c], a);
    for (const Point &p : sphere.ball) owners[a.index_of(p)].push_back(c);
  }

  for (std::size_t i = 0; i < total; ++i)
    if (owners[i].size() > 1) {
      std::vector<Point> w{a.point_at(i)};
      for (std::size_t c : owners[i]) w.push_back(prep.comps[c].min_vertex());
      return detail::failure_report(FailureKind::overlap, std::move(w));
    }
  for (std::size_t i = 0; i < total; ++i)
    if (owners[i].empty()) return detail::failure_report(FailureKind::gap, {a.point_at(i)});

  for (std::size_t i = 0; i < total; ++i) {
    const Point u = a.point_at(i);
    // Under the owner rule only the owning component competes.
    std::vector<Point> pool;
    if (rule == NearestRule::owner)
      pool = prep.comps[owners[i].front()].vertices.points();
    else
      pool = S.vertices.points();
    int best = std::numeric_limits<int>::max();
    std::vector<Point> tied;
    for (const Point &s : pool) {
      const int d = truncated_distance(u, s, a);
      if (d < best) {
        best = d;
        tied.clear();
      }
      if (d == best) tied.push_back(s);
    }
    if (tied.size() > 1) {
      std::vector<Point> w{u};
      w.insert(w.end(), tied.begin(), tied.end());
      return detail::failure_report(FailureKind::nonunique_nearest, std::move(w));
    }
  }
  return VerifyReport{};
}

} // namespace ptmc::serial
