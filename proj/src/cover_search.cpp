#include "ptmc/cover_search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>

#include "dancing_links.hpp"

namespace ptmc {

using detail::Clock;
using detail::DancingLinks;
using detail::SearchControl;
using detail::SearchStop;

void ExactCoverInstance::validate() {
  std::set<std::string> ids;
  for (Tile &t : tiles) {
    if (t.cells.empty()) throw std::invalid_argument("tile " + t.id + " is empty");
    std::sort(t.cells.begin(), t.cells.end());
    t.cells.erase(std::unique(t.cells.begin(), t.cells.end()), t.cells.end());
    if (t.cells.back() >= universe.size()) throw std::invalid_argument("tile " + t.id + " has a cell out of range");
    if (!ids.insert(t.id).second) throw std::invalid_argument("duplicate tile id " + t.id);
  }
}

std::string_view to_string(CoverKind k) {
  switch (k) {
  case CoverKind::solution:
    return "solution";
  case CoverKind::infeasible:
    return "infeasible";
  case CoverKind::timeout:
    return "timeout";
  }
  return "unknown";
}

namespace {

std::optional<Clock::time_point> deadline_of(const SearchOptions &opts) {
  if (!opts.budget_seconds) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*opts.budget_seconds));
}

int thread_count(const SearchOptions &opts) { return opts.threads > 0 ? opts.threads : omp_get_max_threads(); }

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// State after the pinned tiles, plus the candidates of the first branching
/// column. `done` means the pins already cover everything.
struct Root {
  std::optional<DancingLinks> dlx;
  bool pins_conflict = false;
  bool done = false;
  std::vector<std::size_t> branches;
};

Root make_root(const ExactCoverInstance &inst, const SearchOptions &opts) {
  Root root;
  root.dlx.emplace(inst);
  for (std::size_t p : opts.pinned) {
    if (p >= inst.tiles.size()) throw std::out_of_range("pinned tile out of range");
    if (!root.dlx->select_row(p)) {
      root.pins_conflict = true;
      return root;
    }
  }
  const int c = root.dlx->choose_column();
  if (c < 0)
    root.done = true;
  else
    root.branches = root.dlx->rows_in_column(c);
  return root;
}

/// Runs `body(j, dlx)` for every first-column branch j in parallel and
/// rethrows the first exception raised by a worker.
template <typename Body> void for_each_branch(const Root &root, const SearchOptions &opts, Body &&body) {
  const auto k = static_cast<std::int64_t>(root.branches.size());
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(opts))
  for (std::int64_t j = 0; j < k; ++j) {
    try {
      DancingLinks dlx = *root.dlx;
      dlx.select_row(root.branches[static_cast<std::size_t>(j)]);
      body(static_cast<std::size_t>(j), dlx);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

CoverOutcome first_cover(const ExactCoverInstance &inst, const SearchOptions &opts, const CoverPredicate *accept) {
  CoverOutcome out;
  Root root = make_root(inst, opts);
  if (root.pins_conflict) return out;
  if (root.done) {
    std::vector<std::size_t> tiles = sorted(root.dlx->chosen());
    if (!accept || (*accept)(tiles)) {
      out.kind = CoverKind::solution;
      out.tiles = std::move(tiles);
    }
    out.nodes = 1;
    return out;
  }

  const std::size_t k = root.branches.size();
  const auto deadline = deadline_of(opts);
  std::atomic<std::size_t> best{k};
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::vector<std::size_t>> found(k);
  std::vector<SearchStop> stops(k, SearchStop::aborted);

  for_each_branch(root, opts, [&](std::size_t j, DancingLinks &dlx) {
    if (best.load() < j) return;
    SearchControl ctl{deadline, &best, j, 0};
    auto visit = [&](const std::vector<std::size_t> &rows) {
      std::vector<std::size_t> tiles = sorted(rows);
      if (accept && !(*accept)(tiles)) return true;
      found[j] = std::move(tiles);
      std::size_t cur = best.load();
      while (j < cur && !best.compare_exchange_weak(cur, j)) {
      }
      return false;
    };
    stops[j] = dlx.search(visit, ctl);
    nodes += ctl.nodes;
  });

  out.nodes = nodes.load();
  const std::size_t winner = best.load();
  if (winner < k) {
    out.kind = CoverKind::solution;
    out.tiles = found[winner];
    return out;
  }
  const bool timed_out = std::any_of(stops.begin(), stops.end(), [](SearchStop s) { return s == SearchStop::timeout; });
  out.kind = timed_out ? CoverKind::timeout : CoverKind::infeasible;
  return out;
}

Enumeration all_covers(const ExactCoverInstance &inst, std::size_t limit, bool keep, const SearchOptions &opts) {
  Enumeration e;
  Root root = make_root(inst, opts);
  if (root.pins_conflict) {
    e.exhaustive = true;
    return e;
  }
  if (root.done) {
    e.count = limit > 0 ? 1 : 0;
    if (keep && limit > 0) e.solutions.push_back(sorted(root.dlx->chosen()));
    e.exhaustive = limit > 0;
    e.nodes = 1;
    return e;
  }

  const std::size_t k = root.branches.size();
  const auto deadline = deadline_of(opts);
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::vector<std::vector<std::size_t>>> per_branch(k);
  std::vector<std::uint64_t> counts(k, 0);
  std::vector<SearchStop> stops(k, SearchStop::exhausted);

  for_each_branch(root, opts, [&](std::size_t j, DancingLinks &dlx) {
    SearchControl ctl{deadline, nullptr, j, 0};
    auto visit = [&](const std::vector<std::size_t> &rows) {
      ++counts[j];
      if (keep) per_branch[j].push_back(sorted(rows));
      return counts[j] < limit;
    };
    stops[j] = limit == 0 ? SearchStop::halted : dlx.search(visit, ctl);
    nodes += ctl.nodes;
  });

  e.nodes = nodes.load();
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < k; ++j) {
    total += counts[j];
    for (auto &s : per_branch[j]) e.solutions.push_back(std::move(s));
  }
  std::sort(e.solutions.begin(), e.solutions.end());
  const bool halted = std::any_of(stops.begin(), stops.end(), [](SearchStop s) { return s == SearchStop::halted; });
  e.timed_out = std::any_of(stops.begin(), stops.end(), [](SearchStop s) { return s == SearchStop::timeout; });
  e.count = std::min<std::uint64_t>(total, limit);
  if (e.solutions.size() > limit) e.solutions.resize(limit);
  e.exhaustive = !halted && !e.timed_out && total <= limit;
  return e;
}

} // namespace

CoverOutcome solve(const ExactCoverInstance &inst, const SearchOptions &opts) {
  return first_cover(inst, opts, nullptr);
}

CoverOutcome find_first(const ExactCoverInstance &inst, const SearchOptions &opts, const CoverPredicate &accept) {
  return first_cover(inst, opts, &accept);
}

Enumeration enumerate(const ExactCoverInstance &inst, std::size_t limit, const SearchOptions &opts) {
  return all_covers(inst, limit, true, opts);
}

Enumeration count_covers(const ExactCoverInstance &inst, const SearchOptions &opts) {
  return all_covers(inst, std::numeric_limits<std::size_t>::max(), false, opts);
}

namespace serial {

CoverOutcome solve(const ExactCoverInstance &inst, const SearchOptions &opts) {
  CoverOutcome out;
  DancingLinks dlx(inst);
  for (std::size_t p : opts.pinned) {
    if (p >= inst.tiles.size()) throw std::out_of_range("pinned tile out of range");
    if (!dlx.select_row(p)) return out;
  }
  SearchControl ctl{deadline_of(opts), nullptr, 0, 0};
  auto visit = [&](const std::vector<std::size_t> &rows) {
    out.tiles = sorted(rows);
    return false;
  };
  const SearchStop s = dlx.search(visit, ctl);
  out.nodes = ctl.nodes;
  if (s == SearchStop::halted)
    out.kind = CoverKind::solution;
  else
    out.kind = s == SearchStop::timeout ? CoverKind::timeout : CoverKind::infeasible;
  return out;
}

Enumeration enumerate(const ExactCoverInstance &inst, std::size_t limit, const SearchOptions &opts) {
  Enumeration e;
  DancingLinks dlx(inst);
  for (std::size_t p : opts.pinned) {
    if (p >= inst.tiles.size()) throw std::out_of_range("pinned tile out of range");
    if (!dlx.select_row(p)) {
      e.exhaustive = true;
      return e;
    }
  }
  SearchControl ctl{deadline_of(opts), nullptr, 0, 0};
  auto visit = [&](const std::vector<std::size_t> &rows) {
    e.solutions.push_back(sorted(rows));
    return e.solutions.size() < limit;
  };
  const SearchStop s = limit == 0 ? SearchStop::halted : dlx.search(visit, ctl);
  std::sort(e.solutions.begin(), e.solutions.end());
  e.count = e.solutions.size();
  e.nodes = ctl.nodes;
  e.timed_out = s == SearchStop::timeout;
  e.exhaustive = s == SearchStop::exhausted;
  return e;
}

} // namespace serial

bool is_exact_cover(const ExactCoverInstance &inst, const std::vector<std::size_t> &tiles) {
  std::vector<int> hits(inst.universe.size(), 0);
  std::set<std::size_t> seen;
  for (std::size_t t : tiles) {
    if (t >= inst.tiles.size() || !seen.insert(t).second) return false;
    for (std::uint32_t c : inst.tiles[t].cells) {
      if (c >= hits.size()) return false;
      ++hits[c];
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

ExactCoverInstance eds_instance(const Graph &G) {
  ExactCoverInstance inst;
  inst.universe = G.labels();
  for (VertexId v = 0; v < G.size(); ++v) {
    Tile t{G.label(v), {v}};
    for (VertexId w : G.neighbors(v)) t.cells.push_back(w);
    inst.tiles.push_back(std::move(t));
  }
  inst.validate();
  return inst;
}

std::vector<ClassKey> shape_orientations(const ClassKey &shape) {
  if (shape.empty()) throw std::invalid_argument("empty shape");
  const std::size_t n = shape.front().dim();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::set<ClassKey> images;
  do {
    std::vector<Point> cells;
    for (const Point &p : shape) {
      Point q{std::vector<Coord>(n)};
      for (std::size_t i = 0; i < n; ++i) q[i] = p[perm[i]];
      cells.push_back(std::move(q));
    }
    images.insert(normalize_shape(std::move(cells)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {images.begin(), images.end()};
}

TilingInstance tiling_instance(const Ambient &torus, const std::vector<TilingShape> &shapes) {
  if (!torus.is_torus()) throw std::invalid_argument("tiling needs a torus");
  TilingInstance out;
  const std::size_t total = torus.size();
  for (std::size_t i = 0; i < total; ++i) out.cover.universe.push_back(to_string(torus.point_at(i)));

  for (std::size_t s = 0; s < shapes.size(); ++s) {
    const TilingShape &shape = shapes[s];
    const std::vector<ClassKey> orients = shape_orientations(shape.cells);
    std::vector<std::size_t> chosen = shape.orientations;
    if (chosen.empty())
      for (std::size_t o = 0; o < orients.size(); ++o) chosen.push_back(o);
    for (std::size_t o : chosen) {
      if (o >= orients.size()) throw std::out_of_range("orientation index out of range for shape " + shape.name);
      std::set<std::vector<std::uint32_t>> seen;
      for (std::size_t i = 0; i < total; ++i) {
        const Point anchor = torus.point_at(i);
        std::vector<Point> placed;
        for (const Point &c : orients[o]) placed.push_back(torus.wrap(c + anchor));
        const VertexSet comp(placed);
        if (comp.size() != placed.size()) continue;
        const Ball ball = truncated_ball(comp, shape.radius, torus);
        Tile tile;
        std::string coords = to_string(anchor);
        tile.id = shape.name + "/o" + std::to_string(o) + "@" + coords.substr(1, coords.size() - 2);
        for (const Point &p : ball.vertices) tile.cells.push_back(static_cast<std::uint32_t>(torus.index_of(p)));
        std::sort(tile.cells.begin(), tile.cells.end());
        if (!seen.insert(tile.cells).second) continue;
        out.cover.tiles.push_back(std::move(tile));
        out.placements.push_back({s, o, anchor, comp});
      }
    }
  }
  out.cover.validate();
  return out;
}

std::map<std::pair<int, int>, SurveyEntry> grid_eds_survey(int max_side, const SearchOptions &opts) {
  std::map<std::pair<int, int>, SurveyEntry> out;
  for (int m = 3; m <= max_side; ++m)
    for (int n = 3; n <= max_side; ++n) {
      const Graph G = lattice_graph(Ambient::window({{0, m - 1}, {0, n - 1}}));
      const Enumeration e = count_covers(eds_instance(G), opts);
      if (e.timed_out) throw std::runtime_error("grid survey ran out of budget");
      out[{m, n}] = SurveyEntry{e.count > 0, e.count};
    }
  return out;
}

} // namespace ptmc
