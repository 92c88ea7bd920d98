#include "ptmc/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ptmc {

std::int64_t LatticeBasis::determinant() const {
  const std::size_t n = generators.size();
  if (n == 0) return 1;
  std::vector<std::vector<std::int64_t>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (generators[i].dim() != n) throw std::invalid_argument("generator matrix is not square");
    m[i] = generators[i].coords;
  }
  // Fraction-free Gaussian elimination (Bareiss).
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

LatticeBasis thm2_lattice(const std::vector<Coord> &c) {
  LatticeBasis b;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] < 2) throw std::invalid_argument("c_i must be at least 2");
    Point g{std::vector<Coord>(n, 0)};
    g[i] = 1 + c[i];
    b.generators.push_back(std::move(g));
  }
  b.anchor = Point{std::vector<Coord>(n, 0)};
  return b;
}

Point anchor_of(const VertexSet &ball) {
  if (ball.empty()) throw std::invalid_argument("anchor of an empty set");
  auto sum = [](const Point &p) { return std::accumulate(p.coords.begin(), p.coords.end(), Coord{0}); };
  const Point *best = &ball.front();
  for (const Point &p : ball)
    if (sum(p) < sum(*best)) best = &p;
  return *best;
}

BuiltCode build_thm2(const std::vector<Coord> &c, const std::vector<Coord> &k) {
  if (c.empty() || c.size() != k.size()) throw std::invalid_argument("c and k must be nonempty and of equal length");
  for (Coord x : c)
    if (x < 2) throw std::invalid_argument("c_i must be at least 2");
  for (Coord x : k)
    if (x < 1) throw std::invalid_argument("k_i must be at least 1");
  const std::size_t n = c.size();
  std::vector<Coord> moduli(n);
  for (std::size_t i = 0; i < n; ++i) moduli[i] = (1 + c[i]) * k[i];
  const Ambient torus = Ambient::torus(moduli);

  std::vector<Point> pts;
  for_each_vertex(torus, [&](const Point &p) {
    for (std::size_t i = 0; i < n; ++i) {
      const Coord r = p[i] % (1 + c[i]);
      if (r < 1 || r > c[i] - 1) return;
    }
    pts.push_back(p);
  });
  return {CodeSet(torus, VertexSet(std::move(pts))), KappaAssignment::uniform(static_cast<int>(n))};
}

std::int64_t shape_ball_volume(const ClassKey &cells, int t) {
  if (cells.empty()) throw std::invalid_argument("empty shape");
  const std::size_t n = cells.front().dim();
  std::vector<std::pair<Coord, Coord>> bounds(n);
  for (std::size_t i = 0; i < n; ++i) {
    Coord lo = cells.front()[i], hi = lo;
    for (const Point &p : cells) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    bounds[i] = {lo - 1, hi + 1};
  }
  return static_cast<std::int64_t>(truncated_ball(VertexSet(cells), t, Ambient::window(bounds)).vertices.size());
}

void TemplateSpec::validate() const {
  if (shapes.empty()) throw std::invalid_argument("template has no shapes");
  if (!torus.is_torus()) throw std::invalid_argument("template needs a torus");
  std::int64_t volume = 0;
  for (const TemplateShape &s : shapes) {
    if (s.cells.empty() || s.cells.front().dim() != torus.dim())
      throw std::invalid_argument("shape " + s.name + " does not match the torus dimension");
    if (s.multiplicity < 1) throw std::invalid_argument("shape " + s.name + " needs a positive multiplicity");
    volume += s.multiplicity * shape_ball_volume(s.cells, s.radius);
  }
  if (volume != fr_volume) throw std::invalid_argument("FR volume does not equal sum m_i |ball_i|");
  if (fr_volume <= 0 || static_cast<std::int64_t>(torus.size()) % fr_volume != 0)
    throw std::invalid_argument("FR volume " + std::to_string(fr_volume) + " does not divide torus size " +
                                std::to_string(torus.size()));
}

TemplateSpec make_template(std::vector<TemplateShape> shapes, Ambient torus) {
  TemplateSpec spec{std::move(shapes), std::move(torus), 0};
  for (TemplateShape &s : spec.shapes) {
    s.cells = normalize_shape(s.cells);
    spec.fr_volume += s.multiplicity * shape_ball_volume(s.cells, s.radius);
  }
  return spec;
}

namespace {

std::vector<Coord> thm_torus(int n) {
  std::vector<Coord> m(static_cast<std::size_t>(n), 6);
  m.back() = 3;
  return m;
}

ClassKey flat_cube(int n) {
  std::vector<Point> cells;
  const auto dim = static_cast<std::size_t>(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << (dim - 1)); ++mask) {
    Point p{std::vector<Coord>(dim, 0)};
    for (std::size_t i = 0; i + 1 < dim; ++i) p[i] = static_cast<Coord>((mask >> (dim - 2 - i)) & 1);
    cells.push_back(std::move(p));
  }
  return normalize_shape(std::move(cells));
}

} // namespace

TemplateSpec template_thm3() { return template_thm4(3); }

TemplateSpec template_thm4(int n) {
  if (n < 3) throw std::invalid_argument("template_thm4 needs n >= 3");
  const auto dim = static_cast<std::size_t>(n);
  return make_template({{n == 3 ? "unit-square" : "cube", flat_cube(n), 1, 2},
                        {"singleton", {Point{std::vector<Coord>(dim, 0)}}, n - 2, 2}},
                       Ambient::torus(thm_torus(n)));
}

NearestRule template_rule(const TemplateSpec &spec) {
  for (const TemplateShape &s : spec.shapes)
    if (s.radius != spec.shapes.front().radius) return NearestRule::owner;
  return NearestRule::global;
}

TemplateBuild build_by_template(const TemplateSpec &spec, const BuildOptions &opts) {
  spec.validate();
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();

  TemplateBuild out;
  out.rule = template_rule(spec);
  const std::size_t nshapes = spec.shapes.size();
  const auto frs = static_cast<std::size_t>(spec.fr_count());
  std::vector<std::vector<ClassKey>> orients(nshapes);
  for (std::size_t s = 0; s < nshapes; ++s) orients[s] = shape_orientations(spec.shapes[s].cells);
  const Point origin{std::vector<Coord>(spec.torus.dim(), 0)};

  std::vector<std::size_t> combo(nshapes, 0);
  bool timed_out = false;
  for (;;) {
    std::vector<TilingShape> tshapes;
    KappaAssignment kappa;
    std::map<ClassKey, std::size_t> expected;
    for (std::size_t s = 0; s < nshapes; ++s) {
      const TemplateShape &ts = spec.shapes[s];
      const ClassKey &key = orients[s][combo[s]];
      tshapes.push_back({ts.name, key, ts.radius, {combo[s]}});
      kappa.set(key, ts.radius);
      expected[key] += static_cast<std::size_t>(ts.multiplicity) * frs;
    }
    TilingInstance ti = tiling_instance(spec.torus, tshapes);
    if (opts.seed != 0) {
      std::vector<std::size_t> perm(ti.cover.tiles.size());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::mt19937_64 rng(opts.seed);
      std::shuffle(perm.begin(), perm.end(), rng);
      TilingInstance shuffled;
      shuffled.cover.universe = ti.cover.universe;
      for (std::size_t p : perm) {
        shuffled.cover.tiles.push_back(ti.cover.tiles[p]);
        shuffled.placements.push_back(ti.placements[p]);
      }
      ti = std::move(shuffled);
    }

    SearchOptions sopts;
    sopts.threads = opts.threads;
    for (std::size_t i = 0; i < ti.placements.size(); ++i)
      if (ti.placements[i].shape == 0 && ti.placements[i].anchor == origin) sopts.pinned.push_back(i);
    if (opts.budget_seconds) {
      const double used = std::chrono::duration<double>(Clock::now() - start).count();
      sopts.budget_seconds = std::max(0.0, *opts.budget_seconds - used);
    }

    auto code_of = [&](const std::vector<std::size_t> &tiles) {
      std::vector<Point> pts;
      for (std::size_t t : tiles) {
        const VertexSet &comp = ti.placements[t].component;
        pts.insert(pts.end(), comp.begin(), comp.end());
      }
      return CodeSet(spec.torus, VertexSet(std::move(pts)));
    };
    const CoverPredicate accept = [&](const std::vector<std::size_t> &tiles) {
      const CodeSet S = code_of(tiles);
      return class_census(S) == expected && verify_kappa_ptmc(S, kappa, out.rule).pass;
    };
    const CoverOutcome oc = find_first(ti.cover, sopts, accept);
    out.nodes += oc.nodes;
    if (oc.kind == CoverKind::solution) {
      out.kind = CoverKind::solution;
      out.built = BuiltCode{code_of(oc.tiles), kappa};
      out.orientations = combo;
      for (std::size_t t : oc.tiles) out.placements.push_back(ti.placements[t]);
      return out;
    }
    if (oc.kind == CoverKind::timeout) {
      timed_out = true;
      break;
    }

    std::size_t s = nshapes;
    while (s > 0 && combo[s - 1] + 1 == orients[s - 1].size()) combo[--s] = 0;
    if (s == 0) break;
    ++combo[s - 1];
  }
  out.kind = timed_out ? CoverKind::timeout : CoverKind::infeasible;
  return out;
}

TemplateCheck check_template(const TemplateSpec &spec, const CodeSet &S, const KappaAssignment &kappa) {
  spec.validate();
  if (!(S.ambient == spec.torus)) throw std::invalid_argument("code ambient differs from the template torus");
  TemplateCheck chk;
  chk.radii_ok = true;
  for (const TemplateShape &s : spec.shapes) chk.census[s.name] = 0;

  std::vector<std::vector<ClassKey>> orients;
  for (const TemplateShape &s : spec.shapes) orients.push_back(shape_orientations(s.cells));
  bool all_radii = true;
  for (const Component &H : components_of(S)) {
    const std::optional<int> r = kappa.radius_for(H.class_key);
    if (!r) all_radii = false;
    bool matched = false;
    for (std::size_t s = 0; s < spec.shapes.size() && !matched; ++s)
      if (std::find(orients[s].begin(), orients[s].end(), H.class_key) != orients[s].end()) {
        matched = true;
        ++chk.census[spec.shapes[s].name];
        if (r != spec.shapes[s].radius) chk.radii_ok = false;
      }
    if (!matched) {
      ++chk.census[""];
      chk.radii_ok = false;
    }
  }
  chk.census_ok = !chk.census.count("");
  for (const TemplateShape &s : spec.shapes)
    if (chk.census[s.name] != static_cast<std::size_t>(s.multiplicity * spec.fr_count())) chk.census_ok = false;

  if (all_radii) {
    chk.report = verify_kappa_ptmc(S, kappa, template_rule(spec));
  } else {
    chk.report.pass = false;
    chk.report.failure = FailureKind::bad_radius;
    chk.report.detail = "some component class has no radius";
  }
  return chk;
}

} // namespace ptmc
