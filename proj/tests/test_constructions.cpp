#include <stdexcept>
#include "doctest.h"
#include "oracles.hpp"
#include "ptmc/constructions.hpp"

using namespace ptmc;

TEST_CASE("lattice basis") {
  const LatticeBasis b = thm2_lattice({2, 2});
  CHECK(b.generators == std::vector<Point>{{3, 0}, {0, 3}});
  CHECK(b.anchor == Point{0, 0});
  CHECK(b.determinant() == 9);
  const LatticeBasis c = thm2_lattice({4, 2, 3});
  CHECK(c.generators == std::vector<Point>{{5, 0, 0}, {0, 3, 0}, {0, 0, 4}});
  CHECK(c.determinant() == 60);
  CHECK(LatticeBasis{{{0, 1}, {1, 0}}, {0, 0}}.determinant() == -1);
  CHECK(LatticeBasis{{{2, 1}, {4, 2}}, {0, 0}}.determinant() == 0);
  CHECK(LatticeBasis{{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}, {0, 0, 0}}.determinant() == 18);
  CHECK_THROWS(thm2_lattice({1, 2}));
}

TEST_CASE("anchor of a sphere") {
  const Ambient w = Ambient::window({{-2, 6}, {-2, 6}});
  const BuiltCode b = build_thm2({3, 4}, {1, 1});
  const auto comp = components_of(b.code)[0];
  const Ball ball = truncated_ball(comp.vertices, 2, w);
  CHECK(anchor_of(ball.vertices) == Point{0, 0});
  CHECK(anchor_of(VertexSet({{1, 0}, {0, 1}})) == Point{0, 1});
}

TEST_CASE("lattice box builder examples") {
  const BuiltCode a = build_thm2({2, 2}, {1, 1});
  CHECK(a.code.ambient == Ambient::torus({3, 3}));
  CHECK(a.code.vertices == VertexSet({{1, 1}}));
  CHECK(verify_kappa_ptmc(a.code, a.kappa).pass);

  const BuiltCode q = build_thm2({2, 2, 2}, {1, 1, 1});
  CHECK(q.code.vertices.size() == 1);
  CHECK(verify_t_ptmc(q.code, 3).pass);

  const BuiltCode r = build_thm2({3, 2}, {2, 1});
  CHECK(r.code.ambient == Ambient::torus({8, 3}));
  const auto comps = components_of(r.code);
  REQUIRE(comps.size() == 2);
  CHECK(box_hull_check(comps[0], r.code.ambient) == BoxSpec{{2, 1}, 1});

  CHECK_THROWS_AS(build_thm2({1, 2}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_thm2({2, 2}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_thm2({2, 2}, {1}), std::invalid_argument);
}

TEST_CASE("lattice box codes verify with separated box components") {
  for (int n = 1; n <= 3; ++n) {
    const auto dim = static_cast<std::size_t>(n);
    std::vector<Coord> c(dim, 2), k(dim, 1);
    for (;;) {
      const BuiltCode b = build_thm2(c, k);
      CHECK(verify_t_ptmc(b.code, n).pass);
      for (const Component &H : components_of(b.code)) {
        const auto box = box_hull_check(H, b.code.ambient);
        REQUIRE(box);
        for (std::size_t i = 0; i < dim; ++i) CHECK(box->extents[i] == c[i] - 1);
      }
      std::vector<Coord> twos(dim, 2);
      CHECK(min_inter_component_l1(inflate_code(b.code, twos)) == 3);
      auto radius = [n](const std::vector<Point> &) { return n; };
      if (b.code.ambient.size() <= 300)
        CHECK(oracle::is_ptmc(b.code.vertices.points(), b.code.ambient.moduli(), radius, false));
      std::size_t i = 0;
      for (; i < dim; ++i) {
        if (c[i] < 4) {
          ++c[i];
          break;
        }
        c[i] = 2;
        if (k[i] < 2) {
          k[i] = 2;
          break;
        }
        k[i] = 1;
      }
      if (i == dim) break;
    }
  }
}

TEST_CASE("template arithmetic") {
  const TemplateSpec t3 = template_thm3();
  CHECK(t3.fr_volume == 54);
  CHECK(t3.torus == Ambient::torus({6, 6, 3}));
  CHECK(t3.fr_count() == 2);
  CHECK(shape_ball_volume(t3.shapes[0].cells, 1) == 20);
  CHECK(shape_ball_volume(t3.shapes[1].cells, 1) == 7);
  CHECK_NOTHROW(t3.validate());
  CHECK(template_thm4(3) == t3);
  CHECK(template_rule(t3) == NearestRule::global);

  const TemplateSpec t4 = template_thm4(4);
  CHECK(shape_ball_volume(t4.shapes[0].cells, 1) == 48);
  CHECK(shape_ball_volume(t4.shapes[1].cells, 2) == 33);
  CHECK(t4.fr_volume == 162);
  CHECK(t4.torus.size() == 648);
  CHECK(t4.fr_count() == 4);
  CHECK(t4.shapes[0].radius == 1);
  CHECK(t4.shapes[1].radius == 2);
  CHECK(template_rule(t4) == NearestRule::owner);
  CHECK_THROWS(template_thm4(2));

  for (const TemplateSpec &s : {t3, t4}) {
    std::int64_t v = 0;
    for (const TemplateShape &sh : s.shapes) v += sh.multiplicity * static_cast<std::int64_t>(oracle::ball_free(sh.cells, sh.radius).size());
    CHECK(v == s.fr_volume);
    CHECK(static_cast<std::int64_t>(s.torus.size()) % v == 0);
  }
}

TEST_CASE("template preconditions") {
  TemplateSpec bad = template_thm3();
  bad.torus = Ambient::torus({6, 6, 4});
  CHECK_THROWS_AS(build_by_template(bad), std::invalid_argument);
  TemplateSpec wrong = template_thm3();
  wrong.fr_volume = 53;
  CHECK_THROWS_AS(wrong.validate(), std::invalid_argument);
}

TEST_CASE("square and singleton template realization") {
  const TemplateSpec spec = template_thm3();
  const TemplateBuild b = build_by_template(spec);
  REQUIRE(b.kind == CoverKind::solution);
  REQUIRE(b.built);
  const CodeSet &S = b.built->code;
  CHECK(verify_kappa_ptmc(S, b.built->kappa).pass);
  CHECK(serial::verify_kappa_ptmc(S, b.built->kappa).pass);
  std::map<std::size_t, std::size_t> sizes;
  for (const auto &[key, count] : class_census(S)) sizes[key.size()] += count;
  CHECK(sizes == std::map<std::size_t, std::size_t>{{1, 4}, {4, 4}});
  for (const Component &H : components_of(S)) CHECK(box_hull_check(H, S.ambient));

  const TemplateCheck chk = check_template(spec, S, b.built->kappa);
  CHECK(chk.pass());
  CHECK(chk.census.at("unit-square") == 4);
  CHECK(chk.census.at("singleton") == 4);

  auto radius = [](const std::vector<Point> &) { return 1; };
  CHECK(oracle::is_ptmc(S.vertices.points(), S.ambient.moduli(), radius, false));

  const CodeSet stacked = inflate_code(S, {1, 1, 2});
  CHECK(stacked.ambient == Ambient::torus({6, 6, 6}));
  CHECK(verify_kappa_ptmc(stacked, b.built->kappa).pass);

  BuildOptions seeded;
  seeded.seed = 17;
  const TemplateBuild c = build_by_template(spec, seeded);
  REQUIRE(c.kind == CoverKind::solution);
  CHECK(check_template(spec, c.built->code, c.built->kappa).pass());
  CHECK(build_by_template(spec).built->code.vertices == S.vertices);
}

TEST_CASE("check_template rejects a wrong census") {
  const TemplateSpec spec = template_thm3();
  const BuiltCode b = build_thm2({2, 2, 2}, {2, 2, 1});
  const CodeSet S(spec.torus, b.code.vertices);
  const TemplateCheck chk = check_template(spec, S, KappaAssignment::uniform(1));
  CHECK_FALSE(chk.census_ok);
  CHECK_FALSE(chk.pass());
}
