#include <stdexcept>

#include "doctest.h"
#include "ptmc/constructions.hpp"
#include "ptmc/io.hpp"

using namespace ptmc;

TEST_CASE("code files round-trip") {
  const BuiltCode b = build_thm2({2, 3}, {2, 1});
  const std::string text = write_code_json(b.code, b.kappa);
  const CodeDocument doc = read_code_json(text);
  CHECK(doc.code.ambient == b.code.ambient);
  CHECK(doc.code.vertices == b.code.vertices);
  CHECK(doc.kappa == b.kappa.expanded_for(b.code));
  CHECK_FALSE(doc.templ);
  CHECK(write_code_json(doc.code, doc.kappa) == text);

  // Vertex order in the input does not matter.
  const std::string shuffled = R"({"ambient":{"kind":"torus","moduli":[4,4]},"vertices":[[2,2],[0,0]],"kappa":{}})";
  const std::string sorted = R"({"ambient":{"kind":"torus","moduli":[4,4]},"vertices":[[0,0],[2,2]],"kappa":{}})";
  const CodeDocument x = read_code_json(shuffled), y = read_code_json(sorted);
  CHECK(write_code_json(x.code, KappaAssignment::uniform(1)) == write_code_json(y.code, KappaAssignment::uniform(1)));
}

TEST_CASE("template block round-trips") {
  const TemplateSpec spec = template_thm3();
  const TemplateBuild tb = build_by_template(spec);
  REQUIRE(tb.built);
  const std::string text = write_code_json(tb.built->code, tb.built->kappa, &spec);
  const CodeDocument doc = read_code_json(text);
  REQUIRE(doc.templ);
  CHECK(*doc.templ == spec);
  CHECK(check_template(*doc.templ, doc.code, doc.kappa).pass());
}

TEST_CASE("window ambients serialize their bounds") {
  const CodeSet S(Ambient::window({{-2, 3}, {0, 4}}), VertexSet({Point{-2, 0}, Point{3, 4}}));
  const CodeDocument doc = read_code_json(write_code_json(S, KappaAssignment::uniform(1)));
  CHECK(doc.code.ambient == S.ambient);
  CHECK(doc.code.vertices == S.vertices);
}

TEST_CASE("malformed code files are rejected") {
  CHECK_THROWS_AS(read_code_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(read_code_json(R"({"ambient":{"kind":"sphere"},"vertices":[],"kappa":{}})"), std::invalid_argument);
  CHECK_THROWS_AS(read_code_json(R"({"ambient":{"kind":"torus","moduli":[4,4]},"vertices":[[5,0]],"kappa":{}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_code_json(R"({"ambient":{"kind":"torus","moduli":[4,4]},"vertices":[[1,0,0]],"kappa":{}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_code_json(R"({"ambient":{"kind":"torus","moduli":[4,4]},"vertices":[]})"),
                  std::invalid_argument);
}

TEST_CASE("exact-cover instances and outcomes") {
  ExactCoverInstance inst;
  inst.universe = {"a", "b", "c"};
  inst.tiles = {{"ab", {1, 0}}, {"c", {2}}, {"bc", {1, 2}}, {"a", {0}}};
  inst.validate();
  const ExactCoverInstance back = read_instance_json(write_instance_json(inst));
  CHECK(back == inst);

  const CoverOutcome oc = solve(inst);
  const std::string o = write_outcome_json(inst, oc);
  CHECK(o.find("\"solution\"") != std::string::npos);
  CHECK(o.find("\"ab\"") != std::string::npos);
  const std::string e = write_enumeration_json(inst, enumerate(inst, 10));
  CHECK(e.find("\"count\": 2") != std::string::npos);

  CHECK_THROWS_AS(read_instance_json(R"({"universe":["a"],"tiles":[{"id":"x","cells":[3]}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_instance_json(R"({"universe":["a"]})"), std::invalid_argument);
}

TEST_CASE("file helpers") {
  CHECK_THROWS_AS(read_file("/nonexistent/ptmc/file"), std::runtime_error);
  CHECK_THROWS_AS(write_file("/nonexistent/ptmc/file", "x"), std::runtime_error);
}
