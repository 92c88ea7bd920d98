#ifndef PTMC_CONSTRUCTIONS_HPP
#define PTMC_CONSTRUCTIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptmc/cover_search.hpp"
#include "ptmc/lattice_codes.hpp"
#include "ptmc/verify.hpp"

namespace ptmc {

struct LatticeBasis {
  std::vector<Point> generators;
  Point anchor;

  /// Exact integer determinant of the generator matrix.
  std::int64_t determinant() const;
};

/// Generators (1+c_i) e_i, anchor at the origin. Throws for c_i < 2.
LatticeBasis thm2_lattice(const std::vector<Coord> &c);

/// Vertex of least coordinate sum, lexicographically least among ties.
Point anchor_of(const VertexSet &ball);

struct BuiltCode {
  CodeSet code;
  KappaAssignment kappa;
};

/// The box of extent c_i - 1 at offset 1 in every cell of the lattice spanned
/// by (1+c_i) e_i, on the torus with moduli (1+c_i) k_i; kappa is n
/// everywhere. Throws std::invalid_argument for c_i < 2 or k_i < 1.
BuiltCode build_thm2(const std::vector<Coord> &c, const std::vector<Coord> &k);

struct TemplateShape {
  std::string name;
  ClassKey cells;
  int radius = 1;
  /// Copies per fundamental region.
  int multiplicity = 1;

  bool operator==(const TemplateShape &) const = default;
};

/// Component shapes with radii and multiplicities per fundamental region (FR),
/// and the torus they are placed on.
struct TemplateSpec {
  std::vector<TemplateShape> shapes;
  Ambient torus;
  std::int64_t fr_volume = 0;

  /// Throws std::invalid_argument unless fr_volume == sum m_i |ball_i| and the
  /// FR volume divides the torus size.
  void validate() const;
  std::int64_t fr_count() const { return static_cast<std::int64_t>(torus.size()) / fr_volume; }
  bool operator==(const TemplateSpec &) const = default;
};

/// Size of the truncated t-ball of a shape in Z^n.
std::int64_t shape_ball_volume(const ClassKey &cells, int t);

/// Builds a spec with fr_volume computed from the shapes (not validated).
TemplateSpec make_template(std::vector<TemplateShape> shapes, Ambient torus);

/// Unit square (radius 1, twice) and singleton (radius 1, twice) on (6,6,3).
TemplateSpec template_thm3();
/// (n-1)-cube (radius 1, twice) and singleton (radius n-2, twice) on
/// (6,...,6,3). Throws for n < 3.
TemplateSpec template_thm4(int n);

/// Equal radii: the global nearest rule; otherwise the owner rule.
NearestRule template_rule(const TemplateSpec &spec);

struct BuildOptions {
  std::optional<double> budget_seconds;
  int threads = 0;
  /// 0: tiles in lexicographic order; otherwise a seeded shuffle.
  std::uint64_t seed = 0;
};

struct TemplateBuild {
  CoverKind kind = CoverKind::infeasible;
  std::optional<BuiltCode> built;
  NearestRule rule = NearestRule::global;
  /// Orientation index per shape of the returned code.
  std::vector<std::size_t> orientations;
  std::vector<Placement> placements;
  std::uint64_t nodes = 0;
};

/// Exact-cover realization of a template: balls of placed shapes tile the
/// torus, shape 0 is pinned at the origin, each shape uses one orientation
/// (tried in order) and a cover is accepted once it verifies and its class
/// census is m_i times the FR count. Timeout and proven infeasibility are
/// distinct outcomes. Throws std::invalid_argument when the spec is invalid.
TemplateBuild build_by_template(const TemplateSpec &spec, const BuildOptions &opts = {});

struct TemplateCheck {
  VerifyReport report;
  bool census_ok = false;
  bool radii_ok = false;
  /// Components per template shape (any orientation); unmatched classes are
  /// counted under "".
  std::map<std::string, std::size_t> census;
  bool pass() const { return report.pass && census_ok && radii_ok; }
};

/// Checks an externally supplied code against a template.
TemplateCheck check_template(const TemplateSpec &spec, const CodeSet &S, const KappaAssignment &kappa);

} // namespace ptmc

#endif // PTMC_CONSTRUCTIONS_HPP
