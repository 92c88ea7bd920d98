#ifndef PTMC_VERIFY_HPP
#define PTMC_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ptmc/graph.hpp"
#include "ptmc/lattice_codes.hpp"

namespace ptmc {

enum class FailureKind { none, overlap, gap, nonunique_nearest, bad_radius, degenerate_ambient };

std::string_view to_string(FailureKind k);

struct VerifyReport {
  bool pass = true;
  FailureKind failure = FailureKind::none;
  /// Lattice verifiers: the offending ambient vertex first, then the code
  /// vertices involved (sorted).
  std::vector<Point> witness;
  /// Graph verifiers: the offending vertex first, then its code neighbours.
  std::vector<VertexId> witness_vertices;
  /// Graph verifiers: the code set is independent.
  bool isolated = false;
  std::string detail;

  explicit operator bool() const { return pass; }
  bool operator==(const VerifyReport &) const = default;
};

/// How condition (2) of a PTMC is read.
///  - global: every vertex has a unique nearest code vertex over all of S.
///  - owner:  the unique component whose ball holds the vertex has a unique
///            nearest vertex to it (the (t0,t1)-code reading).
enum class NearestRule { global, owner };

std::string_view to_string(NearestRule r);

/// Checks that the balls (H)^{kappa(<H>)} over components H partition the
/// torus and that nearest code vertices are unique. The first violated
/// condition is reported (overlap, then gap, then nearest) with the
/// lexicographically least offending vertex. Per-vertex scan runs under
/// OpenMP; the witness does not depend on the schedule.
///
/// Throws std::invalid_argument on a window ambient and std::out_of_range when
/// a component class has no radius.
VerifyReport verify_kappa_ptmc(const CodeSet &S, const KappaAssignment &kappa,
                               NearestRule rule = NearestRule::global);

VerifyReport verify_t_ptmc(const CodeSet &S, int t, NearestRule rule = NearestRule::global);

namespace serial {

/// Reference implementation: materialises every ball and scans every
/// (vertex, code vertex) pair. Same contract and reports as the parallel one.
VerifyReport verify_kappa_ptmc(const CodeSet &S, const KappaAssignment &kappa,
                               NearestRule rule = NearestRule::global);
VerifyReport verify_t_ptmc(const CodeSet &S, int t, NearestRule rule = NearestRule::global);

} // namespace serial

/// Perfect domination: every vertex outside S has exactly one neighbour in S.
/// `isolated` reports whether S is independent as well.
VerifyReport verify_pds(const Graph &G, const VertexIdSet &S);

/// Every vertex outside S sees exactly one vertex of S, or exactly two that are
/// joined by an edge.
VerifyReport verify_non_isolated_pds(const Graph &G, const VertexIdSet &S);

/// verify_pds(...).pass && isolated
inline bool is_efficient_dominating(const VerifyReport &r) { return r.pass && r.isolated; }

} // namespace ptmc

#endif // PTMC_VERIFY_HPP
