#ifndef PTMC_COVER_SEARCH_HPP
#define PTMC_COVER_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptmc/graph.hpp"
#include "ptmc/lattice_codes.hpp"

namespace ptmc {

struct Tile {
  std::string id;
  std::vector<std::uint32_t> cells; // sorted indices into the universe

  bool operator==(const Tile &) const = default;
};

/// Exact cover: choose tiles that cover every universe cell exactly once.
struct ExactCoverInstance {
  std::vector<std::string> universe;
  std::vector<Tile> tiles;

  /// Throws std::invalid_argument on empty tiles, out-of-range cells or
  /// duplicate tile ids; sorts and dedups each tile's cells.
  void validate();
  bool operator==(const ExactCoverInstance &) const = default;
};

enum class CoverKind { solution, infeasible, timeout };
std::string_view to_string(CoverKind k);

struct CoverOutcome {
  CoverKind kind = CoverKind::infeasible;
  std::vector<std::size_t> tiles; // ascending tile indices when kind == solution
  std::uint64_t nodes = 0;
};

struct SearchOptions {
  std::optional<double> budget_seconds;
  /// 0: OpenMP default.
  int threads = 0;
  /// Tiles forced into every cover (symmetry breaking).
  std::vector<std::size_t> pinned;
};

using CoverPredicate = std::function<bool(const std::vector<std::size_t> &)>;

/// First exact cover in depth-first order. The branching column is the one
/// with fewest remaining candidates (least cell id on ties); candidates are
/// tried in tile order. Subtrees of the first branching column are searched
/// in parallel and the lowest-index subtree holding a cover wins, so the
/// answer matches the serial search whenever the search completes.
CoverOutcome solve(const ExactCoverInstance &inst, const SearchOptions &opts = {});

/// Like solve, but only covers for which `accept` returns true count.
CoverOutcome find_first(const ExactCoverInstance &inst, const SearchOptions &opts, const CoverPredicate &accept);

struct Enumeration {
  std::vector<std::vector<std::size_t>> solutions; // lexicographic order
  std::uint64_t count = 0;
  /// The search space was exhausted (no timeout, limit not reached).
  bool exhaustive = false;
  bool timed_out = false;
  std::uint64_t nodes = 0;
};

/// All covers up to `limit`, sorted.
Enumeration enumerate(const ExactCoverInstance &inst, std::size_t limit, const SearchOptions &opts = {});
/// Counts covers without storing them.
Enumeration count_covers(const ExactCoverInstance &inst, const SearchOptions &opts = {});

namespace serial {
CoverOutcome solve(const ExactCoverInstance &inst, const SearchOptions &opts = {});
Enumeration enumerate(const ExactCoverInstance &inst, std::size_t limit, const SearchOptions &opts = {});
} // namespace serial

/// Independent check that `tiles` is an exact cover of the universe.
bool is_exact_cover(const ExactCoverInstance &inst, const std::vector<std::size_t> &tiles);

/// Efficient domination as exact cover: one tile per vertex, its closed
/// neighbourhood.
ExactCoverInstance eds_instance(const Graph &G);

/// A shape placed on a torus with a truncated radius.
struct TilingShape {
  std::string name;
  ClassKey cells;
  int radius = 1;
  /// Orientation indices (into shape_orientations) to place; empty means all.
  std::vector<std::size_t> orientations;
};

struct Placement {
  std::size_t shape = 0;
  std::size_t orientation = 0;
  Point anchor;
  VertexSet component;
};

struct TilingInstance {
  ExactCoverInstance cover;
  std::vector<Placement> placements; // parallel to cover.tiles
};

/// Distinct images of a shape under permutations of the axes, sorted.
std::vector<ClassKey> shape_orientations(const ClassKey &shape);

/// One tile per (shape, orientation, translation): the truncated ball of the
/// placed shape. Universe cells are torus points in index order. Tile ids read
/// "<shape>/o<k>@x,y,...".
TilingInstance tiling_instance(const Ambient &torus, const std::vector<TilingShape> &shapes);

struct SurveyEntry {
  bool exists = false;
  std::uint64_t count = 0;
};

/// Exhaustive efficient-dominating-set census of the grids P_m x P_n for
/// 3 <= m, n <= max_side.
std::map<std::pair<int, int>, SurveyEntry> grid_eds_survey(int max_side, const SearchOptions &opts = {});

} // namespace ptmc

#endif // PTMC_COVER_SEARCH_HPP
