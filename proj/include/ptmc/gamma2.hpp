#ifndef PTMC_GAMMA2_HPP
#define PTMC_GAMMA2_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ptmc/cover_search.hpp"
#include "ptmc/graph.hpp"
#include "ptmc/verify.hpp"

// The ternary square compound: tersquares (copies of K3 x K3) glued along
// triangles. A tersquare is addressed by a pair of reduced words over
// {0,1,2}; a vertex by a tersquare address and a local label (a, b).
namespace ptmc::gamma {

/// Letters '0'..'2', no two equal adjacent letters.
using Word = std::string;

bool is_reduced(const Word &w);

struct TersquareAddress {
  Word wx;
  Word wy;

  auto operator<=>(const TersquareAddress &) const = default;
  bool operator==(const TersquareAddress &) const = default;
};

/// "wx|wy", '-' for an empty word.
std::string to_string(const TersquareAddress &J);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
TersquareAddress parse_address(const std::string &text);

enum class Axis { x, y };

/// Crosses the triangle s of the given axis: appends s to that word, or pops
/// the last letter when it already equals s. An involution.
TersquareAddress glue(const TersquareAddress &J, Axis axis, int s);

struct GammaVertex {
  TersquareAddress address;
  int a = 0;
  int b = 0;

  auto operator<=>(const GammaVertex &) const = default;
  bool operator==(const GammaVertex &) const = default;
};

/// "wx|wy|a|b", '-' for an empty word.
std::string to_string(const GammaVertex &v);
/// Inverse of to_string; throws std::invalid_argument on malformed ids.
GammaVertex parse_vertex(const std::string &id);

/// Canonical name of local vertex (a, b) of tersquare J: wx loses a trailing
/// a, wy a trailing b. Throws std::invalid_argument on invalid input.
GammaVertex canonical_vertex(const TersquareAddress &J, int a, int b);
bool is_canonical(const GammaVertex &v);

/// The nine vertices of J, local labels in lexicographic order.
std::vector<GammaVertex> tersquare_vertices(const TersquareAddress &J);

/// (wx,wy), (wx.a,wy), (wx,wy.b), (wx.a,wy.b), each glued.
std::array<TersquareAddress, 4> containing_tersquares(const GammaVertex &v);

/// The 8 neighbours, sorted.
std::vector<GammaVertex> neighbors(const GammaVertex &v);

/// 0 when equal; the local Hamming distance when u and v share a tersquare;
/// 3 otherwise.
int gamma_truncated_distance(const GammaVertex &u, const GammaVertex &v);

enum class TersquareRole { center, subcentral, corner, other };
std::string_view to_string(TersquareRole r);

/// The 16 tersquares of the 2-hive [[J]]: center, 6 subcentral (x0,y0,x1,y1,
/// x2,y2), 9 corner (i,j lexicographic).
struct Hive {
  TersquareAddress center;
  std::vector<TersquareAddress> members;

  TersquareAddress corner(int i, int j) const { return members[7 + static_cast<std::size_t>(3 * i + j)]; }
};

Hive build_hive(const TersquareAddress &center);

/// Subgraph spanned by a set of tersquares, with membership annotations.
struct GammaGraph {
  Graph graph; // labels are vertex ids
  std::vector<GammaVertex> vertices;
  std::vector<TersquareAddress> tersquares;
  std::vector<TersquareRole> roles; // relative to the hive of `center`
  /// Per vertex: indices into `tersquares` of the listed tersquares holding it.
  std::vector<std::vector<std::uint32_t>> membership;

  VertexId id_of(const GammaVertex &v) const;
  bool contains(const GammaVertex &v) const { return index_.count(v) != 0; }
  bool contains(const TersquareAddress &J) const;

  GammaGraph() = default;
  /// Tersquares are sorted and deduplicated; roles are relative to the hive
  /// centered at `center`.
  GammaGraph(std::vector<TersquareAddress> tersquares, const TersquareAddress &center = {});
  bool operator==(const GammaGraph &o) const {
    return graph == o.graph && vertices == o.vertices && tersquares == o.tersquares && roles == o.roles &&
           membership == o.membership;
  }

private:
  std::map<GammaVertex, VertexId> index_;
};

GammaGraph hive_graph(const Hive &h);
/// All tersquares with |wx| + |wy| <= L. Throws for L < 0.
GammaGraph build_region(int L);
/// Vertices all of whose four containing tersquares lie in the graph.
std::vector<VertexId> interior_vertices(const GammaGraph &g);

/// Checks, for every vertex of `scope`, that exactly one code vertex lies
/// within distance t and that the nearest code vertex is unique; distances are
/// gamma_truncated_distance and only code vertices inside g count. `isolated`
/// reports that no two code vertices are adjacent.
VerifyReport verify_gamma_code(const GammaGraph &g, const std::vector<VertexId> &code, int t,
                               const std::vector<VertexId> &scope);

/// Local labels (a, b) with a != i and b != j of corner (i, j), canonical.
std::vector<GammaVertex> external_vertices(const Hive &h, int i, int j);

struct CornerPartition {
  std::vector<std::vector<GammaVertex>> blocks; // corner (i,j) at 3i+j
  bool disjoint = false;
  bool covers = false;
  /// Every external vertex's hive-restricted 2-ball equals its block.
  bool balls_match = false;
  bool ok() const { return disjoint && covers && balls_match; }
};

CornerPartition corner_partition(const Hive &h);

struct HiveEnumeration {
  std::uint64_t selections = 0;
  std::uint64_t passing = 0;
};

/// Every choice of one external vertex per corner (4^9), each verified as an
/// isolated 2-code on the hive graph. OpenMP over selections.
HiveEnumeration enumerate_hive_2ptmc(const Hive &h);
/// Selection number k (base-4 digits, corner (0,0) most significant).
std::vector<GammaVertex> hive_selection(const Hive &h, std::uint32_t k);

namespace serial {
/// Reference: verify_gamma_code on every selection.
HiveEnumeration enumerate_hive_2ptmc(const Hive &h);
} // namespace serial

/// The 18-vertex non-isolated perfect dominating set of the hive [[]].
std::vector<GammaVertex> thm6c_pds();

/// Efficient domination of the hive graph by exact cover, run to exhaustion.
CoverOutcome no_isolated_pds(const Hive &h, const SearchOptions &opts = {});

struct Extension {
  int L = 0;
  std::uint64_t seed = 0;
  GammaGraph region;
  std::vector<VertexId> code;     // sorted
  std::vector<VertexId> interior; // sorted
  std::size_t unverified = 0;     // region vertices outside the interior
  std::vector<TersquareAddress> hives; // processed hive centers, in order
  VerifyReport interior_report;
};

/// Hive-by-hive greedy 2-code on build_region(L): each processed hive picks
/// one external vertex per corner, choices are shared between hives through
/// per-axis edge codes of the ternary tree. Seed 0 takes the least letter,
/// other seeds draw the choices at random. Throws for L < 2.
Extension extend_2ptmc(int L, std::uint64_t seed = 0);

enum class GraphFormat { dot, json };
/// Throws std::invalid_argument for an unknown name.
GraphFormat parse_graph_format(const std::string &name);
std::string export_graph(const GammaGraph &g, GraphFormat format);
/// Reads the JSON export back.
GammaGraph import_graph_json(const std::string &text);

} // namespace ptmc::gamma

#endif // PTMC_GAMMA2_HPP
