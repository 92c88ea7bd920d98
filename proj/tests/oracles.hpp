#ifndef PTMC_TESTS_ORACLES_HPP
#define PTMC_TESTS_ORACLES_HPP

// Deliberately naive reference implementations. They share no code with the
// library beyond the plain data types.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ptmc/ambient.hpp"
#include "ptmc/cover_search.hpp"
#include "ptmc/graph.hpp"

namespace oracle {

using ptmc::Coord;
using ptmc::Point;

/// Wrapped |v_i - u_i| computed by scanning both directions.
Coord axis_gap(Coord u, Coord v, Coord modulus);
int rho(const Point &u, const Point &v, const std::vector<Coord> &moduli);

/// All torus points (odometer order) within rho <= t of some point of H.
std::vector<Point> ball(const std::vector<Point> &H, int t, const std::vector<Coord> &moduli);
/// Same in Z^n, scanning the bounding box of H grown by one.
std::vector<Point> ball_free(const std::vector<Point> &H, int t);
std::vector<Point> torus_points(const std::vector<Coord> &moduli);

/// Components by union-find over all pairs at wrapped unit distance.
std::vector<std::vector<Point>> components(const std::vector<Point> &S, const std::vector<Coord> &moduli);

/// Partition + unique-nearest check by exhaustive (vertex, code vertex) scan,
/// radius per component supplied by `radius_of`.
bool is_ptmc(const std::vector<Point> &S, const std::vector<Coord> &moduli,
             const std::function<int(const std::vector<Point> &)> &radius_of, bool owner_rule);

/// Every exact cover by subset enumeration (at most ~22 tiles), each sorted,
/// in lexicographic order.
std::vector<std::vector<std::size_t>> exact_covers(const ptmc::ExactCoverInstance &inst);

/// Efficient dominating sets (as vertex bitmasks, at most 64 vertices)
/// containing `forced_in` and avoiding `forced_out`, by subset enumeration.
std::uint64_t count_eds(const ptmc::Graph &G, const std::vector<ptmc::VertexId> &forced_in,
                        const std::vector<ptmc::VertexId> &forced_out);

/// Tersquares glued along shared triangles by union-find over the 9 local
/// slots of each tersquare (slot 3a+b of tersquare k is k*9+3a+b).
struct GluedGraph {
  std::size_t vertex_count = 0;
  std::vector<std::size_t> slot_class;
  std::set<std::pair<std::size_t, std::size_t>> edges;
};
GluedGraph glued_graph(const std::vector<std::pair<std::string, std::string>> &tersquares);

/// Random instance with `tiles` tiles over `cells` cells.
ptmc::ExactCoverInstance random_instance(std::mt19937_64 &rng, std::size_t cells, std::size_t tiles);

} // namespace oracle

#endif // PTMC_TESTS_ORACLES_HPP
