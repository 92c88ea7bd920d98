#include <algorithm>
#include <cstdint>

#include "ptmc/gamma2.hpp"

namespace ptmc::gamma {

namespace {

constexpr std::uint32_t kSelections = 1u << 18; // 4^9

std::uint32_t digit(std::uint32_t k, int corner) { return (k >> (2 * (8 - corner))) & 3u; }

} // namespace

std::vector<GammaVertex> hive_selection(const Hive &h, std::uint32_t k) {
  std::vector<GammaVertex> out;
  for (int c = 0; c < 9; ++c) out.push_back(external_vertices(h, c / 3, c % 3)[digit(k, c)]);
  return out;
}

HiveEnumeration enumerate_hive_2ptmc(const Hive &h) {
  const GammaGraph g = hive_graph(h);
  const std::size_t n = g.vertices.size();
  std::vector<std::uint8_t> dist(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      dist[u * n + v] = static_cast<std::uint8_t>(gamma_truncated_distance(g.vertices[u], g.vertices[v]));
  std::uint32_t ext[9][4];
  for (int c = 0; c < 9; ++c) {
    const auto e = external_vertices(h, c / 3, c % 3);
    for (std::size_t k = 0; k < 4; ++k) ext[c][k] = g.id_of(e[k]);
  }

  std::uint64_t passing = 0;
#pragma omp parallel for schedule(static) reduction(+ : passing)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(kSelections); ++k) {
    std::uint32_t centers[9];
    for (int c = 0; c < 9; ++c) centers[c] = ext[c][digit(static_cast<std::uint32_t>(k), c)];
    bool ok = true;
    for (int p = 0; p < 9 && ok; ++p)
      for (int q = p + 1; q < 9 && ok; ++q) ok = dist[centers[p] * n + centers[q]] >= 2;
    for (std::size_t u = 0; u < n && ok; ++u) {
      int owners = 0, best = 4, ties = 0;
      for (std::uint32_t c : centers) {
        const int d = dist[u * n + c];
        owners += d <= 2;
        if (d < best) {
          best = d;
          ties = 1;
        } else if (d == best) {
          ++ties;
        }
      }
      ok = owners == 1 && ties == 1;
    }
    passing += ok;
  }
  return {kSelections, passing};
}

namespace serial {

HiveEnumeration enumerate_hive_2ptmc(const Hive &h) {
  const GammaGraph g = hive_graph(h);
  std::vector<VertexId> all(g.vertices.size());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  HiveEnumeration e{kSelections, 0};
  for (std::uint32_t k = 0; k < kSelections; ++k) {
    std::vector<VertexId> code;
    for (const GammaVertex &v : hive_selection(h, k)) code.push_back(g.id_of(v));
    std::sort(code.begin(), code.end());
    const VerifyReport r = verify_gamma_code(g, code, 2, all);
    e.passing += r.pass && r.isolated;
  }
  return e;
}

} // namespace serial

} // namespace ptmc::gamma
