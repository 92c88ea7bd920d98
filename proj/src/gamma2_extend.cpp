#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "ptmc/gamma2.hpp"

namespace ptmc::gamma {

namespace {

Word step(const Word &w, int s) {
  const char c = static_cast<char>('0' + s);
  if (!w.empty() && w.back() == c) return w.substr(0, w.size() - 1);
  return w + c;
}

// Perfect edge code of the ternary tree, grown outward from the root: every
// node is free (no code edge) or matched (exactly one code edge). Neighbours
// of a free node are matched away from it; the other neighbours of a matched
// pair are free.
class TreeCode {
public:
  TreeCode(std::size_t depth, std::mt19937_64 *rng) {
    free_.insert(Word{});
    std::deque<Word> queue{Word{}};
    while (!queue.empty()) {
      const Word f = queue.front();
      queue.pop_front();
      for (int s = 0; s < 3; ++s) {
        const Word u = step(f, s);
        if (u.size() > depth || decided(u)) continue;
        int options[2], k = 0;
        for (int l = 0; l < 3; ++l)
          if (l != s) options[k++] = l;
        const int l = rng ? options[(*rng)() & 1] : options[0];
        const Word v = step(u, l);
        partner_[u] = l;
        partner_[v] = l;
        for (int t = 0; t < 3; ++t) {
          if (t != s && t != l) mark_free(step(u, t), depth, queue);
          if (t != l) mark_free(step(v, t), depth, queue);
        }
      }
    }
  }

  /// Letter of the code edge at w, or -1 when w is free or out of range.
  int partner(const Word &w) const {
    const auto it = partner_.find(w);
    return it == partner_.end() ? -1 : it->second;
  }
  const std::set<Word> &free_nodes() const { return free_; }

private:
  bool decided(const Word &w) const { return partner_.count(w) || free_.count(w); }
  void mark_free(const Word &w, std::size_t depth, std::deque<Word> &queue) {
    if (w.size() > depth || decided(w)) return;
    free_.insert(w);
    queue.push_back(w);
  }

  std::map<Word, int> partner_;
  std::set<Word> free_;
};

} // namespace

Extension extend_2ptmc(int L, std::uint64_t seed) {
  if (L < 2) throw std::invalid_argument("extend_2ptmc needs L >= 2");
  Extension ext;
  ext.L = L;
  ext.seed = seed;
  ext.region = build_region(L);

  std::mt19937_64 rng(seed);
  std::mt19937_64 *source = seed == 0 ? nullptr : &rng;
  const auto depth = static_cast<std::size_t>(L) + 2;
  const TreeCode tx(depth, source);
  const TreeCode ty(depth, source);

  // Hive centers: pairs of free nodes, breadth-first by total length.
  for (const Word &fx : tx.free_nodes())
    for (const Word &fy : ty.free_nodes())
      if (static_cast<int>(fx.size() + fy.size()) <= L) ext.hives.push_back({fx, fy});
  std::stable_sort(ext.hives.begin(), ext.hives.end(), [](const TersquareAddress &p, const TersquareAddress &q) {
    return p.wx.size() + p.wy.size() < q.wx.size() + q.wy.size();
  });

  std::set<VertexId> code;
  for (const TersquareAddress &c : ext.hives) {
    const Hive h = build_hive(c);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const TersquareAddress corner = h.corner(i, j);
        const int a = tx.partner(corner.wx), b = ty.partner(corner.wy);
        if (a < 0 || b < 0) throw std::logic_error("corner of a processed hive has no code edge");
        const GammaVertex v = canonical_vertex(corner, a, b);
        if (ext.region.contains(v)) code.insert(ext.region.id_of(v));
      }
  }
  ext.code.assign(code.begin(), code.end());
  ext.interior = interior_vertices(ext.region);
  ext.unverified = ext.region.vertices.size() - ext.interior.size();
  ext.interior_report = verify_gamma_code(ext.region, ext.code, 2, ext.interior);
  return ext;
}

} // namespace ptmc::gamma
