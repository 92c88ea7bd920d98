#include "ptmc/gamma2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ptmc::gamma {

namespace {

char letter(int s) {
  if (s < 0 || s > 2) throw std::invalid_argument("letter outside {0,1,2}");
  return static_cast<char>('0' + s);
}

std::string word_text(const Word &w) { return w.empty() ? "-" : w; }

Word glue_word(const Word &w, int s) {
  const char c = letter(s);
  if (!w.empty() && w.back() == c) return w.substr(0, w.size() - 1);
  return w + c;
}

void require_address(const TersquareAddress &J) {
  if (!is_reduced(J.wx) || !is_reduced(J.wy)) throw std::invalid_argument("address " + to_string(J) + " is not reduced");
}

} // namespace

bool is_reduced(const Word &w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < '0' || w[i] > '2') return false;
    if (i > 0 && w[i] == w[i - 1]) return false;
  }
  return true;
}

std::string to_string(const TersquareAddress &J) { return word_text(J.wx) + "|" + word_text(J.wy); }

TersquareAddress glue(const TersquareAddress &J, Axis axis, int s) {
  require_address(J);
  if (axis == Axis::x) return {glue_word(J.wx, s), J.wy};
  return {J.wx, glue_word(J.wy, s)};
}

std::string to_string(const GammaVertex &v) {
  return to_string(v.address) + "|" + std::to_string(v.a) + "|" + std::to_string(v.b);
}

GammaVertex parse_vertex(const std::string &id) {
  std::vector<std::string> parts{""};
  for (char c : id) {
    if (c == '|')
      parts.emplace_back();
    else
      parts.back() += c;
  }
  auto word = [&](const std::string &s) { return s == "-" ? Word{} : s; };
  auto label = [&](const std::string &s) {
    if (s.size() != 1 || s[0] < '0' || s[0] > '2') throw std::invalid_argument("bad vertex id " + id);
    return s[0] - '0';
  };
  if (parts.size() != 4 || parts[0].empty() || parts[1].empty()) throw std::invalid_argument("bad vertex id " + id);
  const GammaVertex v{{word(parts[0]), word(parts[1])}, label(parts[2]), label(parts[3])};
  if (!is_reduced(v.address.wx) || !is_reduced(v.address.wy) || !is_canonical(v))
    throw std::invalid_argument("vertex id " + id + " is not canonical");
  return v;
}

GammaVertex canonical_vertex(const TersquareAddress &J, int a, int b) {
  require_address(J);
  GammaVertex v{J, a, b};
  if (!J.wx.empty() && J.wx.back() == letter(a)) v.address.wx.pop_back();
  if (!J.wy.empty() && J.wy.back() == letter(b)) v.address.wy.pop_back();
  return v;
}

bool is_canonical(const GammaVertex &v) {
  if (v.a < 0 || v.a > 2 || v.b < 0 || v.b > 2) return false;
  if (!v.address.wx.empty() && v.address.wx.back() == letter(v.a)) return false;
  if (!v.address.wy.empty() && v.address.wy.back() == letter(v.b)) return false;
  return true;
}

std::vector<GammaVertex> tersquare_vertices(const TersquareAddress &J) {
  std::vector<GammaVertex> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) out.push_back(canonical_vertex(J, a, b));
  return out;
}

std::array<TersquareAddress, 4> containing_tersquares(const GammaVertex &v) {
  const TersquareAddress &J = v.address;
  const TersquareAddress X = glue(J, Axis::x, v.a);
  return {J, X, glue(J, Axis::y, v.b), glue(X, Axis::y, v.b)};
}

std::vector<GammaVertex> neighbors(const GammaVertex &v) {
  std::set<GammaVertex> out;
  for (const TersquareAddress &T : containing_tersquares(v))
    for (int s = 0; s < 3; ++s) {
      if (s != v.a) out.insert(canonical_vertex(T, s, v.b));
      if (s != v.b) out.insert(canonical_vertex(T, v.a, s));
    }
  return {out.begin(), out.end()};
}

int gamma_truncated_distance(const GammaVertex &u, const GammaVertex &v) {
  if (u == v) return 0;
  const auto cu = containing_tersquares(u);
  const auto cv = containing_tersquares(v);
  for (const TersquareAddress &T : cu)
    if (std::find(cv.begin(), cv.end(), T) != cv.end()) return (u.a != v.a) + (u.b != v.b);
  return 3;
}

std::string_view to_string(TersquareRole r) {
  switch (r) {
  case TersquareRole::center:
    return "center";
  case TersquareRole::subcentral:
    return "subcentral";
  case TersquareRole::corner:
    return "corner";
  case TersquareRole::other:
    return "other";
  }
  return "other";
}

Hive build_hive(const TersquareAddress &center) {
  require_address(center);
  Hive h{center, {center}};
  for (int s = 0; s < 3; ++s) {
    h.members.push_back(glue(center, Axis::x, s));
    h.members.push_back(glue(center, Axis::y, s));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h.members.push_back(glue(glue(center, Axis::x, i), Axis::y, j));
  return h;
}

GammaGraph::GammaGraph(std::vector<TersquareAddress> ts, const TersquareAddress &center) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  tersquares = std::move(ts);

  const Hive h = build_hive(center);
  for (const TersquareAddress &J : tersquares) {
    const auto it = std::find(h.members.begin(), h.members.end(), J);
    const auto pos = it - h.members.begin();
    if (it == h.members.end())
      roles.push_back(TersquareRole::other);
    else
      roles.push_back(pos == 0 ? TersquareRole::center : pos <= 6 ? TersquareRole::subcentral : TersquareRole::corner);
  }

  std::set<GammaVertex> all;
  for (const TersquareAddress &J : tersquares)
    for (const GammaVertex &v : tersquare_vertices(J)) all.insert(v);
  vertices.assign(all.begin(), all.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) index_[vertices[i]] = static_cast<VertexId>(i);

  membership.assign(vertices.size(), {});
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t t = 0; t < tersquares.size(); ++t) {
    const auto local = tersquare_vertices(tersquares[t]);
    for (std::size_t p = 0; p < 9; ++p) {
      membership[index_.at(local[p])].push_back(static_cast<std::uint32_t>(t));
      for (std::size_t q = p + 1; q < 9; ++q)
        if (p / 3 == q / 3 || p % 3 == q % 3) edges.emplace_back(index_.at(local[p]), index_.at(local[q]));
    }
  }
  std::vector<std::string> labels;
  for (const GammaVertex &v : vertices) labels.push_back(to_string(v));
  graph = Graph(std::move(labels), edges);
}

VertexId GammaGraph::id_of(const GammaVertex &v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) throw std::out_of_range("vertex " + to_string(v) + " is not in the graph");
  return it->second;
}

bool GammaGraph::contains(const TersquareAddress &J) const {
  return std::binary_search(tersquares.begin(), tersquares.end(), J);
}

GammaGraph hive_graph(const Hive &h) { return GammaGraph(h.members, h.center); }

GammaGraph build_region(int L) {
  if (L < 0) throw std::invalid_argument("region radius must be nonnegative");
  std::vector<std::vector<Word>> by_length{{Word{}}};
  for (int len = 1; len <= L; ++len) {
    std::vector<Word> next;
    for (const Word &w : by_length.back())
      for (int s = 0; s < 3; ++s)
        if (w.empty() || w.back() != letter(s)) next.push_back(w + letter(s));
    by_length.push_back(std::move(next));
  }
  std::vector<TersquareAddress> ts;
  for (int lx = 0; lx <= L; ++lx)
    for (int ly = 0; lx + ly <= L; ++ly)
      for (const Word &wx : by_length[static_cast<std::size_t>(lx)])
        for (const Word &wy : by_length[static_cast<std::size_t>(ly)]) ts.push_back({wx, wy});
  return GammaGraph(std::move(ts));
}

std::vector<VertexId> interior_vertices(const GammaGraph &g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertices.size(); ++v) {
    const auto cs = containing_tersquares(g.vertices[v]);
    if (std::all_of(cs.begin(), cs.end(), [&](const TersquareAddress &J) { return g.contains(J); })) out.push_back(v);
  }
  return out;
}

VerifyReport verify_gamma_code(const GammaGraph &g, const std::vector<VertexId> &code, int t,
                               const std::vector<VertexId> &scope) {
  if (t < 0 || t > 2) throw std::invalid_argument("radius must lie in [0, 2]");
  std::vector<bool> in(g.vertices.size(), false);
  for (VertexId c : code) in.at(c) = true;

  VerifyReport r;
  r.isolated = true;
  for (VertexId c : code)
    for (VertexId w : g.graph.neighbors(c))
      if (in[w]) r.isolated = false;

  struct Bad {
    VertexId v;
    std::vector<VertexId> involved;
  };
  std::optional<Bad> overlap, gap, nearest;
  for (VertexId u : scope) {
    const GammaVertex &gu = g.vertices[u];
    std::set<VertexId> near;
    for (const TersquareAddress &T : containing_tersquares(gu))
      for (const GammaVertex &w : tersquare_vertices(T))
        if (g.contains(w) && in[g.id_of(w)]) near.insert(g.id_of(w));
    std::vector<VertexId> owners, tied;
    int best = 3;
    for (VertexId c : near) {
      const int d = gamma_truncated_distance(gu, g.vertices[c]);
      if (d <= t) owners.push_back(c);
      if (d < best) {
        best = d;
        tied.clear();
      }
      if (d == best) tied.push_back(c);
    }
    if (near.empty()) tied = code;
    if (owners.size() > 1 && !overlap) overlap = Bad{u, owners};
    if (owners.empty() && !gap) gap = Bad{u, {}};
    if (tied.size() > 1 && !nearest) nearest = Bad{u, tied};
  }
  const std::pair<FailureKind, std::optional<Bad> *> order[] = {
      {FailureKind::overlap, &overlap}, {FailureKind::gap, &gap}, {FailureKind::nonunique_nearest, &nearest}};
  for (auto [kind, bad] : order) {
    if (!*bad) continue;
    r.pass = false;
    r.failure = kind;
    r.witness_vertices.push_back((*bad)->v);
    r.witness_vertices.insert(r.witness_vertices.end(), (*bad)->involved.begin(), (*bad)->involved.end());
    r.detail = "vertex " + g.graph.label((*bad)->v) + ": " + std::string(to_string(kind));
    break;
  }
  return r;
}

std::vector<GammaVertex> external_vertices(const Hive &h, int i, int j) {
  std::vector<GammaVertex> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != i && b != j) out.push_back(canonical_vertex(h.corner(i, j), a, b));
  return out;
}

CornerPartition corner_partition(const Hive &h) {
  const GammaGraph g = hive_graph(h);
  CornerPartition p;
  std::set<GammaVertex> seen;
  std::size_t total = 0;
  p.balls_match = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<GammaVertex> block = tersquare_vertices(h.corner(i, j));
      std::sort(block.begin(), block.end());
      total += block.size();
      seen.insert(block.begin(), block.end());
      for (const GammaVertex &e : external_vertices(h, i, j)) {
        std::vector<GammaVertex> ball;
        for (const GammaVertex &u : g.vertices)
          if (gamma_truncated_distance(u, e) <= 2) ball.push_back(u);
        if (ball != block) p.balls_match = false;
      }
      p.blocks.push_back(std::move(block));
    }
  p.disjoint = seen.size() == total;
  p.covers = seen.size() == g.vertices.size();
  return p;
}

std::vector<GammaVertex> thm6c_pds() {
  auto v = [](const char *wx, const char *wy, int a, int b) { return canonical_vertex({wx, wy}, a, b); };
  std::vector<GammaVertex> S{
      v("", "2", 0, 0), v("", "2", 0, 1), // (a)
      v("0", "", 1, 0), v("0", "", 2, 0), // (b)
      v("", "0", 2, 1), v("", "0", 2, 2), // (c)
      v("", "1", 0, 0), v("", "1", 0, 2), // (d)
      v("2", "", 0, 2), v("2", "", 1, 2), v("2", "", 1, 1), v("2", "", 0, 1), // (e) 4-cycle
  };
  for (int a : {0, 2}) // (f) prism
    for (int b = 0; b < 3; ++b) S.push_back(v("1", "", a, b));
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  return S;
}

CoverOutcome no_isolated_pds(const Hive &h, const SearchOptions &opts) {
  return solve(eds_instance(hive_graph(h).graph), opts);
}

} // namespace ptmc::gamma
