#include "ptmc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ptmc {

namespace {

using ojson = nlohmann::ordered_json;

ojson points_json(const std::vector<Point> &pts) {
  ojson out = ojson::array();
  for (const Point &p : pts) out.push_back(p.coords);
  return out;
}

std::vector<Point> points_from(const nlohmann::json &j, std::size_t dim) {
  std::vector<Point> out;
  for (const auto &p : j) {
    Point q(p.get<std::vector<Coord>>());
    if (q.dim() != dim) throw std::invalid_argument("vertex " + to_string(q) + " has the wrong dimension");
    out.push_back(std::move(q));
  }
  return out;
}

ojson ambient_json(const Ambient &a) {
  ojson j;
  if (a.is_torus()) {
    j["kind"] = "torus";
    j["moduli"] = a.moduli();
  } else {
    j["kind"] = "window";
    ojson b = ojson::array();
    for (auto [lo, hi] : a.bounds()) b.push_back({lo, hi});
    j["bounds"] = b;
  }
  return j;
}

Ambient ambient_from(const nlohmann::json &j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "torus") return Ambient::torus(j.at("moduli").get<std::vector<Coord>>());
  if (kind == "window") {
    std::vector<std::pair<Coord, Coord>> bounds;
    for (const auto &b : j.at("bounds")) bounds.emplace_back(b.at(0).get<Coord>(), b.at(1).get<Coord>());
    return Ambient::window(std::move(bounds));
  }
  throw std::invalid_argument("unknown ambient kind '" + kind + "'");
}

template <typename Fn> auto parse_or_throw(const std::string &what, Fn &&fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(what + ": " + e.what());
  }
}

ojson tile_ids(const ExactCoverInstance &inst, const std::vector<std::size_t> &tiles) {
  ojson out = ojson::array();
  for (std::size_t t : tiles) out.push_back(inst.tiles.at(t).id);
  return out;
}

} // namespace

std::string write_code_json(const CodeSet &S, const KappaAssignment &kappa, const TemplateSpec *templ) {
  // One vertex per line keeps large codes readable and diffs small.
  std::ostringstream os;
  os << "{\n  \"ambient\": " << ambient_json(S.ambient).dump() << ",\n  \"vertices\": [";
  const auto &pts = S.vertices.points();
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? ",\n    " : "\n    ") << ojson(pts[i].coords).dump();
  os << (pts.empty() ? "]" : "\n  ]");
  ojson k = ojson::object();
  const KappaAssignment expanded = kappa.expanded_for(S);
  for (const auto &[hash, t] : expanded.by_hash()) k[hash] = t;
  os << ",\n  \"kappa\": " << k.dump();
  if (templ) {
    ojson shapes = ojson::array();
    for (const TemplateShape &s : templ->shapes)
      shapes.push_back(
          {{"name", s.name}, {"cells", points_json(s.cells)}, {"radius", s.radius}, {"multiplicity", s.multiplicity}});
    os << ",\n  \"template\": " << ojson{{"fr_volume", templ->fr_volume}, {"shapes", shapes}}.dump();
  }
  os << "\n}\n";
  return os.str();
}

CodeDocument read_code_json(const std::string &text) {
  return parse_or_throw("code file", [&] {
    const nlohmann::json j = nlohmann::json::parse(text);
    const Ambient a = ambient_from(j.at("ambient"));
    std::vector<Point> pts = points_from(j.at("vertices"), a.dim());
    for (const Point &p : pts)
      if (!a.contains(p)) throw std::invalid_argument("vertex " + to_string(p) + " lies outside the ambient");
    CodeDocument doc{CodeSet(a, VertexSet(std::move(pts))), {}, std::nullopt};
    for (const auto &[hash, t] : j.at("kappa").items()) doc.kappa.set_by_hash(hash, t.get<int>());
    if (j.contains("template")) {
      const auto &tj = j.at("template");
      std::vector<TemplateShape> shapes;
      for (const auto &s : tj.at("shapes"))
        shapes.push_back({s.at("name").get<std::string>(), normalize_shape(points_from(s.at("cells"), a.dim())),
                          s.at("radius").get<int>(), s.at("multiplicity").get<int>()});
      TemplateSpec spec = make_template(std::move(shapes), a);
      if (spec.fr_volume != tj.at("fr_volume").get<std::int64_t>())
        throw std::invalid_argument("template fr_volume does not match its shapes");
      spec.validate();
      doc.templ = std::move(spec);
    }
    return doc;
  });
}

std::string write_instance_json(const ExactCoverInstance &inst) {
  ojson j;
  j["universe"] = inst.universe;
  j["tiles"] = ojson::array();
  for (const Tile &t : inst.tiles) j["tiles"].push_back({{"id", t.id}, {"cells", t.cells}});
  return j.dump(2) + "\n";
}

ExactCoverInstance read_instance_json(const std::string &text) {
  return parse_or_throw("instance file", [&] {
    const nlohmann::json j = nlohmann::json::parse(text);
    ExactCoverInstance inst;
    inst.universe = j.at("universe").get<std::vector<std::string>>();
    for (const auto &t : j.at("tiles"))
      inst.tiles.push_back({t.at("id").get<std::string>(), t.at("cells").get<std::vector<std::uint32_t>>()});
    inst.validate();
    return inst;
  });
}

std::string write_outcome_json(const ExactCoverInstance &inst, const CoverOutcome &outcome) {
  ojson j;
  j["kind"] = to_string(outcome.kind);
  j["tiles"] = tile_ids(inst, outcome.tiles);
  j["nodes"] = outcome.nodes;
  return j.dump(2) + "\n";
}

std::string write_enumeration_json(const ExactCoverInstance &inst, const Enumeration &e) {
  ojson j;
  j["count"] = e.count;
  j["exhaustive"] = e.exhaustive;
  j["timed_out"] = e.timed_out;
  j["solutions"] = ojson::array();
  for (const auto &s : e.solutions) j["solutions"].push_back(tile_ids(inst, s));
  j["nodes"] = e.nodes;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

} // namespace ptmc
