#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "ptmc/gamma2.hpp"

namespace ptmc::gamma {

namespace {

std::string_view fill_for(TersquareRole r) {
  switch (r) {
  case TersquareRole::center:
    return "gray80";
  case TersquareRole::subcentral:
    return "lightblue";
  case TersquareRole::corner:
    return "yellow";
  case TersquareRole::other:
    return "white";
  }
  return "white";
}

TersquareAddress center_of(const GammaGraph &g) {
  for (std::size_t t = 0; t < g.tersquares.size(); ++t)
    if (g.roles[t] == TersquareRole::center) return g.tersquares[t];
  return {};
}

} // namespace

TersquareAddress parse_address(const std::string &text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("bad tersquare address " + text);
  auto word = [](const std::string &s) { return s == "-" ? Word{} : s; };
  TersquareAddress J{word(text.substr(0, bar)), word(text.substr(bar + 1))};
  if (!is_reduced(J.wx) || !is_reduced(J.wy)) throw std::invalid_argument("bad tersquare address " + text);
  return J;
}

GraphFormat parse_graph_format(const std::string &name) {
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw std::invalid_argument("unknown graph format '" + name + "' (expected dot or json)");
}

std::string export_graph(const GammaGraph &g, GraphFormat format) {
  if (format == GraphFormat::dot) {
    std::ostringstream os;
    os << "graph gamma2 {\n  node [shape=circle, style=filled];\n";
    for (VertexId v = 0; v < g.vertices.size(); ++v) {
      // Colour by the most central tersquare holding the vertex.
      TersquareRole role = TersquareRole::other;
      std::string members;
      for (std::uint32_t t : g.membership[v]) {
        role = std::min(role, g.roles[t]);
        if (!members.empty()) members += ' ';
        members += to_string(g.tersquares[t]);
      }
      os << "  \"" << g.graph.label(v) << "\" [fillcolor=" << fill_for(role) << ", tersquares=\"" << members
         << "\"];\n";
    }
    for (auto [u, v] : g.graph.edges()) os << "  \"" << g.graph.label(u) << "\" -- \"" << g.graph.label(v) << "\";\n";
    os << "}\n";
    return os.str();
  }

  nlohmann::ordered_json j;
  j["center"] = to_string(center_of(g));
  j["tersquares"] = nlohmann::ordered_json::array();
  for (std::size_t t = 0; t < g.tersquares.size(); ++t)
    j["tersquares"].push_back({{"address", to_string(g.tersquares[t])}, {"role", to_string(g.roles[t])}});
  j["vertices"] = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < g.vertices.size(); ++v)
    j["vertices"].push_back({{"id", g.graph.label(v)}, {"tersquares", g.membership[v]}});
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.graph.edges()) j["edges"].push_back({u, v});
  return j.dump(2) + "\n";
}

GammaGraph import_graph_json(const std::string &text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  std::vector<TersquareAddress> ts;
  for (const auto &t : j.at("tersquares")) ts.push_back(parse_address(t.at("address").get<std::string>()));
  GammaGraph g(ts, parse_address(j.at("center").get<std::string>()));

  // The document must describe exactly the graph its tersquares span.
  const auto &vs = j.at("vertices");
  if (vs.size() != g.vertices.size()) throw std::invalid_argument("vertex list does not match the tersquares");
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (parse_vertex(vs[v].at("id").get<std::string>()) != g.vertices[v])
      throw std::invalid_argument("vertex list does not match the tersquares");
    if (vs[v].at("tersquares").get<std::vector<std::uint32_t>>() != g.membership[v])
      throw std::invalid_argument("membership does not match the tersquares");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto &e : j.at("edges")) edges.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
  if (edges != g.graph.edges()) throw std::invalid_argument("edge list does not match the tersquares");
  return g;
}

} // namespace ptmc::gamma
