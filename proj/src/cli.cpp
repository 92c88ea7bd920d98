#include "ptmc/cli.hpp"

#include <omp.h>

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptmc/constructions.hpp"
#include "ptmc/cover_search.hpp"
#include "ptmc/gamma2.hpp"
#include "ptmc/io.hpp"
#include "ptmc/metric.hpp"
#include "ptmc/verify.hpp"

namespace ptmc::cli {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ojson points_json(const std::vector<Point> &pts) {
  ojson out = ojson::array();
  for (const Point &p : pts) out.push_back(p.coords);
  return out;
}

/// Shared state of one invocation; becomes the RunReport.
struct Context {
  std::vector<std::string> args;
  std::string out_dir;
  double budget = 0;
  bool has_budget = false;
  int threads = 0;
  std::uint64_t seed = 0;

  std::vector<std::string> inputs;
  ojson verdicts = ojson::object();
  ojson counts = ojson::object();
  ojson timings = ojson::object();
  ojson artifacts = ojson::array();

  std::optional<double> budget_seconds() const { return has_budget ? std::optional<double>(budget) : std::nullopt; }
  SearchOptions search_options() const { return {budget_seconds(), threads, {}}; }

  std::string input(const std::string &path) {
    inputs.push_back(read_file(path));
    return inputs.back();
  }

  void artifact(const std::string &name, const std::string &text) {
    if (out_dir.empty()) return;
    const std::string path = (std::filesystem::path(out_dir) / name).string();
    write_file(path, text);
    artifacts.push_back(path);
  }

  template <typename Fn> auto timed(const std::string &name, Fn &&fn) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn();
    timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

  std::string digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const std::string &a : args) h = fnv1a(fnv1a(h, a), std::string_view("\0", 1));
    for (const std::string &in : inputs) h = fnv1a(fnv1a(h, in), std::string_view("\0", 1));
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
  }

  std::string report() const {
    ojson j;
    j["command"] = args;
    j["inputs_digest"] = digest();
    j["verdicts"] = verdicts;
    j["counts"] = counts;
    j["timings"] = timings;
    j["artifacts"] = artifacts;
    return j.dump(2) + "\n";
  }
};

int status(Context &ctx, int code) {
  static const char *const names[] = {"pass", "fail", "usage", "timeout"};
  ctx.verdicts["status"] = names[code];
  return code;
}

void put_failure(ojson &v, const VerifyReport &r) {
  v["failure"] = to_string(r.failure);
  if (!r.witness.empty()) v["witness"] = points_json(r.witness);
  if (!r.detail.empty()) v["detail"] = r.detail;
}

void put_graph_failure(ojson &v, const VerifyReport &r, const Graph &g) {
  v["failure"] = to_string(r.failure);
  ojson w = ojson::array();
  for (VertexId id : r.witness_vertices) w.push_back(g.label(id));
  v["witness"] = w;
  if (!r.detail.empty()) v["detail"] = r.detail;
}

NearestRule parse_rule(const std::string &name) {
  if (name == "global") return NearestRule::global;
  if (name == "owner") return NearestRule::owner;
  throw UsageError("--rule: expected global or owner, got '" + name + "'");
}

/// Every component is a full box; records counts per box rank.
bool boxes_verdict(Context &ctx, const CodeSet &S) {
  std::map<std::string, std::size_t> by_rank;
  bool all = true;
  ojson offender;
  for (const Component &c : components_of(S)) {
    std::optional<BoxSpec> box;
    try {
      box = box_hull_check(c, S.ambient);
    } catch (const std::domain_error &) {
    }
    if (box) {
      ++by_rank[std::to_string(box->r)];
    } else if (all) {
      all = false;
      offender = c.min_vertex().coords;
    }
  }
  ctx.verdicts["boxes"] = all;
  if (!all) ctx.verdicts["box_witness"] = offender;
  ctx.counts["components_by_rank"] = by_rank;
  return all;
}

// ---- verify -----------------------------------------------------------------

int verify_ptmc(Context &ctx, const std::string &code_path, int t, bool has_t, const std::string &rule_name) {
  const CodeDocument doc = read_code_json(ctx.input(code_path));
  const bool use_template = doc.templ && !has_t;
  const KappaAssignment kappa = has_t ? KappaAssignment::uniform(t) : doc.kappa;
  const NearestRule rule =
      !rule_name.empty() ? parse_rule(rule_name) : (use_template ? template_rule(*doc.templ) : NearestRule::global);

  ctx.counts["vertices"] = doc.code.vertices.size();
  ctx.counts["components"] = components_of(doc.code).size();
  ctx.verdicts["rule"] = to_string(rule);
  bool pass = false;
  try {
    const VerifyReport r = ctx.timed("verify", [&] { return verify_kappa_ptmc(doc.code, kappa, rule); });
    pass = r.pass;
    if (!pass) put_failure(ctx.verdicts, r);
  } catch (const std::out_of_range &e) {
    ctx.verdicts["failure"] = to_string(FailureKind::bad_radius);
    ctx.verdicts["detail"] = e.what();
  }
  ctx.verdicts["ptmc"] = pass;
  if (use_template) {
    const TemplateCheck chk = ctx.timed("template", [&] { return check_template(*doc.templ, doc.code, kappa); });
    ctx.verdicts["census_ok"] = chk.census_ok;
    ctx.verdicts["radii_ok"] = chk.radii_ok;
    ctx.counts["census"] = chk.census;
    pass = pass && chk.census_ok && chk.radii_ok;
  }
  return status(ctx, pass ? kPass : kFail);
}

int verify_box_hull(Context &ctx, const std::string &code_path) {
  const CodeDocument doc = read_code_json(ctx.input(code_path));
  ctx.counts["components"] = components_of(doc.code).size();
  return status(ctx, boxes_verdict(ctx, doc.code) ? kPass : kFail);
}

int verify_pds_cmd(Context &ctx, const std::string &graph_path, const std::vector<std::string> &ids, bool non_isolated) {
  const gamma::GammaGraph g = gamma::import_graph_json(ctx.input(graph_path));
  VertexIdSet S;
  for (const std::string &id : ids) {
    const gamma::GammaVertex v = gamma::parse_vertex(id);
    if (!g.contains(v)) throw UsageError("--vertices: " + id + " is not a vertex of the graph");
    S.push_back(g.id_of(v));
  }
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  const VerifyReport r = non_isolated ? verify_non_isolated_pds(g.graph, S) : verify_pds(g.graph, S);
  ctx.counts["vertices"] = S.size();
  ctx.verdicts[non_isolated ? "non_isolated_pds" : "pds"] = r.pass;
  ctx.verdicts["isolated"] = r.isolated;
  if (!r.pass) put_graph_failure(ctx.verdicts, r, g.graph);
  return status(ctx, r.pass ? kPass : kFail);
}

// ---- construct --------------------------------------------------------------

int construct_thm2(Context &ctx, const std::vector<Coord> &c, const std::vector<Coord> &k) {
  if (c.size() != k.size()) throw UsageError("--c and --k need the same number of entries");
  const BuiltCode b = ctx.timed("build", [&] { return build_thm2(c, k); });
  const VerifyReport r = ctx.timed("verify", [&] { return verify_kappa_ptmc(b.code, b.kappa); });
  ctx.counts["torus_size"] = b.code.ambient.size();
  ctx.counts["vertices"] = b.code.vertices.size();
  ctx.counts["components"] = components_of(b.code).size();
  ctx.counts["min_l1"] = min_inter_component_l1(b.code);
  ctx.verdicts["ptmc"] = r.pass;
  if (!r.pass) put_failure(ctx.verdicts, r);
  const bool boxes = boxes_verdict(ctx, b.code);
  ctx.artifact("code.json", write_code_json(b.code, b.kappa));
  return status(ctx, r.pass && boxes ? kPass : kFail);
}

int construct_template(Context &ctx, const TemplateSpec &spec) {
  ojson balls = ojson::object();
  for (const TemplateShape &s : spec.shapes) balls[s.name] = shape_ball_volume(s.cells, s.radius);
  ctx.counts["ball_sizes"] = balls;
  ctx.counts["fr_volume"] = spec.fr_volume;
  ctx.counts["fr_count"] = spec.fr_count();
  ctx.counts["torus_size"] = spec.torus.size();

  BuildOptions opts{ctx.budget_seconds(), ctx.threads, ctx.seed};
  const TemplateBuild tb = ctx.timed("build", [&] { return build_by_template(spec, opts); });
  ctx.counts["nodes"] = tb.nodes;
  ctx.verdicts["outcome"] = to_string(tb.kind);
  if (tb.kind == CoverKind::timeout) return status(ctx, kTimeout);
  if (tb.kind == CoverKind::infeasible) return status(ctx, kFail);

  const BuiltCode &b = *tb.built;
  const TemplateCheck chk = ctx.timed("verify", [&] { return check_template(spec, b.code, b.kappa); });
  ctx.verdicts["rule"] = to_string(tb.rule);
  ctx.verdicts["ptmc"] = chk.report.pass;
  ctx.verdicts["census_ok"] = chk.census_ok;
  ctx.verdicts["radii_ok"] = chk.radii_ok;
  if (!chk.report.pass) put_failure(ctx.verdicts, chk.report);
  ctx.counts["census"] = chk.census;
  ctx.counts["orientations"] = tb.orientations;
  const bool boxes = boxes_verdict(ctx, b.code);
  ctx.artifact("code.json", write_code_json(b.code, b.kappa, &spec));
  return status(ctx, chk.pass() && boxes ? kPass : kFail);
}

// ---- search -----------------------------------------------------------------

/// Solves (limit 0) or enumerates; returns the first cover when one is known.
std::optional<std::vector<std::size_t>> run_search(Context &ctx, const ExactCoverInstance &inst, std::size_t limit,
                                                   int &code) {
  ctx.counts["cells"] = inst.universe.size();
  ctx.counts["tiles"] = inst.tiles.size();
  ctx.artifact("instance.json", write_instance_json(inst));
  const SearchOptions opts = ctx.search_options();
  if (limit == 0) {
    const CoverOutcome oc = ctx.timed("search", [&] { return solve(inst, opts); });
    ctx.verdicts["outcome"] = to_string(oc.kind);
    ctx.counts["nodes"] = oc.nodes;
    ctx.artifact("outcome.json", write_outcome_json(inst, oc));
    code = oc.kind == CoverKind::timeout ? kTimeout : kPass;
    if (oc.kind == CoverKind::solution) return oc.tiles;
    return std::nullopt;
  }
  const Enumeration e = ctx.timed("search", [&] { return enumerate(inst, limit, opts); });
  ctx.verdicts["outcome"] = to_string(e.timed_out        ? CoverKind::timeout
                                      : e.count > 0 ? CoverKind::solution
                                                    : CoverKind::infeasible);
  ctx.verdicts["exhaustive"] = e.exhaustive;
  ctx.counts["solutions"] = e.count;
  ctx.counts["nodes"] = e.nodes;
  ctx.artifact("outcome.json", write_enumeration_json(inst, e));
  code = e.timed_out ? kTimeout : kPass;
  if (!e.solutions.empty()) return e.solutions.front();
  return std::nullopt;
}

int search_instance(Context &ctx, const std::string &path, std::size_t limit) {
  const ExactCoverInstance inst = read_instance_json(ctx.input(path));
  int code = kPass;
  run_search(ctx, inst, limit, code);
  return status(ctx, code);
}

Ambient torus_or_grid(const std::vector<Coord> &torus, const std::vector<Coord> &grid) {
  if (torus.empty() == grid.empty()) throw UsageError("give exactly one of --torus and --grid");
  if (!torus.empty()) return Ambient::torus(torus);
  std::vector<std::pair<Coord, Coord>> bounds;
  for (Coord m : grid) {
    if (m < 1) throw UsageError("--grid: sides must be positive");
    bounds.emplace_back(0, m - 1);
  }
  return Ambient::window(std::move(bounds));
}

int search_eds(Context &ctx, const std::vector<Coord> &torus, const std::vector<Coord> &grid, std::size_t limit) {
  const Ambient a = torus_or_grid(torus, grid);
  int code = kPass;
  run_search(ctx, eds_instance(lattice_graph(a)), limit, code);
  return status(ctx, code);
}

int search_parallelotope(Context &ctx, const std::vector<Coord> &torus, const std::vector<Coord> &extents, int t,
                         std::size_t limit) {
  if (torus.empty()) throw UsageError("--torus is required");
  if (extents.size() != torus.size()) throw UsageError("--extents needs one entry per torus axis");
  const Ambient a = Ambient::torus(torus);
  if (t < 1 || t > static_cast<int>(a.dim())) throw UsageError("--t must lie in [1, n]");
  std::vector<std::pair<Coord, Coord>> box;
  for (Coord e : extents) {
    if (e < 1) throw UsageError("--extents: entries must be positive");
    box.emplace_back(0, e - 1);
  }
  const ClassKey cells = enumerate_vertices(Ambient::window(box));
  const TilingInstance ti = tiling_instance(a, {TilingShape{"box", cells, t, {}}});
  int code = kPass;
  const auto tiles = run_search(ctx, ti.cover, limit, code);
  if (tiles) {
    std::vector<Point> pts;
    for (std::size_t tile : *tiles)
      for (const Point &p : ti.placements[tile].component) pts.push_back(p);
    const CodeSet S(a, VertexSet(std::move(pts)));
    const VerifyReport r = ctx.timed("verify", [&] { return verify_t_ptmc(S, t); });
    ctx.verdicts["ptmc"] = r.pass;
    if (!r.pass) put_failure(ctx.verdicts, r);
    ctx.artifact("code.json", write_code_json(S, KappaAssignment::uniform(t)));
    if (!r.pass) code = kFail;
  }
  return status(ctx, code);
}

// ---- gamma ------------------------------------------------------------------

int gamma_count(Context &ctx, const std::string &center, bool use_serial) {
  const gamma::Hive h = gamma::build_hive(gamma::parse_address(center));
  const gamma::HiveEnumeration e = ctx.timed("enumerate", [&] {
    return use_serial ? gamma::serial::enumerate_hive_2ptmc(h) : gamma::enumerate_hive_2ptmc(h);
  });
  ctx.counts["selections"] = e.selections;
  ctx.counts["count"] = e.passing;
  const bool all = e.passing == e.selections;
  ctx.verdicts["all_selections_verified"] = all;
  return status(ctx, all ? kPass : kFail);
}

int gamma_thm6c(Context &ctx) {
  const gamma::GammaGraph g = gamma::hive_graph(gamma::build_hive({}));
  VertexIdSet S;
  for (const gamma::GammaVertex &v : gamma::thm6c_pds()) S.push_back(g.id_of(v));
  std::sort(S.begin(), S.end());
  const VerifyReport non = verify_non_isolated_pds(g.graph, S);
  const VerifyReport iso = verify_pds(g.graph, S);
  ctx.counts["vertices"] = S.size();
  ctx.verdicts["non_isolated_pds"] = non.pass;
  ctx.verdicts["isolated_pds"] = is_efficient_dominating(iso);
  return status(ctx, non.pass && !is_efficient_dominating(iso) ? kPass : kFail);
}

int gamma_no_isolated(Context &ctx, const std::string &center) {
  const gamma::Hive h = gamma::build_hive(gamma::parse_address(center));
  const CoverOutcome oc = ctx.timed("search", [&] { return gamma::no_isolated_pds(h, ctx.search_options()); });
  ctx.counts["nodes"] = oc.nodes;
  ctx.verdicts["outcome"] = to_string(oc.kind);
  if (oc.kind == CoverKind::timeout) return status(ctx, kTimeout);
  return status(ctx, oc.kind == CoverKind::infeasible ? kPass : kFail);
}

int gamma_extend(Context &ctx, int L) {
  if (L < 2) throw UsageError("--L must be at least 2");
  const gamma::Extension ext = ctx.timed("extend", [&] { return gamma::extend_2ptmc(L, ctx.seed); });
  ctx.counts["region_vertices"] = ext.region.vertices.size();
  ctx.counts["code"] = ext.code.size();
  ctx.counts["interior"] = ext.interior.size();
  ctx.counts["unverified"] = ext.unverified;
  ctx.counts["hives"] = ext.hives.size();
  ctx.verdicts["interior_2ptmc"] = ext.interior_report.pass;
  ctx.verdicts["isolated"] = ext.interior_report.isolated;
  if (!ext.interior_report.pass) put_graph_failure(ctx.verdicts, ext.interior_report, ext.region.graph);
  ojson doc;
  doc["L"] = L;
  doc["seed"] = ctx.seed;
  doc["vertices"] = ojson::array();
  for (VertexId v : ext.code) doc["vertices"].push_back(ext.region.graph.label(v));
  ctx.artifact("gamma_code.json", doc.dump(2) + "\n");
  return status(ctx, ext.interior_report.pass ? kPass : kFail);
}

int gamma_structure(Context &ctx, int L) {
  if (L < 1) throw UsageError("--L must be positive");
  const gamma::Hive h = gamma::build_hive({});
  const gamma::GammaGraph hg = gamma::hive_graph(h);
  ctx.counts["hive_tersquares"] = h.members.size();
  ctx.counts["hive_vertices"] = hg.vertices.size();
  ctx.counts["hive_edges"] = hg.graph.edge_count();
  const bool partition = gamma::corner_partition(h).ok();
  ctx.verdicts["corner_partition"] = partition;

  const gamma::GammaGraph region = gamma::build_region(L);
  const auto inner = gamma::interior_vertices(region);
  bool regular = true;
  for (VertexId v : inner) regular = regular && region.graph.degree(v) == 8 && region.membership[v].size() == 4;
  ctx.counts["region_vertices"] = region.vertices.size();
  ctx.counts["region_interior"] = inner.size();
  ctx.verdicts["interior_degree_8_in_4_tersquares"] = regular;
  const bool pass = h.members.size() == 16 && hg.vertices.size() == 81 && partition && regular;
  return status(ctx, pass ? kPass : kFail);
}

// ---- export -----------------------------------------------------------------

int export_cmd(Context &ctx, bool hive, const std::string &center, int L, const std::string &format_name) {
  if (ctx.out_dir.empty()) throw UsageError("--out: export needs an output directory");
  const gamma::GraphFormat format = gamma::parse_graph_format(format_name);
  if (!hive && L < 0) throw UsageError("--L must be non-negative");
  const gamma::GammaGraph g =
      hive ? gamma::hive_graph(gamma::build_hive(gamma::parse_address(center))) : gamma::build_region(L);
  ctx.counts["vertices"] = g.vertices.size();
  ctx.counts["edges"] = g.graph.edge_count();
  ctx.counts["tersquares"] = g.tersquares.size();
  ctx.artifact(format == gamma::GraphFormat::dot ? "graph.dot" : "graph.json", gamma::export_graph(g, format));
  return status(ctx, kPass);
}

// ---- survey -----------------------------------------------------------------

int survey_grid(Context &ctx, int max_side) {
  if (max_side < 3) throw UsageError("--max must be at least 3");
  std::map<std::pair<int, int>, SurveyEntry> table;
  try {
    table = ctx.timed("survey", [&] { return grid_eds_survey(max_side, ctx.search_options()); });
  } catch (const std::runtime_error &e) {
    ctx.verdicts["detail"] = e.what();
    return status(ctx, kTimeout);
  }
  ojson grids = ojson::object();
  ojson with = ojson::array();
  for (const auto &[mn, entry] : table) {
    grids[std::to_string(mn.first) + "x" + std::to_string(mn.second)] = entry.count;
    if (entry.exists) with.push_back({mn.first, mn.second});
  }
  ctx.counts["eds"] = grids;
  ctx.verdicts["grids_with_eds"] = with;
  return status(ctx, kPass);
}

int survey_balls(Context &ctx, int max_n) {
  if (max_n < 1) throw UsageError("--n must be positive");
  bool all = true;
  ojson sizes = ojson::object();
  for (int n = 1; n <= max_n; ++n) {
    const Ambient cube = Ambient::window(std::vector<std::pair<Coord, Coord>>(static_cast<std::size_t>(n), {-1, 1}));
    const VertexSet origin({Point(std::vector<Coord>(static_cast<std::size_t>(n), 0))});
    for (int t = 0; t <= n; ++t) {
      const std::int64_t formula = ball_size_formula(n, t);
      const Ball b = truncated_ball(origin, t, cube);
      all = all && !b.clipped && static_cast<std::int64_t>(b.vertices.size()) == formula;
      sizes[std::to_string(n) + "," + std::to_string(t)] = formula;
    }
  }
  ctx.counts["ball_sizes"] = sizes;
  ctx.verdicts["formula_matches"] = all;
  return status(ctx, all ? kPass : kFail);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Context ctx;
  ctx.args = args;

  CLI::App app{"Truncated-metric perfect codes: verification, construction and search", "ptmc"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--out", ctx.out_dir, "Directory for report.json and artifacts");
  auto *budget = app.add_option("--budget", ctx.budget, "Search budget in seconds")->check(CLI::NonNegativeNumber);
  app.add_option("--threads", ctx.threads, "Worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", ctx.seed, "Seed for randomized choices (0: deterministic order)");

  std::function<int()> action;
  auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &desc, std::function<int()> fn) {
    CLI::App *sub = parent->add_subcommand(name, desc);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  // verify
  CLI::App *verify = app.add_subcommand("verify", "Check a code or dominating set");
  verify->require_subcommand(1);
  std::string code_path, rule_name, graph_path;
  int t = 0;
  std::vector<std::string> vertex_ids;
  bool non_isolated = false;
  CLI::App *vp = leaf(verify, "ptmc", "Verify a code file as a PTMC", [&] {
    return verify_ptmc(ctx, code_path, t, verify->get_subcommand("ptmc")->count("--t") > 0, rule_name);
  });
  vp->add_option("--code", code_path, "Code JSON file")->required()->check(CLI::ExistingFile);
  vp->add_option("--t", t, "Uniform radius, overriding the file's kappa")->check(CLI::NonNegativeNumber);
  vp->add_option("--rule", rule_name, "Nearest rule: global or owner");
  CLI::App *vb = leaf(verify, "box-hull", "Check that every component is a full box",
                      [&] { return verify_box_hull(ctx, code_path); });
  vb->add_option("--code", code_path, "Code JSON file")->required()->check(CLI::ExistingFile);
  CLI::App *vd = leaf(verify, "pds", "Perfect domination on an exported graph",
                      [&] { return verify_pds_cmd(ctx, graph_path, vertex_ids, non_isolated); });
  vd->add_option("--graph", graph_path, "Graph JSON from export")->required()->check(CLI::ExistingFile);
  vd->add_option("--vertices", vertex_ids, "Vertex ids wx|wy|a|b")->delimiter(',')->required();
  vd->add_flag("--non-isolated", non_isolated, "Allow pairs of adjacent dominators");

  // construct
  CLI::App *construct = app.add_subcommand("construct", "Build codes from the known constructions");
  construct->require_subcommand(1);
  std::vector<Coord> c, k;
  int n = 4;
  CLI::App *c2 = leaf(construct, "thm2", "Boxes on a lattice of period 1+c_i", [&] { return construct_thm2(ctx, c, k); });
  c2->add_option("--c", c, "Box parameters c_i >= 2")->delimiter(',')->required();
  c2->add_option("--k", k, "Periods per axis k_i >= 1")->delimiter(',')->required();
  leaf(construct, "thm3", "Unit squares and singletons on the torus (6,6,3)",
       [&] { return construct_template(ctx, template_thm3()); });
  CLI::App *c4 = leaf(construct, "thm4", "(n-1)-cubes and singletons on (6,...,6,3)", [&] {
    if (n < 3) throw UsageError("--n must be at least 3");
    return construct_template(ctx, template_thm4(n));
  });
  c4->add_option("--n", n, "Dimension");

  // search
  CLI::App *search = app.add_subcommand("search", "Exact-cover searches");
  search->require_subcommand(1);
  std::string instance_path;
  std::size_t limit = 0;
  std::vector<Coord> torus, grid, extents;
  int radius = 1;
  CLI::App *si = leaf(search, "instance", "Solve an exact-cover instance file",
                      [&] { return search_instance(ctx, instance_path, limit); });
  si->add_option("--instance", instance_path, "Instance JSON file")->required()->check(CLI::ExistingFile);
  CLI::App *se = leaf(search, "eds", "Efficient dominating sets of a grid or torus",
                      [&] { return search_eds(ctx, torus, grid, limit); });
  se->add_option("--torus", torus, "Torus moduli")->delimiter(',');
  se->add_option("--grid", grid, "Grid side lengths")->delimiter(',');
  CLI::App *sp = leaf(search, "parallelotope", "Tile a torus by t-balls of a box shape",
                      [&] { return search_parallelotope(ctx, torus, extents, radius, limit); });
  sp->add_option("--torus", torus, "Torus moduli")->delimiter(',')->required();
  sp->add_option("--extents", extents, "Box extents per axis")->delimiter(',')->required();
  sp->add_option("--t", radius, "Radius");
  for (CLI::App *s : {si, se, sp}) s->add_option("--limit", limit, "Enumerate up to this many covers (0: first only)");

  // gamma
  CLI::App *gam = app.add_subcommand("gamma", "The ternary square compound");
  gam->require_subcommand(1);
  std::string center = "-|-";
  bool use_serial = false;
  int L = 4;
  CLI::App *gc = leaf(gam, "count-2ptmc", "Verify all 4^9 corner selections of a hive",
                      [&] { return gamma_count(ctx, center, use_serial); });
  gc->add_option("--center", center, "Hive center wx|wy");
  gc->add_flag("--serial", use_serial, "Use the reference implementation");
  leaf(gam, "thm6c", "Check the 18-vertex non-isolated perfect dominating set", [&] { return gamma_thm6c(ctx); });
  CLI::App *gn = leaf(gam, "no-isolated-pds", "Prove the hive has no efficient dominating set",
                      [&] { return gamma_no_isolated(ctx, center); });
  gn->add_option("--center", center, "Hive center wx|wy");
  CLI::App *ge = leaf(gam, "extend", "Grow a 2-code over the region of radius L", [&] { return gamma_extend(ctx, L); });
  ge->add_option("--L", L, "Region radius");
  CLI::App *gs = leaf(gam, "structure", "Hive and region structure checks", [&] { return gamma_structure(ctx, L); });
  gs->add_option("--L", L, "Region radius");

  // export
  CLI::App *exp = app.add_subcommand("export", "Write a hive or region graph");
  exp->require_subcommand(1);
  std::string format = "dot";
  CLI::App *eh = leaf(exp, "hive", "The 2-hive around a center",
                      [&] { return export_cmd(ctx, true, center, L, format); });
  eh->add_option("--center", center, "Hive center wx|wy");
  CLI::App *er = leaf(exp, "region", "All tersquares with |wx|+|wy| <= L",
                      [&] { return export_cmd(ctx, false, center, L, format); });
  er->add_option("--L", L, "Region radius");
  for (CLI::App *s : {eh, er}) s->add_option("--format", format, "dot or json");

  // survey
  CLI::App *survey = app.add_subcommand("survey", "Small exhaustive censuses");
  survey->require_subcommand(1);
  int max_side = 7, max_n = 5;
  CLI::App *sg = leaf(survey, "grid-eds", "Efficient dominating sets of P_m x P_n",
                      [&] { return survey_grid(ctx, max_side); });
  sg->add_option("--max", max_side, "Largest side");
  CLI::App *sb = leaf(survey, "balls", "Ball sizes against the closed formula", [&] { return survey_balls(ctx, max_n); });
  sb->add_option("--n", max_n, "Largest dimension");

  if (!args.empty() && args.front().rfind("-", 0) != 0 && !app.get_subcommand_no_throw(args.front())) {
    err << "unknown subcommand '" << args.front() << "'\nRun with --help for more information.\n";
    return kUsage;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  ctx.has_budget = budget->count() > 0;
  if (ctx.threads > 0) omp_set_num_threads(ctx.threads);

  int code = kUsage;
  try {
    if (!ctx.out_dir.empty()) std::filesystem::create_directories(ctx.out_dir);
    code = action();
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const std::string report = ctx.report();
  out << report;
  if (!ctx.out_dir.empty()) write_file((std::filesystem::path(ctx.out_dir) / "report.json").string(), report);
  return code;
}

} // namespace ptmc::cli
