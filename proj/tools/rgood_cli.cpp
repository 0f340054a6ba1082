#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgood/chains.hpp"
#include "rgood/constructions.hpp"
#include "rgood/engines.hpp"
#include "rgood/error.hpp"
#include "rgood/exact.hpp"
#include "rgood/json_io.hpp"
#include "rgood/pattern.hpp"
#include "rgood/profile.hpp"
#include "rgood/search.hpp"
#include "table.hpp"

namespace {

using namespace rgood;

// Exit status of a completed command; output is written either way.
struct CommandResult {
  std::string text;
  int status = 0;
};

// Files read by the current command, with their content hashes.
std::map<std::string, std::string> g_inputs;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  g_inputs[path] = content_hash(buffer.str());
  return buffer.str();
}

Json load_json(const std::string& path) {
  const std::string text = read_text(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

// Pattern from the mini-language or a hypergraph JSON file.
Pattern load_pattern(const std::string& spec) {
  if (is_pattern_spec(spec)) return parse_pattern(spec);
  return Pattern::graph(hypergraph_from_json(load_json(spec)), spec);
}

// A colouring file or a construction instance carrying one.
Json load_coloring_doc(const std::string& path) {
  Json j = load_json(path);
  if (!j.is_object()) throw InvalidInput("'" + path + "' is not a colouring object");
  return j;
}

TwoColoring coloring_of(const Json& doc) {
  return coloring_from_json(doc.contains("coloring") ? doc.at("coloring") : doc);
}

Tournament load_tournament(const std::string& spec) {
  if (spec == "cyclic") return Tournament::cyclic_triangle();
  auto number_after = [&](const std::string& prefix) {
    try {
      return std::stoi(spec.substr(prefix.size()));
    } catch (const std::exception&) {
      throw InvalidInput("bad tournament spec '" + spec + "'");
    }
  };
  if (spec.rfind("transitive:", 0) == 0) return Tournament::transitive(number_after("transitive:"));
  if (spec.rfind("paley:", 0) == 0) return Tournament::quadratic_residue(number_after("paley:"));
  return tournament_from_json(load_json(spec));
}

int need(int value, const char* flag) {
  if (value < 0) throw InvalidInput(std::string("missing required option --") + flag);
  return value;
}

SearchLimits limits_from(int max_vertices, std::uint64_t budget, bool allow_inexact) {
  SearchLimits limits;
  limits.max_vertices = max_vertices;
  limits.node_budget = budget;
  limits.allow_inexact = allow_inexact;
  return limits;
}

Json levels_json(const std::vector<LevelStat>& levels) {
  Json out = Json::array();
  for (const auto& l : levels) out.push_back({{"order", l.order}, {"classes", l.classes}, {"nodes", l.nodes}});
  return out;
}

Json stats_json(const SearchStats& s) { return {{"nodes", s.nodes}, {"prunes", s.prunes}}; }

struct ConstructArgs {
  std::string name;
  int k = 3, ell = 2, n = -1, chi = 2, sigma = 1, vg = -1, t = -1, m = -1, q = 2, alpha = -1;
  std::string variant = "pencil";
  std::string j_file;
  std::string tournament = "cyclic";
};

CommandResult cmd_construct(const ConstructArgs& a) {
  auto j_graph = [&](int t) {
    return a.j_file.empty() ? tau_lower_construction(a.k - 1, t).graph : hypergraph_from_json(load_json(a.j_file));
  };
  if (a.name == "tau") {
    const auto tc = tau_lower_construction(a.k, need(a.alpha, "alpha"));
    Json j;
    j["construction"] = "tau_lower";
    j["parameters"] = {{"k", a.k}, {"alpha", a.alpha}};
    j["trivial_regime"] = tc.trivial_regime;
    j["graph"] = hypergraph_to_json(tc.graph);
    return {dump(j)};
  }
  LowerBoundInstance inst;
  if (a.name == "burr") {
    inst = burr_coloring(a.k, a.chi, a.sigma, need(a.vg, "vg"));
  } else if (a.name == "ell-path") {
    inst = ell_path_lb(a.k, a.ell, need(a.n, "n"), a.chi);
  } else if (a.name == "loose-path") {
    inst = loose_path_lb(a.k, a.chi, need(a.n, "n"), need(a.t, "t"), j_graph(a.t));
  } else if (a.name == "loose-cycle") {
    LooseCycleVariant variant;
    if (a.variant == "tau")
      variant = LooseCycleVariant::kTau;
    else if (a.variant == "pencil")
      variant = LooseCycleVariant::kPencil;
    else
      throw InvalidInput("--variant must be tau or pencil");
    std::optional<Hypergraph> j;
    if (variant == LooseCycleVariant::kTau || !a.j_file.empty()) j = j_graph(need(a.t, "t"));
    inst = loose_cycle_lb(a.k, a.chi, need(a.n, "n"), need(a.t, "t"), variant, a.q, j);
  } else if (a.name == "non-transitive") {
    inst = non_transitive_lb(need(a.m, "m"), need(a.t, "t"));
  } else if (a.name == "transitive") {
    inst = transitive_lb(load_tournament(a.tournament), need(a.n, "n"));
  } else {
    throw InvalidInput("unknown construction '" + a.name + "'");
  }
  return {dump(instance_to_json(inst))};
}

struct VerifyArgs {
  std::string coloring, red, blue;
  int max_vertices = -1;
  std::uint64_t budget = 0;
  bool allow_inexact = false;
};

CommandResult cmd_verify(const VerifyArgs& a) {
  const Json doc = load_coloring_doc(a.coloring);
  const TwoColoring c = coloring_of(doc);
  std::optional<Pattern> red, blue;
  if (!a.red.empty())
    red = load_pattern(a.red);
  else if (doc.contains("claimed_red_free"))
    red = parse_pattern(doc.at("claimed_red_free").get<std::string>());
  if (!a.blue.empty())
    blue = load_pattern(a.blue);
  else if (doc.contains("blue_target"))
    blue = Pattern::graph(hypergraph_from_json(doc.at("blue_target")), doc.value("claimed_blue_free", ""));
  if (!red || !blue) throw InvalidInput("verify needs --red and --blue (or an instance naming its targets)");
  const auto report = verify_free(c, *red, *blue, limits_from(a.max_vertices, a.budget, a.allow_inexact));
  CertificateContext ctx;
  ctx.coloring = c;
  Json j;
  j["free"] = report.free;
  j["exact"] = report.certificate.exact;
  j["red_target"] = red->label();
  j["blue_target"] = blue->label();
  j["red_search"] = stats_json(report.red_stats);
  j["blue_search"] = stats_json(report.blue_stats);
  j["certificate"] = certificate_to_json(report.certificate, ctx);
  return {dump(j)};
}

struct RamseyArgs {
  std::string red, blue;
  int cap = 8;
  std::uint64_t budget = 0;
};

CommandResult cmd_ramsey(const RamseyArgs& a, int jobs) {
  const Pattern red = load_pattern(a.red);
  const Pattern blue = load_pattern(a.blue);
  ExactOptions options;
  options.jobs = jobs;
  options.node_budget = a.budget;
  const auto result = ramsey_exact(red, blue, a.cap, options);
  const auto gap = goodness_gap(red, blue.hypergraph(), result);
  Json j;
  j["red"] = red.label();
  j["blue"] = blue.label();
  j["exact"] = result.exact;
  if (result.exact) j["value"] = result.value;
  j["lower_bound"] = result.lower_bound;
  j["note"] = result.note;
  j["levels"] = levels_json(result.levels);
  j["search"] = stats_json(result.stats);
  j["burr_bound"] = gap.burr;
  j["burr_hypothesis"] = gap.burr_hypothesis;
  j["gap"] = gap.gap;
  j["verdict"] = verdict_name(gap.verdict);
  j["lower_witness"] = coloring_to_json(result.lower_witness);
  return {dump(j)};
}

CommandResult cmd_tau(int k, int alpha, int cap) {
  const auto t = tau_exact(k, alpha, cap);
  Json j;
  j["k"] = k;
  j["alpha"] = alpha;
  j["exact"] = t.exact;
  if (t.exact) j["value"] = t.value;
  j["lower"] = t.lower;
  j["upper"] = t.upper;
  j["trivial_regime"] = t.trivial_regime;
  j["min_alpha"] = t.min_alpha;
  j["note"] = t.note;
  j["witness"] = hypergraph_to_json(t.witness);
  return {dump(j)};
}

CommandResult cmd_dramsey(int chi, int cap, bool gap, int jobs) {
  ExactOptions options;
  options.jobs = jobs;
  const auto d = directed_ramsey_exact(chi, cap, options);
  Json j;
  j["chi"] = chi;
  j["exact"] = d.exact;
  if (d.exact) j["value"] = d.value;
  j["note"] = d.note;
  j["levels"] = levels_json(d.levels);
  j["witness"] = tournament_to_json(d.witness);
  if (gap) {
    const auto g = consecutive_gap_check(chi, cap, options);
    j["gap_check"] = {{"value", g.value},
                      {"previous", g.previous},
                      {"inequality_holds", g.inequality_holds},
                      {"augmented_free", g.augmented_free},
                      {"ok", g.ok},
                      {"augmented", tournament_to_json(g.augmented)}};
  }
  return {dump(j)};
}

struct ChainArgs {
  std::string action;
  std::string coloring;
  std::string blocks;
  std::string chain;
  int red_size = 4, blue_size = 4, ell = 2, components = 2;
  double epsilon = 0.5;
};

Json chain_json(const CliqueChain& chain) {
  Json j;
  j["closed"] = chain.closed;
  j["k"] = chain.k;
  j["ell"] = chain.ell;
  j["vertices"] = chain.vertices;
  Json iv = Json::array();
  for (const auto& i : chain.intervals) iv.push_back({i.start, i.length});
  j["intervals"] = iv;
  return j;
}

CommandResult cmd_chain(const ChainArgs& a) {
  const TwoColoring c = coloring_of(load_coloring_doc(a.coloring));
  if (a.action == "validate") {
    if (a.chain.empty()) throw InvalidInput("chain validate needs --chain");
    CertificateContext ignored;
    const auto chain = chain_from_certificate(certificate_from_json(load_json(a.chain), &ignored));
    const auto v = validate_chain(chain, &c);
    Json j;
    j["ok"] = v.ok;
    j["violations"] = v.violations;
    j["flexible"] = v.flexible;
    j["spine"] = v.spine;
    j["trivial"] = v.trivial;
    return {dump(j), v.ok ? 0 : 3};
  }
  std::vector<std::vector<Vertex>> blocks;
  Json j;
  if (a.blocks.empty()) {
    const auto part = clique_partition(c, a.red_size, a.blue_size);
    Json list = Json::array();
    for (const auto& b : part.blocks) {
      list.push_back({{"color", color_name(b.color)}, {"vertices", b.vertices}});
      if (b.color == Color::kRed) blocks.push_back(b.vertices);
    }
    j["partition"] = {{"blocks", list}, {"leftover", part.leftover}};
  } else {
    blocks = load_json(a.blocks).get<std::vector<std::vector<Vertex>>>();
  }
  if (a.action == "partition") {
    if (!a.blocks.empty()) throw InvalidInput("chain partition computes its blocks; drop --blocks");
    return {dump(j)};
  }
  if (a.action != "assemble") throw InvalidInput("chain action must be partition, assemble or validate");
  const auto system = build_path_system(c, blocks, a.ell, a.components, a.epsilon);
  Json sys;
  sys["blocks"] = system.blocks;
  Json forest = Json::array();
  for (std::size_t e = 0; e < system.forest.size(); ++e)
    forest.push_back({{"edge", {system.forest[e].first, system.forest[e].second}},
                      {"paths", {system.paths[e][0], system.paths[e][1]}}});
  sys["forest"] = forest;
  sys["components"] = system.components;
  sys["stalled"] = system.stalled;
  sys["diagnostic"] = system.diagnostic;
  j["path_system"] = sys;
  const auto assembly = assemble_chains(c, system);
  Json chains = Json::array();
  for (const auto& chain : assembly.chains) chains.push_back(chain_json(chain));
  j["chains"] = chains;
  j["leftover"] = assembly.leftover;
  return {dump(j)};
}

struct EngineArgs {
  std::string mode;
  std::string coloring;
  std::string target;
  std::string params;
  int order = -1;
  bool cycle = false;
};

CommandResult cmd_engine(const EngineArgs& a, std::optional<std::uint64_t> seed) {
  const TwoColoring c = coloring_of(load_coloring_doc(a.coloring));
  EngineParams params = a.params.empty() ? EngineParams{} : engine_params_from_json(load_json(a.params));
  if (seed) params.seed = *seed;
  if (a.order >= 0) params.target = a.order;
  if (a.cycle) params.cycle = true;
  if (params.target <= 0) throw InvalidInput("engine needs a positive target order (--n or params.target)");
  EngineReport report;
  if (a.mode == "loose") {
    if (a.target.empty()) throw InvalidInput("engine loose needs --target");
    report = loose_witness_engine(c, load_pattern(a.target).hypergraph(), params);
  } else if (a.mode == "tight") {
    const std::string spec = a.target.empty() ? "tth:2:2" : a.target;
    int chi = 0, m = 0;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "tth:%d:%d%c", &chi, &m, &tail) != 2)
      throw InvalidInput("engine tight needs --target tth:chi:m");
    report = tight_witness_engine(c, chi, m, params);
  } else {
    throw InvalidInput("engine mode must be loose or tight");
  }
  Json j = engine_report_to_json(report, c);
  j["params"] = engine_params_to_json(params);
  return {dump(j)};
}

CommandResult cmd_check(const std::vector<std::string>& files) {
  Json results = Json::array();
  bool all_ok = true;
  for (const auto& file : files) {
    CertificateContext ctx;
    const Certificate cert = certificate_from_json(load_json(file), &ctx);
    const auto r = check_certificate(cert, ctx);
    all_ok = all_ok && r.ok;
    Json e;
    e["file"] = file;
    e["kind"] = kind_name(cert.kind);
    e["ok"] = r.ok;
    if (!r.ok) e["reason"] = r.reason;
    results.push_back(e);
  }
  Json j;
  j["results"] = results;
  j["all_ok"] = all_ok;
  return {dump(j), all_ok ? 0 : 3};
}

Json parameter_record(const CLI::App& app) {
  Json record = Json::object();
  auto add = [&](const CLI::App& a, const std::string& prefix) {
    for (const CLI::Option* opt : a.get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      const auto& values = opt->results();
      std::string joined;
      for (std::size_t i = 0; i < values.size(); ++i) joined += (i ? " " : "") + values[i];
      record[prefix + opt->get_name()] = joined;
    }
  };
  add(app, "");
  for (const CLI::App* sub : app.get_subcommands()) {
    add(*sub, sub->get_name() + ".");
    for (const CLI::App* inner : sub->get_subcommands()) add(*inner, sub->get_name() + "." + inner->get_name() + ".");
  }
  return record;
}

int run(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"rgood: hypergraph Ramsey goodness toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string out_path, manifest_path;
  app.add_option("--jobs", jobs, "worker threads for parallel searches")->check(CLI::Range(1, 256));
  CLI::Option* seed_opt = app.add_option("--seed", seed, "random seed");
  app.add_option("--out", out_path, "write output here instead of stdout");
  app.add_option("--manifest", manifest_path, "write a run manifest");

  std::function<CommandResult()> action;

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a lower-bound colouring");
  construct->add_option("name", ca.name, "burr|ell-path|loose-path|loose-cycle|non-transitive|transitive|tau")
      ->required();
  construct->add_option("--k", ca.k);
  construct->add_option("--ell", ca.ell);
  construct->add_option("--n", ca.n);
  construct->add_option("--chi", ca.chi);
  construct->add_option("--sigma", ca.sigma);
  construct->add_option("--vg", ca.vg);
  construct->add_option("--t", ca.t);
  construct->add_option("--m", ca.m);
  construct->add_option("--q", ca.q);
  construct->add_option("--alpha", ca.alpha);
  construct->add_option("--variant", ca.variant, "tau|pencil");
  construct->add_option("--j", ca.j_file, "J as a hypergraph JSON file");
  construct->add_option("--tournament", ca.tournament, "cyclic, transitive:n, paley:p or a JSON file");
  construct->callback([&] { action = [&] { return cmd_construct(ca); }; });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a colouring for monochromatic targets");
  verify->add_option("--coloring", va.coloring)->required();
  verify->add_option("--red", va.red, "pattern spec or hypergraph JSON");
  verify->add_option("--blue", va.blue, "pattern spec or hypergraph JSON");
  verify->add_option("--max-vertices", va.max_vertices);
  verify->add_option("--budget", va.budget);
  verify->add_flag("--allow-inexact", va.allow_inexact);
  verify->callback([&] { action = [&] { return cmd_verify(va); }; });

  RamseyArgs ra;
  auto* ramsey = app.add_subcommand("ramsey", "exact Ramsey number by enumeration");
  ramsey->add_option("--red", ra.red)->required();
  ramsey->add_option("--blue", ra.blue)->required();
  ramsey->add_option("--cap", ra.cap);
  ramsey->add_option("--budget", ra.budget);
  ramsey->callback([&] { action = [&] { return cmd_ramsey(ra, jobs); }; });

  int tau_k = 0, tau_alpha = 0, tau_cap = 64;
  auto* tau = app.add_subcommand("tau", "exact tau(k, alpha)");
  tau->add_option("--k", tau_k)->required();
  tau->add_option("--alpha", tau_alpha)->required();
  tau->add_option("--cap", tau_cap);
  tau->callback([&] { action = [&] { return cmd_tau(tau_k, tau_alpha, tau_cap); }; });

  int dr_chi = 0, dr_cap = 9;
  bool dr_gap = false;
  auto* dramsey = app.add_subcommand("dramsey", "directed Ramsey number of transitive tournaments");
  dramsey->add_option("--chi", dr_chi)->required();
  dramsey->add_option("--cap", dr_cap);
  dramsey->add_flag("--gap", dr_gap, "also run the consecutive gap check");
  dramsey->callback([&] { action = [&] { return cmd_dramsey(dr_chi, dr_cap, dr_gap, jobs); }; });

  ChainArgs cha;
  auto* chain = app.add_subcommand("chain", "clique partition, path systems and clique chains");
  chain->add_option("action", cha.action, "partition|assemble|validate")->required();
  chain->add_option("--coloring", cha.coloring)->required();
  chain->add_option("--blocks", cha.blocks, "JSON array of vertex lists");
  chain->add_option("--chain", cha.chain, "chain certificate to validate");
  chain->add_option("--red-size", cha.red_size);
  chain->add_option("--blue-size", cha.blue_size);
  chain->add_option("--ell", cha.ell);
  chain->add_option("--epsilon", cha.epsilon);
  chain->add_option("--components", cha.components, "stall when this many components remain");
  chain->callback([&] { action = [&] { return cmd_chain(cha); }; });

  EngineArgs ea;
  auto* engine = app.add_subcommand("engine", "witness engines");
  engine->add_option("mode", ea.mode, "loose|tight")->required();
  engine->add_option("--coloring", ea.coloring)->required();
  engine->add_option("--target", ea.target, "blue target (tight: tth:chi:m)");
  engine->add_option("--params", ea.params, "engine parameter JSON");
  engine->add_option("--n", ea.order, "red path or cycle order");
  engine->add_flag("--cycle", ea.cycle);
  engine->callback([&] {
    action = [&] { return cmd_engine(ea, seed_opt->count() ? std::optional<std::uint64_t>(seed) : std::nullopt); };
  });

  bool table_json = false;
  auto* table = app.add_subcommand("table", "desk-scale reproduction table");
  table->add_flag("--json", table_json);
  table->callback([&] {
    action = [&] {
      const Json t = cli::reproduction_table(jobs, seed);
      return CommandResult{table_json ? dump(t) : cli::table_text(t)};
    };
  });

  std::vector<std::string> check_files;
  auto* check = app.add_subcommand("check", "re-validate certificates");
  check->add_option("files", check_files)->required();
  check->callback([&] { action = [&] { return cmd_check(check_files); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const CommandResult result = action();
  if (out_path.empty())
    std::cout << result.text << std::flush;
  else
    write_text_file(out_path, result.text);
  if (!manifest_path.empty()) {
    std::string command;
    for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);
    Json m;
    m["command"] = command;
    m["seed"] = seed;
    m["jobs"] = jobs;
    m["parameters"] = parameter_record(app);
    Json inputs = Json::object();
    for (const auto& [path, hash] : g_inputs) inputs[path] = hash;
    m["inputs"] = inputs;
    m["outputs"] = {{out_path.empty() ? "stdout" : out_path, content_hash(result.text)}};
    m["exit_code"] = result.status;
    m["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    write_text_file(manifest_path, dump(m));
  }
  return result.status;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 2;
  } catch (const CertificateInvalid& e) {
    std::cerr << "certificate invalid: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
