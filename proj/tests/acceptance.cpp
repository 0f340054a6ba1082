// Acceptance suite: one PASS/FAIL line per criterion. Library results are
// compared against the brute-force oracles in oracles.hpp; engine witnesses are
// additionally re-validated through the command-line `check` subcommand.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rgood/chains.hpp"
#include "rgood/constructions.hpp"
#include "rgood/engines.hpp"
#include "rgood/exact.hpp"
#include "rgood/generators.hpp"
#include "rgood/json_io.hpp"
#include "rgood/pattern.hpp"
#include "rgood/profile.hpp"
#include "rgood/search.hpp"

#ifndef RGOOD_CLI
#error "RGOOD_CLI must name the rgood executable"
#endif

using namespace rgood;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      if (failures.size() < 8) failures.push_back(what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

std::string str(long long v) { return std::to_string(v); }

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string command = std::string(RGOOD_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void paint_red(TwoColoring& c, std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  for_each_subset_of(vs, c.uniformity(), [&](const KSet& s) { c.set(s, Color::kRed); });
}

bool distinct(const std::vector<Vertex>& seq, int n) {
  std::set<Vertex> s(seq.begin(), seq.end());
  return s.size() == seq.size() && (seq.empty() || (*s.begin() >= 0 && *s.rbegin() < n));
}

// Oracle re-check of an emitted witness.
bool witness_ok(const Certificate& cert, const TwoColoring& c) {
  const int k = c.uniformity();
  switch (cert.kind) {
    case CertificateKind::kRedPath:
      return cert.k == k && static_cast<int>(cert.sequence.size()) >= k && distinct(cert.sequence, c.order()) &&
             (static_cast<int>(cert.sequence.size()) - cert.ell) % (k - cert.ell) == 0 &&
             oracle::sequence_is_mono(c, cert.sequence, cert.ell, false, cert.color);
    case CertificateKind::kRedCycle:
      return cert.k == k && static_cast<int>(cert.sequence.size()) > k && distinct(cert.sequence, c.order()) &&
             static_cast<int>(cert.sequence.size()) % (k - cert.ell) == 0 &&
             oracle::sequence_is_mono(c, cert.sequence, cert.ell, true, cert.color);
    case CertificateKind::kBlueEmbedding: {
      if (!cert.pattern || static_cast<int>(cert.mapping.size()) != cert.pattern->order()) return false;
      if (!distinct(cert.mapping, c.order())) return false;
      for (const auto& e : cert.pattern->edges()) {
        std::vector<Vertex> img;
        for (Vertex u : e) img.push_back(cert.mapping[u]);
        if (oracle::color_of(c, img) != cert.color) return false;
      }
      return true;
    }
    default:
      return false;
  }
}

// Criterion 1: exact Ramsey values against the general lower bound.
Outcome criterion_ramsey() {
  Outcome o;
  const char* reds[] = {"path:3:2:4", "path:3:1:5", "edge:3"};
  const char* blues[] = {"clique:3:4", "tth:2:2", "edge:3"};
  int pairs = 0;
  for (const char* r : reds)
    for (const char* b : blues) {
      const std::string tag = std::string(r) + " vs " + b;
      const auto red = parse_pattern(r);
      const auto blue = parse_pattern(b);
      const auto result = ramsey_exact(red, blue, 8);
      const int brute = oracle::ramsey(red.hypergraph(), blue.hypergraph());
      const auto op = oracle::profile(blue.hypergraph());
      const auto lp = ramsey_profile(blue.hypergraph());
      const int burr = (red.order() - 1) * (op.chi - 1) + op.sigma;
      o.expect(lp.chi == op.chi && lp.sigma == op.sigma, tag + ": profile differs from oracle");
      o.expect(burr_bound(red.order(), lp).value == burr, tag + ": burr bound differs");
      o.expect(result.exact && result.value == brute, tag + ": R=" + str(result.value) + " oracle " + str(brute));
      o.expect(result.value >= burr, tag + ": R below burr bound");
      const auto inst = burr_coloring(3, op.chi, op.sigma, red.order());
      o.expect(inst.coloring.order() == burr - 1, tag + ": burr colouring order");
      o.expect(!oracle::has_mono_copy(inst.coloring, red.hypergraph(), Color::kRed), tag + ": red copy in burr colouring");
      o.expect(!oracle::has_mono_copy(inst.coloring, blue.hypergraph(), Color::kBlue),
               tag + ": blue copy in burr colouring");
      const auto free = verify_free(inst.coloring, red, blue);
      o.expect(free.free && check_certificate(free.certificate, {inst.coloring, {}, {}}).ok,
               tag + ": freeness certificate");
      ++pairs;
    }
  o.note(str(pairs) + " pairs exact and >= bound");
  return o;
}

bool tau_properties(const Hypergraph& h, int alpha) {
  return oracle::independence_number(h) < alpha && !oracle::has_two_edge_loose_path(h);
}

// Criterion 2: tau table.
Outcome criterion_tau() {
  Outcome o;
  for (int alpha = 2; alpha <= 6; ++alpha) {
    const auto t = tau_exact(2, alpha);
    o.expect(t.exact && t.value == 2 * alpha - 2, "tau(2," + str(alpha) + ")=" + str(t.value));
    o.expect(t.witness.order() == t.value && tau_properties(t.witness, alpha), "tau(2," + str(alpha) + ") witness");
    if (alpha <= 4) o.expect(oracle::tau(2, alpha, 2 * alpha - 1) == t.value, "tau(2," + str(alpha) + ") oracle");
  }
  const auto low = tau_exact(3, 2);
  o.expect(low.exact && low.value == 1 && oracle::tau(3, 2, 3) == 1, "tau(3,2)=" + str(low.value));
  const auto t = tau_exact(3, 4);
  o.expect(t.exact && t.value >= 5 && t.value <= 6, "tau(3,4)=" + str(t.value) + " outside [5,6]");
  o.expect(oracle::tau(3, 4, 6) == t.value, "tau(3,4) differs from oracle");
  o.expect(t.witness.order() == t.value && tau_properties(t.witness, 4), "tau(3,4) extremal witness");
  const auto lower = tau_lower_construction(3, 4).graph;
  std::set<Vertex> touched;
  for (const auto& e : lower.edges()) touched.insert(e.begin(), e.end());
  o.expect(lower.order() == 5 && lower.size() == 4 && touched.size() == 4, "lower construction shape");
  o.expect(tau_properties(lower, 4), "lower construction properties");
  o.note("tau(3,4)=" + str(t.value));
  return o;
}

// Criterion 3: directed Ramsey values and the consecutive gap.
Outcome criterion_directed() {
  Outcome o;
  const int expected[] = {0, 0, 2, 4, 8};
  for (int chi = 2; chi <= 4; ++chi) {
    const auto d = directed_ramsey_exact(chi, 9);
    const int v = expected[chi];
    o.expect(d.exact && d.value == v, "dR(" + str(chi) + ")=" + str(d.value));
    o.expect(oracle::every_tournament_has_transitive(v, chi), "oracle: some " + str(v) + "-tournament lacks TT");
    o.expect(!oracle::every_tournament_has_transitive(v - 1, chi), "oracle: every smaller tournament has TT");
    o.expect(d.witness.order() == v - 1 && !oracle::has_transitive(d.witness, chi),
             "dR(" + str(chi) + ") witness not free");
  }
  o.expect(!oracle::has_transitive(Tournament::cyclic_triangle(), 3), "cyclic triangle contains TT3");
  for (int chi = 3; chi <= 4; ++chi) {
    const auto g = consecutive_gap_check(chi, 9);
    o.expect(g.ok && g.inequality_holds && g.value >= g.previous + 2, "gap check chi=" + str(chi));
    o.expect(g.augmented.order() == g.previous + 1 && !oracle::has_transitive(g.augmented, chi),
             "augmented witness chi=" + str(chi));
  }
  o.note("dR = 2, 4, 8");
  return o;
}

bool free_certificate_ok(const LowerBoundInstance& inst, const Pattern& blue) {
  const auto report = verify_free(inst.coloring, *inst.red_target, blue);
  return report.free && report.certificate.exact && check_certificate(report.certificate, {inst.coloring, {}, {}}).ok;
}

// Criterion 4: lower-bound constructions are free at desk scale.
Outcome criterion_freeness() {
  Outcome o;
  const auto a = ell_path_lb(3, 2, 8, 2);
  const auto k4 = parse_pattern("clique:3:4");
  o.expect(!oracle::has_mono_path(a.coloring, 2, 8, Color::kRed), "(a) red P(3,2,8)");
  o.expect(!oracle::has_mono_copy(a.coloring, k4.hypergraph(), Color::kBlue), "(a) blue K4");
  o.expect(free_certificate_ok(a, k4), "(a) certificate");

  const auto b = non_transitive_lb(3, 6);
  const int longest = oracle::longest_mono_path(b.coloring, 2, Color::kRed);
  const auto lib = longest_mono_ell_path(b.coloring, 2, Color::kRed);
  o.expect(longest <= 10 && lib.vertices == longest, "(b) longest red tight path " + str(longest));
  const auto c3h = parse_pattern("c3h:3");
  o.expect(b.blue_target->label() == c3h.label(), "(b) blue target " + b.blue_target->label());
  o.expect(!oracle::has_mono_copy(b.coloring, c3h.hypergraph(), Color::kBlue), "(b) blue H(C3,3)");
  const auto lib_blue = find_mono_pattern(b.coloring, c3h, Color::kBlue);
  o.expect(!lib_blue.witness && lib_blue.exact, "(b) library blue search");

  const auto c = loose_path_lb(3, 2, 11, 3, tau_lower_construction(2, 3).graph);
  o.expect(!oracle::has_mono_path(c.coloring, 1, 11, Color::kRed), "(c) red P(3,1,11)");
  o.expect(!oracle::has_mono_copy(c.coloring, c.blue_target->hypergraph(), Color::kBlue), "(c) blue target");
  o.expect(free_certificate_ok(c, *c.blue_target), "(c) certificate");

  const auto d = loose_cycle_lb(3, 2, 6, 2, LooseCycleVariant::kPencil, 2);
  o.expect(!oracle::has_mono_cycle(d.coloring, 1, 6, Color::kRed), "(d) red C(3,1,6)");
  o.expect(!oracle::has_mono_copy(d.coloring, d.blue_target->hypergraph(), Color::kBlue), "(d) blue target");
  o.expect(free_certificate_ok(d, *d.blue_target), "(d) certificate");
  o.note("N = " + str(a.coloring.order()) + ", " + str(b.coloring.order()) + ", " + str(c.coloring.order()) + ", " +
         str(d.coloring.order()) + "; (b) longest " + str(longest));
  return o;
}

struct ChainSample {
  std::vector<std::vector<Vertex>> elements;
  int k = 3;
  int ell = 1;
  bool closed = false;
  TwoColoring coloring;
};

ChainSample random_chain(std::mt19937_64& rng) {
  while (true) {
    ChainSample s;
    s.k = 3 + static_cast<int>(rng() % 2);
    s.ell = 1 + static_cast<int>(rng() % (s.k - 1));
    s.closed = rng() % 2 == 1;
    const int step = s.k - s.ell;
    const int count = 1 + static_cast<int>(rng() % 4);
    std::vector<int> lengths(count);
    for (int& len : lengths) len = s.ell + step * (1 + static_cast<int>(rng() % 3));
    int p = 0;
    if (s.closed && count == 1) {
      if (lengths[0] % step != 0) continue;
      p = lengths[0];
    } else {
      for (int len : lengths) p += len - s.ell;
      if (!s.closed) p += s.ell;
    }
    if (p > 20 || p <= s.k || p < *std::max_element(lengths.begin(), lengths.end())) continue;
    const int n = p + static_cast<int>(rng() % 3);
    std::vector<Vertex> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    std::shuffle(labels.begin(), labels.end(), rng);
    int start = 0;
    for (int len : lengths) {
      std::vector<Vertex> e;
      for (int i = 0; i < len; ++i) e.push_back(labels[(start + i) % p]);
      s.elements.push_back(e);
      start += len - s.ell;
    }
    s.coloring = oracle::random_coloring(s.k, n, 0.05 * static_cast<double>(rng() % 20), rng);
    for (const auto& e : s.elements) paint_red(s.coloring, e);
    return s;
  }
}

// Consecutive edges of the laid-out path or cycle meet in exactly ell vertices;
// the two edges of a two-edge cycle meet at both junctions, in 2 ell vertices.
bool exact_overlaps(const std::vector<Vertex>& seq, int k, int ell, bool cycle) {
  const auto edges = oracle::path_edges(seq, k, ell, cycle);
  const std::size_t m = edges.size();
  const std::size_t pairs = cycle ? (m > 2 ? m : m - 1) : (m == 0 ? 0 : m - 1);
  const int expected = cycle && m == 2 ? 2 * ell : ell;
  for (std::size_t i = 0; i < pairs; ++i) {
    std::set<Vertex> a(edges[i].begin(), edges[i].end());
    int common = 0;
    for (Vertex v : edges[(i + 1) % m]) common += a.count(v) ? 1 : 0;
    if (common != expected) return false;
  }
  return true;
}

// Criterion 5: chain machinery.
Outcome criterion_chains() {
  Outcome o;
  std::mt19937_64 rng(5001);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = random_chain(rng);
    const auto chain = chain_from_elements(s.elements, s.k, s.ell, s.closed);
    const auto order = spanning_path(chain);
    std::set<Vertex> covered(order.begin(), order.end());
    std::set<Vertex> all(chain.vertices.begin(), chain.vertices.end());
    const std::string tag = "chain " + str(trial);
    o.expect(validate_chain(chain, &s.coloring).ok, tag + ": invalid");
    o.expect(order.size() == all.size() && covered == all, tag + ": spanning path misses vertices");
    o.expect(exact_overlaps(order, s.k, s.ell, s.closed), tag + ": overlap sizes");
    o.expect(oracle::sequence_is_mono(s.coloring, order, s.ell, s.closed, Color::kRed), tag + ": non-red edge");
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(perm[v], perm[rng() % v]);
    const auto walk = double_tree_walk(n, edges);
    std::multiset<std::pair<int, int>> used;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
      used.insert({std::min(walk[i], walk[i + 1]), std::max(walk[i], walk[i + 1])});
    bool twice = used.size() == 2 * edges.size();
    for (auto [a, b] : edges) twice = twice && used.count({std::min(a, b), std::max(a, b)}) == 2;
    o.expect(!walk.empty() && walk.front() == walk.back() && twice, "tree " + str(trial));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const int a = 3 + static_cast<int>(rng() % 2), b = 3 + static_cast<int>(rng() % 2);
    const auto c = oracle::random_coloring(3, n, 0.05 * (1 + trial % 19), rng);
    const auto part = clique_partition(c, a, b);
    std::set<Vertex> seen;
    bool ok = true;
    for (const auto& blk : part.blocks) {
      ok = ok && static_cast<int>(blk.vertices.size()) == (blk.color == Color::kRed ? a : b);
      ok = ok && oracle::has_mono_copy(c.induced(blk.vertices), complete_hypergraph(3, blk.vertices.size()), blk.color);
      for (Vertex v : blk.vertices) ok = ok && seen.insert(v).second;
    }
    for (Vertex v : part.leftover) ok = ok && seen.insert(v).second;
    ok = ok && static_cast<int>(seen.size()) == n;
    const auto left = c.induced(part.leftover);
    ok = ok && !oracle::has_mono_copy(left, complete_hypergraph(3, a), Color::kRed) &&
         !oracle::has_mono_copy(left, complete_hypergraph(3, b), Color::kBlue);
    o.expect(ok, "partition " + str(trial));
  }
  o.note("1000 chains, 1000 trees, 200 partitions");
  return o;
}

// Writes each certificate to dir and runs `check` in batches.
int cli_check(const std::vector<std::string>& files, Outcome& o) {
  int failures = 0;
  for (std::size_t start = 0; start < files.size(); start += 64) {
    std::string args = "check";
    for (std::size_t i = start; i < std::min(files.size(), start + 64); ++i) args += " " + files[i];
    const auto r = run_cli(args);
    bool all_ok = false;
    try {
      const auto j = Json::parse(r.out);
      all_ok = j.at("all_ok").get<bool>();
      for (const auto& e : j.at("results")) failures += e.at("ok").get<bool>() ? 0 : 1;
    } catch (const std::exception&) {
      ++failures;
    }
    o.expect(r.status == 0 && all_ok, "cli check batch at " + str(static_cast<long long>(start)));
  }
  return failures;
}

// Criterion 6: engine witnesses always re-validate; no witness contradicts a
// verified lower-bound instance.
Outcome criterion_engines(const fs::path& dir) {
  Outcome o;
  const double densities[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  std::vector<std::string> files;
  int red = 0, blue = 0, stall = 0, invalid = 0;
  auto record = [&](const EngineReport& r, const TwoColoring& c, const std::string& tag) {
    if (r.outcome == EngineReport::Outcome::kStall) {
      ++stall;
      return;
    }
    (r.outcome == EngineReport::Outcome::kRed ? red : blue) += 1;
    if (!r.certificate || !witness_ok(*r.certificate, c)) {
      ++invalid;
      o.expect(false, tag + ": witness rejected by oracle");
      return;
    }
    const auto path = dir / ("w" + str(static_cast<long long>(files.size())) + ".json");
    write_text_file(path.string(), dump(certificate_to_json(*r.certificate, {c, {}, {}})));
    files.push_back(path.string());
  };
  const auto k4 = complete_hypergraph(3, 4);
  const auto tth = parse_pattern("tth:2:2").hypergraph();
  for (int i = 0; i < 500; ++i) {
    std::mt19937_64 rng(6000 + i);
    const int n = 8 + i % 6;
    const auto c = oracle::random_coloring(3, n, densities[i % 10], rng);
    EngineParams params;
    params.seed = i;
    params.cycle = i % 4 == 3;
    params.target = params.cycle ? 4 + 2 * static_cast<int>(rng() % ((n - 2) / 2)) : 3 + 2 * static_cast<int>(rng() % ((n - 1) / 2));
    record(loose_witness_engine(c, i % 2 == 0 ? k4 : tth, params), c, "loose " + str(i));
    params.cycle = false;
    params.target = 4 + static_cast<int>(rng() % (n - 3));
    record(tight_witness_engine(c, 2 + i % 2, 2, params), c, "tight " + str(i));
  }
  const int rejected = cli_check(files, o);
  o.expect(rejected == 0, str(rejected) + " witnesses rejected by cli check");

  std::vector<LowerBoundInstance> instances;
  instances.push_back(ell_path_lb(3, 2, 8, 2));
  instances.push_back(ell_path_lb(3, 2, 6, 2));
  instances.push_back(non_transitive_lb(3, 6));
  instances.push_back(loose_path_lb(3, 2, 11, 3, tau_lower_construction(2, 3).graph));
  instances.push_back(loose_path_lb(3, 3, 7, 2, tau_lower_construction(2, 2).graph));
  instances.push_back(loose_cycle_lb(3, 2, 6, 2, LooseCycleVariant::kPencil, 2));
  instances.push_back(loose_cycle_lb(3, 2, 6, 2, LooseCycleVariant::kTau, 2, tau_lower_construction(2, 2).graph));
  instances.push_back(transitive_lb(Tournament::cyclic_triangle(), 6));
  int contradictions = 0, instance_witnesses = 0;
  std::vector<std::string> instance_files;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const auto& target = *inst.red_target;
    const auto blue_h = inst.blue_target->hypergraph();
    const std::string tag = inst.construction + " #" + str(static_cast<long long>(i));
    const bool verified = verify_free(inst.coloring, target, *inst.blue_target).free;
    o.expect(verified, tag + ": not verified free");
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      EngineParams params;
      params.seed = seed;
      params.target = target.order();
      params.cycle = target.kind() == Pattern::Kind::kCycle;
      std::vector<EngineReport> reports;
      if (target.ell() == 1) {
        reports.push_back(loose_witness_engine(inst.coloring, blue_h, params));
      } else {
        reports.push_back(tight_witness_engine(inst.coloring, 2, 2, params));
        reports.push_back(tight_witness_engine(inst.coloring, 3, 3, params));
      }
      for (const auto& r : reports) {
        if (r.outcome == EngineReport::Outcome::kStall) continue;
        ++instance_witnesses;
        const auto& cert = *r.certificate;
        const bool valid = witness_ok(cert, inst.coloring);
        const bool red_hit = cert.color == Color::kRed && cert.ell == target.ell() &&
                             static_cast<int>(cert.sequence.size()) >= target.order();
        const bool blue_hit = cert.kind == CertificateKind::kBlueEmbedding && cert.pattern &&
                              cert.pattern->edges() == blue_h.edges() && cert.pattern->order() == blue_h.order();
        if (!valid || red_hit || blue_hit) {
          ++contradictions;
          o.expect(false, tag + ": engine witness contradicts freeness");
        }
      }
    }
  }
  o.note(str(red) + " red, " + str(blue) + " blue, " + str(stall) + " stall, " + str(invalid) + " invalid; " +
         str(static_cast<long long>(files.size())) + " cli-checked; lower-bound instances " +
         str(instance_witnesses) + " witnesses, " + str(contradictions) + " contradictions");
  return o;
}

// Criterion 7: the absorbing block finds a valid path whenever the counting bound holds.
Outcome criterion_absorbing() {
  Outcome o;
  std::mt19937_64 rng(7001);
  int instances = 0, bound = 0, found = 0;
  while (instances < 500) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const int a_size = 2 * d + 2 + static_cast<int>(rng() % (14 - (2 * d + 2) + 1));
    const int b_size = d + static_cast<int>(rng() % 4);
    auto c = oracle::random_coloring(3, a_size + b_size, 0.3 + 0.07 * static_cast<double>(rng() % 10), rng);
    std::vector<Vertex> a(a_size), b(b_size);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), a_size);
    paint_red(c, a);
    const double eta = triple_density(c, a, b, Color::kRed);
    if (eta <= 0.0) continue;
    ++instances;
    const auto result = absorbing_block(c, a, b, d, eta);
    const std::string tag = "instance " + str(instances);
    long long aux = 0;
    for (int x = 0; x < a_size; ++x)
      for (int y = x + 1; y < a_size; ++y) {
        bool all = true;
        for (Vertex z : result.b_choice) all = all && oracle::color_of(c, {a[x], a[y], z}) == Color::kRed;
        aux += all ? 1 : 0;
      }
    const bool holds = aux > static_cast<long long>(d) * a_size;
    o.expect(static_cast<int>(result.b_choice.size()) == d, tag + ": b choice size");
    o.expect(aux == result.aux_edges && holds == result.bound_holds, tag + ": auxiliary count");
    bound += holds ? 1 : 0;
    if (holds) o.expect(result.path.has_value(), tag + ": bound holds but no path");
    if (!result.path) continue;
    ++found;
    const auto& p = *result.path;
    bool shape = static_cast<int>(p.size()) == 3 * d + 2 && distinct(p, c.order());
    const std::set<Vertex> chosen(result.b_choice.begin(), result.b_choice.end());
    for (std::size_t i = 0; shape && i < p.size(); ++i)
      shape = (i % 3 == 2) ? chosen.count(p[i]) == 1 : p[i] < a_size;
    o.expect(shape, tag + ": interleaving");
    o.expect(oracle::sequence_is_mono(c, p, 2, false, Color::kRed), tag + ": not a red tight path");
  }
  o.expect(bound > 0, "bound never held");
  o.note(str(instances) + " instances, bound held " + str(bound) + ", paths " + str(found));
  return o;
}

// Criterion 8: the reproduction table is byte-identical across runs and job counts.
Outcome criterion_determinism() {
  Outcome o;
  const auto first = run_cli("--jobs 1 table");
  const auto second = run_cli("--jobs 1 table");
  const auto parallel = run_cli("--jobs 8 table");
  const auto json1 = run_cli("--jobs 1 table --json");
  const auto json8 = run_cli("--jobs 8 table --json");
  o.expect(first.status == 0 && !first.out.empty(), "table run failed");
  o.expect(first.out == second.out, "two --jobs 1 runs differ");
  o.expect(first.out == parallel.out, "--jobs 1 and --jobs 8 differ");
  o.expect(json1.status == 0 && json1.out == json8.out, "json output differs across --jobs");
  bool all_pass = false;
  try {
    all_pass = Json::parse(json1.out).at("all_pass").get<bool>();
  } catch (const std::exception&) {
  }
  o.note(str(static_cast<long long>(first.out.size())) + " bytes, hash " +
         content_hash(first.out).substr(0, 16) + ", table rows " + (all_pass ? "all pass" : "not all pass"));
  return o;
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / ("rgood_acceptance_" + std::to_string(getpid()));
  fs::create_directories(dir);
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Ramsey values vs general lower bound", 300, criterion_ramsey},
      {2, "tau table", 600, criterion_tau},
      {3, "directed Ramsey values and gap", 900, criterion_directed},
      {4, "lower-bound constructions free", 1800, criterion_freeness},
      {5, "chain machinery", 600, criterion_chains},
      {6, "engine soundness", 1800, [&] { return criterion_engines(dir); }},
      {7, "absorbing block", 600, criterion_absorbing},
      {8, "table determinism", 600, criterion_determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(secs < c.limit_s, "runtime over limit");
    all = all && o.pass;
    std::ostringstream line;
    line << "criterion " << c.id << " (" << c.name << "): " << (o.pass ? "PASS" : "FAIL");
    for (const auto& n : o.notes) line << " | " << n;
    char timing[64];
    std::snprintf(timing, sizeof timing, " | %.2fs of %.0fs", secs, c.limit_s);
    line << timing;
    std::cout << line.str() << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
  }
  fs::remove_all(dir);
  std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
  return all ? 0 : 1;
}
