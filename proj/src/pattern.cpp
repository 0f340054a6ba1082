#include "rgood/pattern.hpp"

#include <sstream>
#include <vector>

#include "rgood/error.hpp"
#include "rgood/generators.hpp"

namespace rgood {

Pattern Pattern::path(int k, int ell, int n) {
  Pattern p;
  p.kind_ = Kind::kPath;
  p.ell_ = ell;
  p.graph_ = ell_path(k, ell, n);
  p.label_ = "path:" + std::to_string(k) + ":" + std::to_string(ell) + ":" + std::to_string(n);
  return p;
}

Pattern Pattern::cycle(int k, int ell, int n) {
  Pattern p;
  p.kind_ = Kind::kCycle;
  p.ell_ = ell;
  p.graph_ = ell_cycle(k, ell, n);
  p.label_ = "cycle:" + std::to_string(k) + ":" + std::to_string(ell) + ":" + std::to_string(n);
  return p;
}

Pattern Pattern::graph(Hypergraph h, std::string label) {
  Pattern p;
  p.kind_ = Kind::kGraph;
  p.graph_ = std::move(h);
  p.label_ = label.empty() ? "graph" : std::move(label);
  return p;
}

namespace {

std::vector<std::string> split(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  return parts;
}

int to_int(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw InvalidInput("");
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("pattern '" + spec + "': '" + s + "' is not an integer");
  }
}

}  // namespace

bool is_pattern_spec(const std::string& spec) {
  const auto parts = split(spec);
  if (parts.empty()) return false;
  const std::string& head = parts[0];
  return head == "path" || head == "cycle" || head == "clique" || head == "fano" || head == "tth" ||
         head == "c3h" || head == "edge";
}

Pattern parse_pattern(const std::string& spec) {
  const auto parts = split(spec);
  auto expect = [&](std::size_t count) {
    if (parts.size() != count) throw InvalidInput("pattern '" + spec + "' has the wrong number of fields");
  };
  if (parts.empty()) throw InvalidInput("empty pattern");
  const std::string& head = parts[0];
  if (head == "path") {
    expect(4);
    return Pattern::path(to_int(parts[1], spec), to_int(parts[2], spec), to_int(parts[3], spec));
  }
  if (head == "cycle") {
    expect(4);
    return Pattern::cycle(to_int(parts[1], spec), to_int(parts[2], spec), to_int(parts[3], spec));
  }
  if (head == "clique") {
    expect(3);
    const int k = to_int(parts[1], spec);
    const int n = to_int(parts[2], spec);
    require(k >= 2 && n >= k, "clique pattern needs 2 <= k <= n");
    return Pattern::graph(complete_hypergraph(k, n), spec);
  }
  if (head == "fano") {
    expect(1);
    return Pattern::graph(fano(), spec);
  }
  if (head == "tth") {
    expect(3);
    const int chi = to_int(parts[1], spec);
    const int m = to_int(parts[2], spec);
    require(chi >= 1 && chi <= 32 && m >= 1, "tth pattern needs chi in [1,32] and m >= 1");
    return Pattern::graph(tournament_hypergraph(Tournament::transitive(chi), m).graph, spec);
  }
  if (head == "c3h") {
    expect(2);
    const int m = to_int(parts[1], spec);
    require(m >= 1, "c3h pattern needs m >= 1");
    return Pattern::graph(tournament_hypergraph(Tournament::cyclic_triangle(), m).graph, spec);
  }
  if (head == "edge") {
    expect(2);
    const int k = to_int(parts[1], spec);
    require(k >= 2, "edge pattern needs k >= 2");
    return Pattern::graph(single_edge(k), spec);
  }
  throw InvalidInput("unknown pattern '" + spec + "'");
}

}  // namespace rgood
