#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgood/coloring.hpp"
#include "rgood/hypergraph.hpp"
#include "rgood/tournament.hpp"

namespace rgood {

enum class CertificateKind {
  kRedPath,
  kRedCycle,
  kBlueEmbedding,
  kFree,
  kIndependentSet,
  kTtEmbedding,
  kChain,
};

const char* kind_name(CertificateKind kind);
CertificateKind parse_kind(const std::string& name);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  double wall_ms = 0.0;

  SearchStats& operator+=(const SearchStats& other) {
    nodes += other.nodes;
    prunes += other.prunes;
    wall_ms += other.wall_ms;
    return *this;
  }
};

// Index range [start, start+length) over a chain's vertex list, taken modulo
// the list length for closed chains.
struct Interval {
  int start = 0;
  int length = 0;
  bool operator==(const Interval&) const = default;
};

// Machine-checkable outcome of a search. The path, cycle and embedding kinds
// carry an explicit colour; the kind name reflects the usual case.
struct Certificate {
  CertificateKind kind = CertificateKind::kFree;
  Color color = Color::kRed;
  int k = 0;
  int ell = 0;
  // Path/cycle/chain vertex order, independent set, or transitive order.
  std::vector<Vertex> sequence;
  // Embedding: mapping[u] = host vertex of pattern vertex u.
  std::vector<Vertex> mapping;
  std::optional<Hypergraph> pattern;
  std::vector<Interval> intervals;
  bool closed = false;
  // Freeness attestation: red target in the mini-language, blue target in `pattern`.
  std::string red_target;
  // False when a guard forced best-effort mode.
  bool exact = true;
  SearchStats stats;
};

// The object a certificate speaks about.
struct CertificateContext {
  std::optional<TwoColoring> coloring;
  std::optional<Hypergraph> hypergraph;
  std::optional<Tournament> tournament;
};

struct CheckResult {
  bool ok = true;
  std::string reason;
};

// Re-validates a witness against its context in one pass (freeness
// attestations are re-derived by search).
CheckResult check_certificate(const Certificate& cert, const CertificateContext& context);

}  // namespace rgood
