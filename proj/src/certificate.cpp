#include "rgood/certificate.hpp"

#include <array>
#include <utility>

#include "rgood/chains.hpp"
#include "rgood/error.hpp"
#include "rgood/pattern.hpp"
#include "rgood/search.hpp"

namespace rgood {

namespace {

constexpr std::array<std::pair<CertificateKind, const char*>, 7> kKindNames{{
    {CertificateKind::kRedPath, "red_path"},
    {CertificateKind::kRedCycle, "red_cycle"},
    {CertificateKind::kBlueEmbedding, "blue_embedding"},
    {CertificateKind::kFree, "free"},
    {CertificateKind::kIndependentSet, "independent_set"},
    {CertificateKind::kTtEmbedding, "tt_embedding"},
    {CertificateKind::kChain, "chain"},
}};

}  // namespace

const char* kind_name(CertificateKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  throw InternalError("unknown certificate kind");
}

CertificateKind parse_kind(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  throw InvalidInput("unknown certificate kind '" + name + "'");
}

CheckResult check_certificate(const Certificate& cert, const CertificateContext& context) {
  auto needs_coloring = [&]() -> const TwoColoring* {
    if (!context.coloring) return nullptr;
    return &*context.coloring;
  };
  switch (cert.kind) {
    case CertificateKind::kRedPath:
    case CertificateKind::kRedCycle:
    case CertificateKind::kBlueEmbedding:
    case CertificateKind::kFree:
    case CertificateKind::kChain: {
      const TwoColoring* c = needs_coloring();
      if (c == nullptr) return {false, "certificate needs a colouring context"};
      if (c->uniformity() != cert.k) return {false, "certificate uniformity differs from the colouring"};
      if (cert.kind == CertificateKind::kRedPath) return validate_mono_path(*c, cert.ell, cert.sequence, cert.color);
      if (cert.kind == CertificateKind::kRedCycle) return validate_mono_cycle(*c, cert.ell, cert.sequence, cert.color);
      if (cert.kind == CertificateKind::kChain) {
        const auto v = validate_chain(chain_from_certificate(cert), c);
        return v.ok ? CheckResult{true, ""} : CheckResult{false, v.violations.front()};
      }
      if (!cert.pattern) return {false, "certificate lacks its pattern"};
      if (cert.kind == CertificateKind::kBlueEmbedding)
        return validate_embedding(*c, *cert.pattern, cert.mapping, cert.color);
      // Freeness is re-derived by running both searches again.
      const auto report = verify_free(*c, parse_pattern(cert.red_target), Pattern::graph(*cert.pattern));
      if (!report.free) return {false, std::string("colouring contains a ") + kind_name(report.certificate.kind)};
      return {true, ""};
    }
    case CertificateKind::kIndependentSet:
      if (!context.hypergraph) return {false, "certificate needs a hypergraph context"};
      return validate_independent_set(*context.hypergraph, cert.sequence);
    case CertificateKind::kTtEmbedding:
      if (!context.tournament) return {false, "certificate needs a tournament context"};
      return validate_transitive(*context.tournament, cert.sequence);
  }
  return {false, "unknown certificate kind"};
}

}  // namespace rgood
