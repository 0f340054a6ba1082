#include "rgood/json_io.hpp"

#include <sodium.h>

#include <fstream>
#include <sstream>

#include "rgood/error.hpp"

namespace rgood {

namespace {

void ensure_sodium() {
  static const bool ready = sodium_init() >= 0;
  if (!ready) throw InternalError("libsodium failed to initialise");
}

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("missing JSON field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad JSON field '") + name + "': " + e.what());
  }
}

}  // namespace

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  ensure_sodium();
  const std::size_t len = sodium_base64_encoded_len(bytes.size(), sodium_base64_VARIANT_ORIGINAL);
  std::string out(len, '\0');
  sodium_bin2base64(out.data(), len, bytes.data(), bytes.size(), sodium_base64_VARIANT_ORIGINAL);
  out.resize(len - 1);
  return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  ensure_sodium();
  std::vector<std::uint8_t> out(text.size() * 3 / 4 + 3);
  std::size_t written = 0;
  const char* end = nullptr;
  if (sodium_base642bin(out.data(), out.size(), text.data(), text.size(), nullptr, &written, &end,
                        sodium_base64_VARIANT_ORIGINAL) != 0 ||
      end != text.data() + text.size())
    throw InvalidInput("malformed base64 bitmap");
  out.resize(written);
  return out;
}

std::string content_hash(const std::string& data) {
  ensure_sodium();
  unsigned char digest[32];
  crypto_generichash(digest, sizeof digest, reinterpret_cast<const unsigned char*>(data.data()), data.size(),
                     nullptr, 0);
  char hex[65];
  sodium_bin2hex(hex, sizeof hex, digest, sizeof digest);
  return hex;
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back(e);
  return Json{{"k", h.uniformity()}, {"n", h.order()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  return Hypergraph(field<int>(j, "k"), field<int>(j, "n"), field<std::vector<KSet>>(j, "edges"));
}

Json coloring_to_json(const TwoColoring& c) {
  return Json{{"k", c.uniformity()},
              {"n", c.order()},
              {"encoding", "colex-v1"},
              {"red_bitmap", base64_encode(c.to_bytes())}};
}

TwoColoring coloring_from_json(const Json& j) {
  const auto encoding = field<std::string>(j, "encoding");
  if (encoding != "colex-v1") throw InvalidInput("unsupported colouring encoding '" + encoding + "'");
  const int k = field<int>(j, "k");
  const int n = field<int>(j, "n");
  require(k >= 1 && n >= 0 && n <= 64, "colouring dimensions out of range");
  return TwoColoring::from_bytes(k, n, base64_decode(field<std::string>(j, "red_bitmap")));
}

Json tournament_to_json(const Tournament& t) {
  Json arcs = Json::array();
  for (auto [a, b] : t.arcs()) arcs.push_back({a, b});
  return Json{{"n", t.order()}, {"arcs", arcs}};
}

Tournament tournament_from_json(const Json& j) {
  return Tournament::from_arcs(field<int>(j, "n"), field<std::vector<std::pair<int, int>>>(j, "arcs"));
}

Json certificate_to_json(const Certificate& cert, const CertificateContext& context) {
  Json j;
  j["kind"] = kind_name(cert.kind);
  j["exact"] = cert.exact;
  j["k"] = cert.k;
  switch (cert.kind) {
    case CertificateKind::kRedPath:
    case CertificateKind::kRedCycle:
      j["color"] = color_name(cert.color);
      j["ell"] = cert.ell;
      j["sequence"] = cert.sequence;
      break;
    case CertificateKind::kBlueEmbedding:
      j["color"] = color_name(cert.color);
      j["mapping"] = cert.mapping;
      break;
    case CertificateKind::kFree:
      j["red_target"] = cert.red_target;
      break;
    case CertificateKind::kIndependentSet:
    case CertificateKind::kTtEmbedding:
      j["sequence"] = cert.sequence;
      break;
    case CertificateKind::kChain: {
      j["ell"] = cert.ell;
      j["closed"] = cert.closed;
      j["sequence"] = cert.sequence;
      Json intervals = Json::array();
      for (const auto& iv : cert.intervals) intervals.push_back({iv.start, iv.length});
      j["intervals"] = intervals;
      break;
    }
  }
  if (cert.pattern) j["pattern"] = hypergraph_to_json(*cert.pattern);
  j["stats"] = Json{{"nodes", cert.stats.nodes}, {"prunes", cert.stats.prunes}};
  Json ctx = Json::object();
  if (context.coloring) ctx["coloring"] = coloring_to_json(*context.coloring);
  if (context.hypergraph) ctx["hypergraph"] = hypergraph_to_json(*context.hypergraph);
  if (context.tournament) ctx["tournament"] = tournament_to_json(*context.tournament);
  j["context"] = ctx;
  return j;
}

Certificate certificate_from_json(const Json& j, CertificateContext* context) {
  Certificate cert;
  cert.kind = parse_kind(field<std::string>(j, "kind"));
  cert.k = field<int>(j, "k");
  if (j.contains("exact")) cert.exact = field<bool>(j, "exact");
  if (j.contains("color")) cert.color = parse_color(field<std::string>(j, "color"));
  if (j.contains("ell")) cert.ell = field<int>(j, "ell");
  if (j.contains("sequence")) cert.sequence = field<std::vector<Vertex>>(j, "sequence");
  if (j.contains("mapping")) cert.mapping = field<std::vector<Vertex>>(j, "mapping");
  if (j.contains("pattern")) cert.pattern = hypergraph_from_json(j.at("pattern"));
  if (j.contains("closed")) cert.closed = field<bool>(j, "closed");
  if (j.contains("red_target")) cert.red_target = field<std::string>(j, "red_target");
  if (j.contains("intervals")) {
    for (const auto& iv : field<std::vector<std::pair<int, int>>>(j, "intervals"))
      cert.intervals.push_back({iv.first, iv.second});
  }
  if (j.contains("stats")) {
    const Json& s = j.at("stats");
    cert.stats.nodes = field<std::uint64_t>(s, "nodes");
    cert.stats.prunes = field<std::uint64_t>(s, "prunes");
  }
  if (context != nullptr) {
    *context = CertificateContext{};
    if (j.contains("context")) {
      const Json& ctx = j.at("context");
      if (ctx.contains("coloring")) context->coloring = coloring_from_json(ctx.at("coloring"));
      if (ctx.contains("hypergraph")) context->hypergraph = hypergraph_from_json(ctx.at("hypergraph"));
      if (ctx.contains("tournament")) context->tournament = tournament_from_json(ctx.at("tournament"));
    }
  }
  return cert;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rgood
