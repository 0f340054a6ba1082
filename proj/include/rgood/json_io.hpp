#pragma once

#include <string>

#include <json.hpp>

#include "rgood/certificate.hpp"
#include "rgood/coloring.hpp"
#include "rgood/hypergraph.hpp"
#include "rgood/tournament.hpp"

namespace rgood {

using Json = nlohmann::ordered_json;

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(const std::string& text);
// Hex BLAKE2b-256 digest, used for run manifests.
std::string content_hash(const std::string& data);

Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json coloring_to_json(const TwoColoring& c);
TwoColoring coloring_from_json(const Json& j);

Json tournament_to_json(const Tournament& t);
Tournament tournament_from_json(const Json& j);

// Serialises the certificate together with its context.
Json certificate_to_json(const Certificate& cert, const CertificateContext& context);
Certificate certificate_from_json(const Json& j, CertificateContext* context);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const Json& j);

}  // namespace rgood
