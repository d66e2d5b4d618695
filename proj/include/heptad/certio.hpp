#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "heptad/decomposition.hpp"
#include "heptad/fixtures.hpp"

namespace heptad {

std::string sha256_hex(std::string_view data);

// Host fields are spliced flat into certificate and fixture objects:
// {"host":"Kstar","v":28}, {"host":"KstarMultipartite","parts":[7,7,7],
// "layout":"residues"}, {"host":"KstarEvenMinusFactor","x":3}, ...
void host_to_json(nlohmann::ordered_json& j, const HostSpec& h);
HostSpec host_from_json(const nlohmann::json& j);  // throws ParseError

nlohmann::ordered_json cert_to_json(const Decomposition& d);
nlohmann::ordered_json ucert_to_json(const UDecomposition& d);

// Line format: "host Kstar v 14 class D6" then one block per line.
// Undirected certificates have no class token; lines carry a kind prefix.
std::string cert_to_text(const Decomposition& d);
std::string ucert_to_text(const UDecomposition& d);

using AnyCert = std::variant<Decomposition, UDecomposition>;

// Accepts both JSON and the text form, both orientations. Construction
// traces are not read back; verification never needs them.
AnyCert cert_from_string(const std::string& content);
AnyCert cert_from_file(const std::filesystem::path& path);

nlohmann::ordered_json fixture_to_json(const FixtureRecord& r,
                                       bool with_checksum);
FixtureRecord fixture_from_json(const nlohmann::json& j);

// Checksum of the record's canonical serialization (sha256 field omitted).
std::string fixture_checksum(const FixtureRecord& r);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace heptad
