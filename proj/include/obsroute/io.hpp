#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "obsroute/tspn.hpp"
#include "obsroute/visibility.hpp"

namespace obsroute {

/// On-disk instance: exact rational coordinates as "num/den" strings plus
/// generator metadata; parse(serialize(x)) is the identity, bit for bit.
struct InstanceFile {
    int version = 1;
    Instance instance;
    std::string generator;
    std::map<std::string, std::string> params;
    std::uint64_t seed = 42;
};

std::string instance_to_json(const InstanceFile& f);
InstanceFile instance_from_json(const std::string& text);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

std::string tour_to_json(const Tour& t, const std::string& kind = "tour");
Tour tour_from_json(const std::string& text);

/// FNV-1a over the canonical serialization.
std::uint64_t instance_digest(const InstanceFile& f);
std::string digest_hex(std::uint64_t d);

}  // namespace obsroute
