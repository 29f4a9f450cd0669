#include "rtg/manifest.hpp"

#include <cstdio>

#include <json.hpp>

namespace rtg {

namespace {

void fnv1a(std::uint64_t& h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  h ^= 0xffu;  // field separator, not a valid UTF-8 lead byte
  h *= 1099511628211ull;
}

}  // namespace

std::uint64_t manifest_hash(const RunManifest& m) {
  std::uint64_t h = 14695981039346656037ull;
  fnv1a(h, m.tool_version);
  fnv1a(h, m.subcommand);
  fnv1a(h, m.config_json);
  fnv1a(h, std::to_string(m.seed));
  for (const std::string& s : m.inputs) fnv1a(h, s);
  fnv1a(h, "|");
  for (const std::string& s : m.outputs) fnv1a(h, s);
  return h;
}

std::string manifest_json(const RunManifest& m) {
  nlohmann::json j;
  j["tool"] = "rtg";
  j["version"] = m.tool_version;
  j["subcommand"] = m.subcommand;
  j["config"] = nlohmann::json::parse(m.config_json.empty() ? "{}" : m.config_json);
  j["seed"] = std::to_string(m.seed);
  j["timestamp"] = m.timestamp;
  j["inputs"] = m.inputs;
  j["outputs"] = m.outputs;
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(manifest_hash(m)));
  j["hash"] = std::string("fnv1a:") + hex;
  return j.dump();
}

}  // namespace rtg
