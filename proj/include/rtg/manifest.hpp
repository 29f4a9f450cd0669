#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rtg {

inline constexpr const char* kToolVersion = "1.0.0";

// Provenance header embedded in every output file.  The hash covers every
// field except the timestamp, so a rerun of the same configuration is
// byte-comparable after dropping the timestamp -- and in practice the rest
// of the file too, since all computation is seed-deterministic.
struct RunManifest {
  std::string tool_version = kToolVersion;
  std::string subcommand;
  std::string config_json;  // canonical (key-sorted) object of all flags
  std::uint64_t seed = 0;
  std::int64_t timestamp = 0;  // unix seconds; excluded from the hash
  std::vector<std::string> inputs, outputs;
};

// FNV-1a over a canonical serialization of everything but the timestamp.
std::uint64_t manifest_hash(const RunManifest& m);

// One-line JSON object: tool, subcommand, config, seed (decimal string, u64
// survives json readers), timestamp, inputs, outputs, hash ("fnv1a:<hex>").
std::string manifest_json(const RunManifest& m);

}  // namespace rtg
