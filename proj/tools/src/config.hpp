#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "coulomb/constants.hpp"

namespace coulomb::cli {

using Json = nlohmann::ordered_json;

/// Bad flags, config contents or input files: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Merged configuration: the JSON config file with command-line flags
/// written over it. Subcommand parameters live in an object named after the
/// subcommand, e.g. {"ab-fringes": {"noise": 0.01}}.
struct RunConfig {
  Json doc = Json::object();
  Constants units;
  std::size_t grid = 24;
  std::uint64_t seed = 1;
  std::filesystem::path out = ".";

  const Json& section(std::string_view name) const;
};

Json load_config_file(const std::filesystem::path& path);

/// Sets doc[keys...] = value, creating objects along the way.
void set_path(Json& doc, std::initializer_list<std::string_view> keys, Json value);

/// Reads the global keys (grid, seed, out, units) and validates them.
RunConfig finalize(Json doc);

template <class T>
T value_or(const Json& section, const char* key, T fallback) {
  if (!section.is_object() || !section.contains(key)) return fallback;
  try {
    return section.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError(std::string("config key '") + key + "' has the wrong type");
  }
}

template <class T>
std::optional<T> optional_value(const Json& section, const char* key) {
  if (!section.is_object() || !section.contains(key)) return std::nullopt;
  return value_or<T>(section, key, T{});
}

/// Writes `content` to out/filename, creating the directory.
void write_output(const RunConfig& cfg, const std::string& filename, const std::string& content);

/// JSON text with %.17g numbers.
std::string render(const Json& j);

}  // namespace coulomb::cli
