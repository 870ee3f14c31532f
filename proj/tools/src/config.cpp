#include "config.hpp"

#include <fstream>
#include <sstream>

#include "coulomb/field_io.hpp"

namespace coulomb::cli {

const Json& RunConfig::section(std::string_view name) const {
  static const Json empty = Json::object();
  const auto it = doc.find(std::string(name));
  if (it == doc.end()) return empty;
  if (!it->is_object()) throw UsageError("config section '" + std::string(name) + "' must be an object");
  return *it;
}

Json load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
  return doc;
}

void set_path(Json& doc, std::initializer_list<std::string_view> keys, Json value) {
  Json* node = &doc;
  std::size_t i = 0;
  for (auto key : keys) {
    const std::string k(key);
    if (++i == keys.size()) {
      (*node)[k] = std::move(value);
      return;
    }
    if (!node->contains(k) || !(*node)[k].is_object()) (*node)[k] = Json::object();
    node = &(*node)[k];
  }
}

RunConfig finalize(Json doc) {
  RunConfig cfg;
  cfg.doc = std::move(doc);
  const Json& root = cfg.doc;
  const long grid = value_or<long>(root, "grid", 24);
  if (grid < 4 || grid > 256) throw UsageError("grid must lie in [4, 256]");
  cfg.grid = static_cast<std::size_t>(grid);
  cfg.seed = value_or<std::uint64_t>(root, "seed", 1);
  cfg.out = value_or<std::string>(root, "out", ".");
  const Json& units = cfg.section("units");
  cfg.units.eps0 = value_or<double>(units, "eps0", 1.0);
  cfg.units.c = value_or<double>(units, "c", 1.0);
  cfg.units.hbar = value_or<double>(units, "hbar", 1.0);
  cfg.units.q = value_or<double>(units, "q", 1.0);
  if (!(cfg.units.eps0 > 0.0 && cfg.units.c > 0.0 && cfg.units.hbar > 0.0)) {
    throw UsageError("eps0, c and hbar must be positive");
  }
  return cfg;
}

void write_output(const RunConfig& cfg, const std::string& filename, const std::string& content) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  if (ec) throw UsageError("cannot create output directory " + cfg.out.string());
  const auto path = cfg.out / filename;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot write " + path.string());
  os << content;
}

std::string render(const Json& j) { return canonical_json(j.dump()); }

}  // namespace coulomb::cli
