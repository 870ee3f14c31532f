#include <sstream>

#include "commands.hpp"
#include "coulomb/field_io.hpp"

namespace coulomb::cli {

Check Check::upper_bound(std::string name, double value, double tolerance) {
  return {std::move(name), value, tolerance, value <= tolerance ? "pass" : "fail"};
}

Json checks_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"status", c.status}});
  return arr;
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (c.status != "pass") return false;
  return true;
}

double relative_difference(const VectorField3& a, const VectorField3& b, std::size_t margin) {
  const double scale = max_norm(b, margin);
  const double diff = max_norm(a - b, margin);
  return scale > 0.0 ? diff / scale : diff;
}

std::string field_text(const VectorField3& f) {
  std::ostringstream os;
  write_field(os, f);
  return os.str();
}

std::string field_text(const ScalarField& f) {
  std::ostringstream os;
  write_field(os, f);
  return os.str();
}

}  // namespace coulomb::cli
