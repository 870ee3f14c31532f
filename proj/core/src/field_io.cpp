#include "coulomb/field_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "coulomb/error.hpp"

namespace coulomb {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_header(std::ostream& os, const Grid3& g) {
  const auto& n = g.dims();
  const auto& h = g.spacing();
  os << "grid3 " << n[0] << ' ' << n[1] << ' ' << n[2] << ' ' << format_number(g.origin().x) << ' '
     << format_number(g.origin().y) << ' ' << format_number(g.origin().z) << ' '
     << format_number(h[0]) << ' ' << format_number(h[1]) << ' ' << format_number(h[2]) << '\n';
}

Grid3 read_header(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("missing grid3 header");
  std::istringstream ls(line);
  std::string tag;
  Index3 n{};
  Vec3 o;
  Spacing3 h{};
  if (!(ls >> tag) || tag != "grid3") throw FormatError("header must start with 'grid3'");
  if (!(ls >> n[0] >> n[1] >> n[2] >> o.x >> o.y >> o.z >> h[0] >> h[1] >> h[2])) {
    throw FormatError("grid3 header needs nx ny nz ox oy oz hx hy hz");
  }
  std::string extra;
  if (ls >> extra) throw FormatError("trailing tokens in grid3 header");
  try {
    return Grid3(o, h, n);
  } catch (const Error& e) {
    throw FormatError(std::string("invalid grid in header: ") + e.what());
  }
}

std::vector<double> read_row(std::istream& is, std::size_t count, std::size_t row) {
  std::string line;
  if (!std::getline(is, line)) {
    throw FormatError("field data ends early at cell " + std::to_string(row));
  }
  std::istringstream ls(line);
  std::vector<double> out(count);
  for (auto& v : out) {
    if (!(ls >> v)) throw FormatError("expected " + std::to_string(count) + " values at cell " + std::to_string(row));
  }
  std::string extra;
  if (ls >> extra) throw FormatError("too many values at cell " + std::to_string(row));
  return out;
}

void require_eof(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw FormatError("unexpected data after the last cell");
    }
  }
}

}  // namespace

void write_field(std::ostream& os, const ScalarField& f) {
  write_header(os, f.grid());
  for (double v : f.values()) os << format_number(v) << '\n';
}

void write_field(std::ostream& os, const VectorField3& f) {
  write_header(os, f.grid());
  for (const auto& v : f.values()) {
    os << format_number(v.x) << ' ' << format_number(v.y) << ' ' << format_number(v.z) << '\n';
  }
}

ScalarField read_scalar_field(std::istream& is) {
  const Grid3 g = read_header(is);
  std::vector<double> values(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) values[i] = read_row(is, 1, i)[0];
  require_eof(is);
  try {
    return ScalarField(g, std::move(values));
  } catch (const EvaluationError& e) {
    throw FormatError(e.what());
  }
}

VectorField3 read_vector_field(std::istream& is) {
  const Grid3 g = read_header(is);
  std::vector<Vec3> values(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto r = read_row(is, 3, i);
    values[i] = {r[0], r[1], r[2]};
  }
  require_eof(is);
  try {
    return VectorField3(g, std::move(values));
  } catch (const EvaluationError& e) {
    throw FormatError(e.what());
  }
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
}

namespace {

void emit(std::string& out, const nlohmann::ordered_json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += nlohmann::ordered_json(key).dump();
        out += indent < 0 ? ":" : ": ";
        emit(out, value, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case nlohmann::ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        emit(out, value, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case nlohmann::ordered_json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_number(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string canonical_json(std::string_view json_text, int indent) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  std::string out;
  emit(out, j, indent, 0);
  out += '\n';
  return out;
}

}  // namespace coulomb
