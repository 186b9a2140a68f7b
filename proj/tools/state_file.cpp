#include "state_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skewcorr/error.hpp"

namespace skewcorr::cli {

namespace {

std::string round_trip(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string format_state_file(const BipartiteState& rho) {
  const ComplexMatrix& m = rho.matrix();
  std::ostringstream out;
  out << "{\n  \"dims\": [" << rho.dim_a() << ", " << rho.dim_b() << "],\n  \"matrix\": [\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << "    [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ", ";
      out << "[" << round_trip(m(i, j).real()) << ", " << round_trip(m(i, j).imag()) << "]";
    }
    out << "]" << (i + 1 < m.rows() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

BipartiteState parse_state_file(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("parse", e.what());
  }
  try {
    const auto dims = doc.at("dims").get<std::vector<int>>();
    if (dims.size() != 2) throw ValidationError("parse", "\"dims\" must hold two entries");
    const auto& rows = doc.at("matrix");
    if (!rows.is_array()) throw ValidationError("parse", "\"matrix\" must be an array");
    const auto n = static_cast<Eigen::Index>(rows.size());
    if (dims[0] < 1 || dims[1] < 1 || Eigen::Index{dims[0]} * dims[1] != n) {
      throw ValidationError("dimensions", "dims product does not match matrix size");
    }
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = rows.at(static_cast<std::size_t>(i));
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        throw ValidationError("square", "row " + std::to_string(i) + " has wrong length");
      }
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto entry = row.at(static_cast<std::size_t>(j)).get<std::vector<double>>();
        if (entry.size() != 2) {
          throw ValidationError("parse", "matrix entries must be [re, im] pairs");
        }
        m(i, j) = Complex(entry[0], entry[1]);
      }
    }
    return BipartiteState(validate_density(m), dims[0], dims[1]);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("parse", e.what());
  }
}

BipartiteState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("io", "cannot open state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_file(buf.str());
}

BipartiteState builtin_state(const std::string& name) {
  if (name == "example") return example_state();
  if (name == "bell") return bell_state();
  if (name == "product-mixed") return product_mixed_state();
  if (name == "max-mixed") return max_mixed_state();
  throw ValidationError("builtin", "unknown builtin state '" + name + "'");
}

}  // namespace skewcorr::cli
