#include "qig/matrix_io.hpp"

#include <cmath>
#include <fstream>

namespace qig {

using nlohmann::json;

namespace {

json part_to_json(const Matrix& m, bool imag) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

void read_part(const json& rows, Index n, const char* key, Matrix& m, bool imag) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != n) {
    throw InvariantError("shape", std::string("\"") + key + "\" must have n rows");
  }
  for (Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw InvariantError("shape", std::string("\"") + key + "\" row " + std::to_string(i) +
                                        " must have n entries");
    }
    for (Index j = 0; j < n; ++j) {
      const json& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) {
        throw InvariantError("format", std::string("\"") + key + "\" entries must be numbers");
      }
      const double x = v.get<double>();
      if (!std::isfinite(x)) throw InvariantError("format", "non-finite matrix entry");
      if (imag) {
        m(i, j) = Complex(m(i, j).real(), x);
      } else {
        m(i, j) = Complex(x, m(i, j).imag());
      }
    }
  }
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  return json{{"n", m.rows()}, {"re", part_to_json(m, false)}, {"im", part_to_json(m, true)}};
}

json matrix_to_json(const HermitianMatrix& h) { return matrix_to_json(h.matrix()); }

HermitianMatrix hermitian_from_json(const json& j) {
  if (!j.is_object()) throw InvariantError("format", "matrix must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw InvariantError("format", "missing integer field \"n\"");
  }
  const auto n = j["n"].get<long long>();
  if (n < 1 || n > 64) throw InvariantError("shape", "n out of range: " + std::to_string(n));
  if (!j.contains("re")) throw InvariantError("format", "missing field \"re\"");
  Matrix m = Matrix::Zero(n, n);
  read_part(j["re"], n, "re", m, false);
  if (j.contains("im")) read_part(j["im"], n, "im", m, true);
  return HermitianMatrix(m);
}

DensityMatrix density_from_json(const json& j) { return DensityMatrix(hermitian_from_json(j)); }

TangentVector tangent_from_json(const json& j) { return TangentVector(hermitian_from_json(j)); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvariantError("file", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvariantError("format", path + ": " + e.what());
  }
}

}  // namespace qig
