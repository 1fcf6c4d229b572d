#include "tpd/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace tpd {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Index read_dim(const json& j, const char* axis) {
  if (!j.contains(axis)) {
    throw ParseError(std::string("tensor JSON: missing field '") + axis + "'");
  }
  const json& v = j.at(axis);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw ParseError(std::string("tensor JSON: axis '") + axis + "' must be a positive integer");
  }
  return static_cast<Index>(v.get<long long>());
}

// Reads a [p][m][n] nested array into the real or imaginary parts.
void read_part(const json& part, const char* name, Index m, Index n, Index p,
               std::vector<Matrix>& slices, bool imaginary) {
  if (!part.is_array() || static_cast<Index>(part.size()) != p) {
    throw ParseError(std::string("tensor JSON: '") + name + "' must have p=" + std::to_string(p) +
                     " slices, got " + std::to_string(part.is_array() ? part.size() : 0));
  }
  for (Index k = 0; k < p; ++k) {
    const json& slice = part.at(static_cast<size_t>(k));
    if (!slice.is_array() || static_cast<Index>(slice.size()) != m) {
      throw ParseError(std::string("tensor JSON: '") + name + "' slice " + std::to_string(k + 1) +
                       " must have m=" + std::to_string(m) + " rows, got " +
                       std::to_string(slice.is_array() ? slice.size() : 0));
    }
    for (Index r = 0; r < m; ++r) {
      const json& row = slice.at(static_cast<size_t>(r));
      if (!row.is_array() || static_cast<Index>(row.size()) != n) {
        throw ParseError(std::string("tensor JSON: '") + name + "' slice " +
                         std::to_string(k + 1) + " row " + std::to_string(r + 1) +
                         " must have n=" + std::to_string(n) + " columns, got " +
                         std::to_string(row.is_array() ? row.size() : 0));
      }
      for (Index c = 0; c < n; ++c) {
        const json& cell = row.at(static_cast<size_t>(c));
        if (!cell.is_number()) {
          throw ParseError(std::string("tensor JSON: '") + name + "' slice " +
                           std::to_string(k + 1) + " entry (" + std::to_string(r + 1) + "," +
                           std::to_string(c + 1) + ") is not a number");
        }
        const double value = cell.get<double>();
        if (!std::isfinite(value)) {
          throw ParseError(std::string("tensor JSON: '") + name + "' slice " +
                           std::to_string(k + 1) + " entry (" + std::to_string(r + 1) + "," +
                           std::to_string(c + 1) + ") is not finite");
        }
        Complex& entry = slices[static_cast<size_t>(k)](r, c);
        if (imaginary) {
          entry.imag(value);
        } else {
          entry.real(value);
        }
      }
    }
  }
}

json part_to_json(const Tensor3& t, bool imaginary) {
  json part = json::array();
  for (Index k = 0; k < t.num_slices(); ++k) {
    json slice = json::array();
    for (Index r = 0; r < t.rows(); ++r) {
      json row = json::array();
      for (Index c = 0; c < t.cols(); ++c) {
        const Complex& e = t.slice(k)(r, c);
        row.push_back(imaginary ? e.imag() : e.real());
      }
      slice.push_back(std::move(row));
    }
    part.push_back(std::move(slice));
  }
  return part;
}

}  // namespace

Tensor3 parse_tensor_json(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("tensor JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("tensor JSON: top level must be an object");
  }
  const Index m = read_dim(j, "m");
  const Index n = read_dim(j, "n");
  const Index p = read_dim(j, "p");

  std::vector<Matrix> slices(static_cast<size_t>(p), Matrix::Zero(m, n));
  if (!j.contains("real")) {
    throw ParseError("tensor JSON: missing field 'real'");
  }
  read_part(j.at("real"), "real", m, n, p, slices, /*imaginary=*/false);
  if (j.contains("imag")) {
    read_part(j.at("imag"), "imag", m, n, p, slices, /*imaginary=*/true);
  }
  return Tensor3(std::move(slices));
}

Tensor3 read_tensor_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  return parse_tensor_json(in);
}

void print_tensor_json(std::ostream& out, const Tensor3& t) {
  ordered_json j;
  j["m"] = t.rows();
  j["n"] = t.cols();
  j["p"] = t.num_slices();
  j["real"] = part_to_json(t, /*imaginary=*/false);
  if (!t.is_real()) {
    j["imag"] = part_to_json(t, /*imaginary=*/true);
  }
  out << j.dump(1) << "\n";
}

void write_tensor_json(const std::string& path, const Tensor3& t) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  print_tensor_json(out, t);
  if (!out) {
    throw IoError("failed writing '" + path + "'");
  }
}

}  // namespace tpd
