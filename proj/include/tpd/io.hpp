#pragma once

#include <iosfwd>
#include <string>

#include "tpd/tensor.hpp"

namespace tpd {

// Tensor JSON format:
//   { "m": int, "n": int, "p": int,
//     "real": [p][m][n] doubles,
//     "imag": [p][m][n] doubles }   // optional; absent means all-zero
// Slices ordered k = 1..p, rows then columns within a slice. Dimension
// mismatches are rejected with a ParseError naming the offending axis.

Tensor3 parse_tensor_json(std::istream& in);
Tensor3 read_tensor_json(const std::string& path);

void print_tensor_json(std::ostream& out, const Tensor3& t);
void write_tensor_json(const std::string& path, const Tensor3& t);

}  // namespace tpd
