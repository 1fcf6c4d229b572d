#pragma once

#include <stdexcept>
#include <string>

namespace tpd {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor-level errors.
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotFrontalSquare : Error {
  using Error::Error;
};
struct NotCirculant : Error {
  using Error::Error;
};
struct NotTHermitian : Error {
  using Error::Error;
};
struct SingularTensor : Error {
  using Error::Error;
};
struct ParameterOutOfRange : Error {
  using Error::Error;
};

// Names the offending argument so callers (and the CLI) can report which
// input failed the positive-definiteness check.
struct NotTPD : Error {
  NotTPD(std::string which_arg, const std::string& detail)
      : Error("'" + which_arg + "' is not T-positive definite: " + detail),
        which(std::move(which_arg)) {}
  std::string which;
};

// Matrix-level errors raised by the dense oracle.
struct NotHermitian : Error {
  using Error::Error;
};
struct NotPD : Error {
  using Error::Error;
};

// A verified post-condition failed; indicates a defect, not bad input.
struct ConsistencyError : Error {
  using Error::Error;
};

// Tensor file I/O.
struct ParseError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace tpd
