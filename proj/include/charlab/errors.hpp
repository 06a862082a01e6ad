#pragma once

#include <stdexcept>
#include <string>

namespace charlab {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TableMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroInverse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonIntegerValue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A vanishing-space basis that fails to expand the gamma functions; indicates
// an internal inconsistency rather than bad input.
struct SingularBasis : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnderdeterminedSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfeasibleGram : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfeasibleInstance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValueOutsideRing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace charlab
