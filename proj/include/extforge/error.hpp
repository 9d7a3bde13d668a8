#pragma once

#include <stdexcept>
#include <string>

namespace extforge {

enum class errc {
  composition_nonzero,
  truncation_exceeded,
  unknown_algebra,
  invalid_module,
  range_exceeded,
  invalid_subalgebra,
  unknown_module,
  unknown_action,
  degree_mismatch,
  unknown_identity,
  split_violation,
  shape_mismatch,
  odd_degree,
  inconsistent,
  no_solution,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::composition_nonzero: return "COMPOSITION_NONZERO";
    case errc::truncation_exceeded: return "TRUNCATION_EXCEEDED";
    case errc::unknown_algebra: return "UNKNOWN_ALGEBRA";
    case errc::invalid_module: return "INVALID_MODULE";
    case errc::range_exceeded: return "RANGE_EXCEEDED";
    case errc::invalid_subalgebra: return "INVALID_SUBALGEBRA";
    case errc::unknown_module: return "UNKNOWN_MODULE";
    case errc::unknown_action: return "UNKNOWN_ACTION";
    case errc::degree_mismatch: return "DEGREE_MISMATCH";
    case errc::unknown_identity: return "UNKNOWN_IDENTITY";
    case errc::split_violation: return "SPLIT_VIOLATION";
    case errc::shape_mismatch: return "SHAPE_MISMATCH";
    case errc::odd_degree: return "ODD_DEGREE";
    case errc::inconsistent: return "INCONSISTENT";
    case errc::no_solution: return "NO_SOLUTION";
    case errc::parse_error: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

} // namespace extforge
