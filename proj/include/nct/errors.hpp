#pragma once

#include <stdexcept>
#include <string>

namespace nct {

// Error categories map 1:1 onto CLI exit codes (1, 2, 3).
class error : public std::runtime_error {
  public:
	using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, schema violations, unparsable rationals.
class parse_error : public error {
  public:
	using error::error;
};

// A documented operation precondition does not hold (non-Hermitian input,
// non-unimodular augmentation, invalid Seifert basis, arity mismatch, ...).
class precondition_error : public error {
  public:
	using error::error;
};

// An identity that must hold by construction failed at runtime.
class invariant_error : public error {
  public:
	using error::error;
};

} // namespace nct
