#pragma once

#include <stdexcept>
#include <string>

namespace padicdpp {

/// Base class for input/precondition violations. The CLI maps these to
/// exit code 2; anything else escaping to the top level is an internal
/// error (exit code 1).
class invalid_input : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class malformed_literal_error : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class incompatible_field_error : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class insufficient_precision_error : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class insufficient_depth_error : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

/// Asked for the covariance at the zero coset; use the variance instead.
class distinct_representative_error : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class resolution_too_fine_error : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class resolution_too_coarse_error : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class precondition_error : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

/// Numerical validation failed (non-Hermitian input, eigenvalue out of
/// range, ...). Indicates a bug or a genuinely pathological input.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace padicdpp
