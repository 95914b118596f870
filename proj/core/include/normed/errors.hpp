#pragma once

#include <stdexcept>
#include <string>

namespace normed {

/// Objects that do not fit together: mismatched domains, unknown labels,
/// parameters outside their documented range.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input is well-formed but the requested construction does not exist
/// for it (unbounded generator map, non-contractive algebra data, a
/// rescaling factor that is not rational).
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundedError : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

class NotContractiveError : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

class IrrationalNormError : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

/// Malformed text input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace normed
