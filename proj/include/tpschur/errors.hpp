#pragma once

#include <stdexcept>
#include <string>

namespace tpschur {

// Invalid inputs: bad indices, nodes outside the domain, malformed partitions.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Work refused because a size guard was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bidiagonal factorization hit a zero denominator minor.
class FactorizationError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace tpschur
