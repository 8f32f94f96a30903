#pragma once

#include <stdexcept>
#include <string>

namespace ffg {

// Raised when an operation's precondition fails on valid-looking input
// (bad rank, identity where a nonidentity word is needed, and so on).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The overlap of a subtree with the axis of b did not stay bounded, which
// signals that the subgroup meets <b> (its invariant is infinite).
class UnboundedOverlap : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ffg
