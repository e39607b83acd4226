#pragma once

#include <stdexcept>
#include <string>

namespace hellylat {

// Malformed input: unknown identifiers, invalid parameters, broken order axioms.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called on an object that does not satisfy its precondition
// (e.g. bowtie search on a poset that is not bounded and graded).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration exceeded its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hellylat
