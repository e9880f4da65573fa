#pragma once

#include <stdexcept>
#include <string>

namespace gspline {

/// Malformed or semantically invalid input (documents, labels, vertex names).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's contract (index out of range, wrong count, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Some vertex v_i (i >= 2) has no trail back to v_1..v_{i-1}.
class disconnected_graph_error : public input_error {
 public:
  using input_error::input_error;
};

/// Trail enumeration exceeded its configured cap.
class enumeration_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result that the underlying theory guarantees failed to hold. Always a bug.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gspline
