#pragma once

#include <stdexcept>
#include <string>

// Domain error taxonomy. Precondition violations derive from invalid_argument,
// data-dependent failures from runtime_error, so callers can split "you called
// it wrong" from "this input genuinely lacks the requested structure".

namespace pvertex {

// ---- linear algebra ----
struct NonSquareError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct AsymmetricMatrixError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// Off-diagonal support of a matrix disagrees with the graph's edge set.
struct PatternError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- graphs ----
struct DisconnectedInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotBipartiteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnbalancedPartsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotATreeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- joins / threaded unions ----
struct BadBailVertexError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BailBudgetExceededError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidAssignmentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotTreeCycleBlockError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NoConsecutiveSingletonsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- witness construction ----
struct UnverifiedInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroCouplingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ComponentTooSmallError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotPerfectError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidBipartitionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- numeric search ----
struct SingularPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- I/O ----
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pvertex
