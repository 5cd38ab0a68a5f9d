#pragma once

#include <stdexcept>
#include <string>

namespace mutlab {

/// Base class for everything thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: the caller handed us something malformed (bad matrix,
/// out-of-range vertex, non-reduced sequence where one is required, ...).
/// The CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant the engine relies on failed to hold. For valid
/// seeds these are unreachable; hitting one means either a bug or an input
/// outside the regime the computation assumes. The CLI maps these to exit
/// code 1.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// -- validation ------------------------------------------------------------

class NotSquare : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Carries the offending position (1-based, as in all user-facing output).
class NotSkewSymmetric : public ValidationError {
 public:
  NotSkewSymmetric(int row, int col);
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

class IndexOutOfRange : public ValidationError {
 public:
  IndexOutOfRange(int index, int rank);
};

class WrongRank : public ValidationError {
 public:
  WrongRank(const std::string& what, int expected, int actual);
};

/// The auxiliary index of a D-matrix coincides with the mutation index.
class IndexError : public ValidationError {
 public:
  explicit IndexError(int k);
};

class NonReducedSequence : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The theorem check was asked for m equal to the last index of w, which
/// would make w[m] non-reduced.
class InvalidM : public ValidationError {
 public:
  explicit InvalidM(int m);
};

/// Malformed document at the serialization boundary; the message names the
/// offending field.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// -- invariants ------------------------------------------------------------

/// A C-matrix column holds entries of both signs. Sign coherence is a
/// theorem for seeds evolved from the identity, so this signals a bug or a
/// hand-built invalid input.
class MixedSignColumn : public InvariantError {
 public:
  explicit MixedSignColumn(int column);
  int column() const { return column_; }

 private:
  int column_;
};

/// Unreachable for valid seeds (their C-matrices are unimodular), kept
/// distinct to aid debugging of hand-built inputs.
class ZeroColumn : public InvariantError {
 public:
  explicit ZeroColumn(int column);
};

class NotUnimodular : public InvariantError {
 public:
  explicit NotUnimodular(const std::string& determinant);
};

/// The two auxiliary-index choices of a companion mutation disagreed.
class LIndependenceViolated : public InvariantError {
 public:
  explicit LIndependenceViolated(int k);
};

/// A mutated companion matrix acquired a negative off-diagonal entry; the
/// input has left the mutation-cyclic regime.
class CompanionInvariantViolated : public InvariantError {
 public:
  CompanionInvariantViolated(int row, int col, const std::string& value);
};

}  // namespace mutlab
