#include "mutlab/errors.hpp"

#include <sstream>

namespace mutlab {

namespace {

std::string fmt(const char* prefix, int a, int b, const char* suffix = "") {
  std::ostringstream msg;
  msg << prefix << "(" << a << "," << b << ")" << suffix;
  return msg.str();
}

}  // namespace

NotSkewSymmetric::NotSkewSymmetric(int row, int col)
    : ValidationError(fmt("matrix is not skew-symmetric at ", row, col,
                          ": entry does not equal the negated transpose")),
      row_(row),
      col_(col) {}

IndexOutOfRange::IndexOutOfRange(int index, int rank)
    : ValidationError([&] {
        std::ostringstream msg;
        msg << "vertex index " << index << " out of range 1.." << rank;
        return msg.str();
      }()) {}

WrongRank::WrongRank(const std::string& what, int expected, int actual)
    : ValidationError([&] {
        std::ostringstream msg;
        msg << what << " requires rank " << expected << ", got rank " << actual;
        return msg.str();
      }()) {}

IndexError::IndexError(int k)
    : ValidationError([&] {
        std::ostringstream msg;
        msg << "auxiliary index l must differ from mutation index k = " << k;
        return msg.str();
      }()) {}

InvalidM::InvalidM(int m)
    : ValidationError([&] {
        std::ostringstream msg;
        msg << "m = " << m << " equals the last index of w, so w[m] would not be reduced";
        return msg.str();
      }()) {}

MixedSignColumn::MixedSignColumn(int column)
    : InvariantError([&] {
        std::ostringstream msg;
        msg << "column " << column << " of the C-matrix holds entries of both signs";
        return msg.str();
      }()),
      column_(column) {}

ZeroColumn::ZeroColumn(int column)
    : InvariantError([&] {
        std::ostringstream msg;
        msg << "column " << column << " of the C-matrix is the zero vector";
        return msg.str();
      }()) {}

NotUnimodular::NotUnimodular(const std::string& determinant)
    : InvariantError("matrix determinant " + determinant + " is not +1 or -1") {}

LIndependenceViolated::LIndependenceViolated(int k)
    : InvariantError([&] {
        std::ostringstream msg;
        msg << "companion mutation at " << k
            << ": the two auxiliary-index congruences disagree";
        return msg.str();
      }()) {}

CompanionInvariantViolated::CompanionInvariantViolated(int row, int col,
                                                       const std::string& value)
    : InvariantError([&] {
        std::ostringstream msg;
        msg << "companion entry (" << row << "," << col << ") = " << value
            << " violates the nonnegative off-diagonal invariant";
        return msg.str();
      }()) {}

}  // namespace mutlab
