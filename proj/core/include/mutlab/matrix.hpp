#pragma once

#include <initializer_list>
#include <vector>

#include "mutlab/bigint.hpp"

namespace mutlab {

/// Dense square matrix of exact integers.
///
/// Indexing convention used throughout the library: row and column arguments
/// are 1-based, matching vertex labels in sequences, error messages and
/// serialized output. Storage is a flat 0-based array underneath.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static IntMatrix identity(int n);

  /// Builds from row-major rows; throws NotSquare unless all rows have
  /// exactly `rows.size()` entries.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  /// Brace-literal convenience for fixtures: {{0,-3,3},{3,0,-3},{-3,3,0}}.
  static IntMatrix of(std::initializer_list<std::initializer_list<long long>> rows);

  int size() const { return n_; }

  const Int& at(int i, int j) const { return a_[idx(i, j)]; }
  Int& at(int i, int j) { return a_[idx(i, j)]; }

  std::vector<Int> column(int j) const;
  std::vector<Int> row(int i) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t idx(int i, int j) const;

  int n_ = 0;
  std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
IntMatrix transpose(const IntMatrix& m);

/// "[[0,-3,3],[3,0,-3],[-3,3,0]]" rendering used in messages and failure
/// witnesses; columns render as "(1,3,6)".
std::string to_string(const IntMatrix& m);
std::string to_string(const std::vector<Int>& v);

/// Exact determinant by fraction-free (Bareiss) elimination; all divisions
/// performed are exact in the integers.
Int determinant(const IntMatrix& m);

/// Exact inverse of a matrix with determinant +-1, via the adjugate.
/// Determinant is computed first so NotUnimodular takes precedence over any
/// arithmetic on the cofactors.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// v^T m v for a square m and a vector of matching length.
Int bilinear_value(const IntMatrix& m, const std::vector<Int>& v);

Int max_abs_entry(const IntMatrix& m);

}  // namespace mutlab
