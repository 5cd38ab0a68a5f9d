#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mutlab/matrix.hpp"

namespace mutlab {

/// A word of 1-based vertex indices, applied left to right.
using MutationSequence = std::vector<int>;

/// True iff no two consecutive indices are equal; empty and length-1
/// sequences are reduced.
bool is_reduced(const MutationSequence& w);

/// "[2,3,1]" rendering used in messages and reports.
std::string sequence_to_string(const MutationSequence& w);

/// Skew-symmetric integer matrix encoding a quiver: entry (i,j) > 0 means
/// that many arrows from vertex i to vertex j.
class ExchangeMatrix {
 public:
  /// Validates skew-symmetry (which forces a zero diagonal). Throws
  /// NotSquare or NotSkewSymmetric with the offending 1-based position.
  static ExchangeMatrix validate(const IntMatrix& raw);
  static ExchangeMatrix validate(const std::vector<std::vector<Int>>& rows);
  static ExchangeMatrix of(std::initializer_list<std::initializer_list<long long>> rows);

  /// Rank-3 oriented cycle 1 -> 2 -> 3 -> 1 with the given arrow counts.
  static ExchangeMatrix cycle(const Int& w12, const Int& w23, const Int& w31);

  int rank() const { return m_.size(); }
  const Int& b(int i, int j) const { return m_.at(i, j); }
  const IntMatrix& matrix() const { return m_; }

  bool operator==(const ExchangeMatrix&) const = default;

 private:
  explicit ExchangeMatrix(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

/// Single mutation at vertex k: row and column k are negated, every other
/// entry picks up sgn(b_ik) * max(b_ik * b_kj, 0). Involutive, and the
/// result is skew-symmetric again.
ExchangeMatrix mutate(const ExchangeMatrix& b, int k);

/// Left-to-right fold of mutate(); the empty sequence returns b unchanged.
ExchangeMatrix apply_sequence(const ExchangeMatrix& b, const MutationSequence& w);

/// True iff the three arrow weights are nonzero and orient a 3-cycle, i.e.
/// b12, b23, b31 share one strict sign. Throws WrongRank unless rank is 3.
bool is_cyclic_rank3(const ExchangeMatrix& b);

/// Streams every reduced sequence over {1..rank} of length 1..max_len in
/// depth-first lexicographic order (children ascending), optionally fixed to
/// a given first index or restarted from a prefix; a prefix enumeration
/// yields the prefix itself and then its reduced extensions, which makes the
/// enumeration splittable into disjoint subtrees for parallel work.
class ReducedSequenceEnumerator {
 public:
  ReducedSequenceEnumerator(int rank, int max_len, std::optional<int> first = std::nullopt);
  ReducedSequenceEnumerator(int rank, int max_len, MutationSequence prefix);

  /// Next sequence in order, or std::nullopt once exhausted.
  std::optional<MutationSequence> next();

 private:
  bool descend();
  bool advance();

  int rank_;
  int max_len_;
  std::optional<int> first_;
  MutationSequence current_;
  std::size_t floor_;  // indices below this are the fixed prefix
  bool started_ = false;
  bool done_ = false;
};

/// Everything the enumerator would yield, collected; intended for tests and
/// small depths (the stream has 3 * 2^(t-1) words of each length t at rank 3).
std::vector<MutationSequence> enumerate_reduced(int rank, int max_len,
                                                std::optional<int> first = std::nullopt);

}  // namespace mutlab
