#include "mutlab/exchange.hpp"

#include <sstream>
#include <utility>

#include "mutlab/errors.hpp"

namespace mutlab {

bool is_reduced(const MutationSequence& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1]) return false;
  }
  return true;
}

std::string sequence_to_string(const MutationSequence& w) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out << ',';
    out << w[i];
  }
  out << ']';
  return out.str();
}

ExchangeMatrix ExchangeMatrix::validate(const IntMatrix& raw) {
  const int n = raw.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (raw.at(i, j) != -raw.at(j, i)) throw NotSkewSymmetric(i, j);
    }
  }
  return ExchangeMatrix(raw);
}

ExchangeMatrix ExchangeMatrix::validate(const std::vector<std::vector<Int>>& rows) {
  return validate(IntMatrix::from_rows(rows));
}

ExchangeMatrix ExchangeMatrix::of(
    std::initializer_list<std::initializer_list<long long>> rows) {
  return validate(IntMatrix::of(rows));
}

ExchangeMatrix ExchangeMatrix::cycle(const Int& w12, const Int& w23, const Int& w31) {
  IntMatrix m(3);
  m.at(1, 2) = w12;
  m.at(2, 1) = -w12;
  m.at(2, 3) = w23;
  m.at(3, 2) = -w23;
  m.at(3, 1) = w31;
  m.at(1, 3) = -w31;
  return ExchangeMatrix(std::move(m));
}

ExchangeMatrix mutate(const ExchangeMatrix& b, int k) {
  const int n = b.rank();
  if (k < 1 || k > n) throw IndexOutOfRange(k, n);
  IntMatrix out(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == k || j == k) {
        out.at(i, j) = -b.b(i, j);
      } else {
        Int through_k = b.b(i, k) * b.b(k, j);
        if (through_k.sign() > 0) {
          out.at(i, j) = b.b(i, j) + sign_of(b.b(i, k)) * through_k;
        } else {
          out.at(i, j) = b.b(i, j);
        }
      }
    }
  }
  return ExchangeMatrix::validate(out);
}

ExchangeMatrix apply_sequence(const ExchangeMatrix& b, const MutationSequence& w) {
  ExchangeMatrix out = b;
  for (int k : w) out = mutate(out, k);
  return out;
}

bool is_cyclic_rank3(const ExchangeMatrix& b) {
  if (b.rank() != 3) throw WrongRank("cyclicity test", 3, b.rank());
  const int s12 = sign_of(b.b(1, 2));
  const int s23 = sign_of(b.b(2, 3));
  const int s31 = sign_of(b.b(3, 1));
  return s12 != 0 && s12 == s23 && s23 == s31;
}

namespace {

void check_enumeration_bounds(int rank, int max_len) {
  if (rank < 1) throw ValidationError("enumeration rank must be at least 1");
  if (max_len < 1) throw ValidationError("enumeration depth must be at least 1");
}

}  // namespace

ReducedSequenceEnumerator::ReducedSequenceEnumerator(int rank, int max_len,
                                                     std::optional<int> first)
    : rank_(rank), max_len_(max_len), first_(first), floor_(0) {
  check_enumeration_bounds(rank, max_len);
  if (first) {
    if (*first < 1 || *first > rank) throw IndexOutOfRange(*first, rank);
    current_ = {*first};
    floor_ = 1;
  }
}

ReducedSequenceEnumerator::ReducedSequenceEnumerator(int rank, int max_len,
                                                     MutationSequence prefix)
    : rank_(rank), max_len_(max_len), current_(std::move(prefix)), floor_(current_.size()) {
  check_enumeration_bounds(rank, max_len);
  for (int k : current_) {
    if (k < 1 || k > rank) throw IndexOutOfRange(k, rank);
  }
  if (!is_reduced(current_)) {
    throw NonReducedSequence("enumeration prefix " + sequence_to_string(current_) +
                             " is not reduced");
  }
}

bool ReducedSequenceEnumerator::descend() {
  if (static_cast<int>(current_.size()) >= max_len_) return false;
  const int last = current_.empty() ? 0 : current_.back();
  for (int c = 1; c <= rank_; ++c) {
    if (c == last) continue;
    current_.push_back(c);
    return true;
  }
  return false;
}

bool ReducedSequenceEnumerator::advance() {
  while (current_.size() > floor_) {
    const int last = current_.back();
    current_.pop_back();
    const int parent_last = current_.empty() ? 0 : current_.back();
    for (int c = last + 1; c <= rank_; ++c) {
      if (c == parent_last) continue;
      current_.push_back(c);
      return true;
    }
  }
  done_ = true;
  return false;
}

std::optional<MutationSequence> ReducedSequenceEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (floor_ > 0) {
      if (static_cast<int>(current_.size()) <= max_len_) return current_;
      done_ = true;
      return std::nullopt;
    }
    if (descend()) return current_;
    done_ = true;
    return std::nullopt;
  }
  if (descend()) return current_;
  if (advance()) return current_;
  return std::nullopt;
}

std::vector<MutationSequence> enumerate_reduced(int rank, int max_len,
                                                std::optional<int> first) {
  std::vector<MutationSequence> out;
  ReducedSequenceEnumerator stream(rank, max_len, first);
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace mutlab
