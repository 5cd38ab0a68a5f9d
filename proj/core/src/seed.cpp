#include "mutlab/seed.hpp"

#include "mutlab/errors.hpp"

namespace mutlab {

SeedState initial_seed(const ExchangeMatrix& b0) {
  const int n = b0.rank();
  return SeedState{b0, IntMatrix::identity(n), IntMatrix::identity(n), {}};
}

int column_sign(const IntMatrix& m, int k) {
  const int n = m.size();
  if (k < 1 || k > n) throw IndexOutOfRange(k, n);
  bool has_pos = false;
  bool has_neg = false;
  for (int i = 1; i <= n; ++i) {
    const int s = sign_of(m.at(i, k));
    if (s > 0) has_pos = true;
    if (s < 0) has_neg = true;
  }
  if (has_pos && has_neg) throw MixedSignColumn(k);
  if (!has_pos && !has_neg) throw ZeroColumn(k);
  return has_pos ? 1 : -1;
}

SeedState mutate_seed(const SeedState& s, int k, int* epsilon_out) {
  const int n = s.b.rank();
  if (k < 1 || k > n) throw IndexOutOfRange(k, n);
  const int e = column_sign(s.c, k);
  if (epsilon_out) *epsilon_out = e;

  // Right factors for the C and G updates, built from the pre-mutation b.
  IntMatrix p = IntMatrix::identity(n);
  IntMatrix q = IntMatrix::identity(n);
  p.at(k, k) = -1;
  q.at(k, k) = -1;
  for (int j = 1; j <= n; ++j) {
    if (j == k) continue;
    Int row_entry = e * s.b.b(k, j);
    if (row_entry.sign() > 0) p.at(k, j) = std::move(row_entry);
    Int col_entry = -e * s.b.b(j, k);
    if (col_entry.sign() > 0) q.at(j, k) = std::move(col_entry);
  }

  SeedState out{mutate(s.b, k), s.c * p, s.g * q, s.history};
  out.history.push_back(k);
  return out;
}

SeedState replay(const ExchangeMatrix& b0, const MutationSequence& w) {
  SeedState s = initial_seed(b0);
  for (int k : w) s = mutate_seed(s, k);
  return s;
}

IntMatrix g_from_c(const IntMatrix& c) { return transpose(unimodular_inverse(c)); }

}  // namespace mutlab
