#pragma once

#include "mutlab/exchange.hpp"
#include "mutlab/matrix.hpp"

namespace mutlab {

/// One node on a mutation path: the exchange matrix together with the C- and
/// G-matrices accumulated since the initial seed, and the sequence that
/// produced it.
struct SeedState {
  ExchangeMatrix b;
  IntMatrix c;
  IntMatrix g;
  MutationSequence history;

  bool operator==(const SeedState&) const = default;
};

/// Seed at the empty sequence: C = G = identity.
SeedState initial_seed(const ExchangeMatrix& b0);

/// Strict sign of column k: +1 if every entry is >= 0, -1 if every entry is
/// <= 0 (with at least one nonzero entry either way). Throws ZeroColumn on an
/// all-zero column and MixedSignColumn when both strict signs occur; sign
/// coherence rules both out for C-matrices evolved from the identity, so they
/// are reachable only through hand-built inputs.
int column_sign(const IntMatrix& m, int k);

/// One mutation step at vertex k. The sign e and the exchange matrix are read
/// from the *pre-mutation* state: with e = column_sign(c, k),
///
///   c' = c * (J_k + [ e b]+ with only row k kept),
///   g' = g * (J_k + [-e b]+ with only column k kept),
///
/// where J_k is the identity with entry (k,k) negated and [.]+ clamps
/// negative entries to zero. Reports e through epsilon_out when non-null;
/// callers must not assume e = +1 (it is genuinely -1 on some paths).
SeedState mutate_seed(const SeedState& s, int k, int* epsilon_out = nullptr);

/// Fold of mutate_seed over w starting from initial_seed(b0). Accepts any
/// in-range sequence: mutation is involutive, so a non-reduced word is merely
/// wasteful, and reduced-ness is the caller's contract where it matters (the
/// verifier and the enumerator enforce it).
SeedState replay(const ExchangeMatrix& b0, const MutationSequence& w);

/// Duality oracle: the G-matrix determined by a C-matrix as the transposed
/// inverse. Exact; throws NotUnimodular if det(c) is not +-1.
IntMatrix g_from_c(const IntMatrix& c);

}  // namespace mutlab
