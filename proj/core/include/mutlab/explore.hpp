#pragma once

#include <optional>

#include "mutlab/exchange.hpp"

namespace mutlab {

/// Outcome of the bounded necessary-condition check for mutation-cyclicity.
struct CyclicityResult {
  bool cyclic_to_depth = false;
  /// First witness in breadth-first order when the check fails; the empty
  /// sequence means the input itself is not cyclic.
  std::optional<MutationSequence> counterexample;
};

/// Breadth-first walk over every reduced sequence of length 0..depth (root
/// included), testing is_cyclic_rank3 at each node. Success is a NECESSARY
/// condition for mutation-cyclicity, not a proof of it; failure is a
/// definitive disproof, returned with the earliest witness. Throws WrongRank
/// unless rank is 3 and ValidationError for depth < 1.
CyclicityResult check_mutation_cyclic_bounded(const ExchangeMatrix& b, int depth);

}  // namespace mutlab
