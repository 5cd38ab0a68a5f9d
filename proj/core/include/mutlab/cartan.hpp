#pragma once

#include "mutlab/exchange.hpp"
#include "mutlab/matrix.hpp"

namespace mutlab {

/// Symmetric 3x3 integer matrix with diagonal 2 and nonnegative off-diagonal
/// entries: the companion attached to an exchange matrix by dropping arrow
/// directions. Construction always validates, so a held value satisfies the
/// invariants.
class PseudoCartan {
 public:
  /// Throws WrongRank unless raw is 3x3, ValidationError if raw is not
  /// symmetric with diagonal 2, and CompanionInvariantViolated if an
  /// off-diagonal entry is negative.
  static PseudoCartan validate(const IntMatrix& raw);
  static PseudoCartan of(std::initializer_list<std::initializer_list<long long>> rows);

  const Int& a(int i, int j) const { return m_.at(i, j); }
  const IntMatrix& matrix() const { return m_; }

  bool operator==(const PseudoCartan&) const = default;

 private:
  explicit PseudoCartan(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

/// Congruence factor implementing companion mutation at k with auxiliary
/// index l: the identity except for entry (k,l) = a_kl and entry (l,l) = -1.
/// Self-inverse.
struct DMatrix {
  IntMatrix entries;
  int k;
  int l;
};

/// Companion of b: diagonal 2, off-diagonal |b_ij|. Throws WrongRank unless
/// rank is 3.
PseudoCartan pseudo_cartan(const ExchangeMatrix& b);

/// D^(k,l) built from a. Throws IndexError if k = l and IndexOutOfRange for
/// indices outside 1..3. a_kl = 0 is allowed (D degenerates to a sign flip
/// at l), though companions reached from mutation-cyclic seeds never have
/// zero weights.
DMatrix d_matrix(const PseudoCartan& a, int k, int l);

/// Companion mutation at k: computes transpose(D) * a * D for BOTH auxiliary
/// choices l, checks that they agree, and validates the common result.
///
/// Throws LIndependenceViolated if the two branches disagree and
/// CompanionInvariantViolated if the result picks up a negative off-diagonal
/// entry; either means the input sits outside the mutation-cyclic regime the
/// companion calculus assumes.
PseudoCartan mutate_cartan(const PseudoCartan& a, int k);

/// The companion chain along w: starts from the companion of the
/// once-mutated exchange matrix, pseudo_cartan(mutate(b, w[0])), then applies
/// mutate_cartan for each later index. Requires a nonempty reduced w; the
/// companion of b itself is available directly via pseudo_cartan.
PseudoCartan cartan_along(const ExchangeMatrix& b, const MutationSequence& w);

}  // namespace mutlab
