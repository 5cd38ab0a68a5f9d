#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mutlab/cartan.hpp"
#include "mutlab/exchange.hpp"
#include "mutlab/matrix.hpp"
#include "mutlab/seed.hpp"

namespace mutlab {

/// The integer quadratic form attached to a companion matrix A:
///
///   q(v) = v1^2 + v2^2 + v3^2 + a12 v1 v2 + a13 v1 v3 + a23 v2 v3,
///
/// equivalently v^T A v = 2 q(v). An integer vector with q(v) = 1 is a root
/// of the form.
class QuadraticForm {
 public:
  explicit QuadraticForm(PseudoCartan a) : a_(std::move(a)) {}

  const PseudoCartan& companion() const { return a_; }

  /// Exact evaluation; v must have three entries.
  Int operator()(const std::vector<Int>& v) const;

 private:
  PseudoCartan a_;
};

inline Int eval_form(const QuadraticForm& q, const std::vector<Int>& v) { return q(v); }

/// Which identity a report is about. The first three are the headline
/// checks; the rest are the engine's internal cross-checks, surfaced with
/// the same machinery so a sweep failure always names its source.
enum class Subject { theorem, corollary, cvector, duality, companion, coherence };

const char* subject_name(Subject s);

/// Signs (s12, s23, s31) attached to the three initial weights in the
/// signed c-vector equation; one witness per C-matrix column.
struct SignWitness {
  int s12 = 0;
  int s23 = 0;
  int s31 = 0;

  bool operator==(const SignWitness&) const = default;
};

/// Outcome of one check. pass is true iff witness is empty; on failure the
/// witness spells out both sides of the identity that broke. For the
/// c-vector check, signs holds the per-column sign witnesses (recorded on
/// success as well - they are the interesting part of that check).
struct VerificationReport {
  Subject subject = Subject::theorem;
  MutationSequence sequence;
  std::optional<int> m;
  bool pass = false;
  std::string witness;
  std::vector<SignWitness> signs;
};

/// Checks A^w = (G^{w[m]})^T A^{[i]} G^{w[m]}, where i is the first index of
/// w, A^w comes from the companion chain, and G^{w[m]} from the seed
/// recurrence along w extended by m. Requires w nonempty and reduced, and
/// m != last(w) so the extension stays reduced; throws NonReducedSequence /
/// InvalidM / IndexOutOfRange accordingly.
VerificationReport verify_theorem(const ExchangeMatrix& b, const MutationSequence& w,
                                  int m);

/// Checks q(g) = 1 for each of the three columns g of G^w, with q built from
/// A^{[i]}, i the first index of w. Requires w nonempty and reduced.
VerificationReport verify_corollary(const ExchangeMatrix& b, const MutationSequence& w);

/// Checks that every column c of C^w solves the signed equation
///
///   c1^2 + c2^2 + c3^2 + s12 q12 c1 c2 + s23 q23 c2 c3 + s31 q31 c3 c1 = 1
///
/// for some signs s in {+1,-1}^3, where q_ij = |b_ij| of the INITIAL
/// exchange matrix (not the mutated one - the asymmetry with the g-vector
/// check is deliberate). Brute-forces the eight assignments per column and
/// records the first witness found. Accepts any in-range sequence.
VerificationReport verify_cvector_signed(const ExchangeMatrix& b,
                                         const MutationSequence& w);

/// Pass/fail tally of one category of check.
struct CheckCounts {
  long long instances = 0;
  long long passed = 0;

  bool all_passed() const { return passed == instances; }
  void absorb(const CheckCounts& o);
};

/// Counters accumulated over a set of sweep nodes.
struct SweepAggregate {
  CheckCounts theorem;
  CheckCounts corollary;
  CheckCounts cvector;
  CheckCounts duality;
  CheckCounts companion;
  CheckCounts coherence;
  long long nodes = 0;
  long long epsilon_minus_one = 0;
  Int max_abs_entry = 0;

  bool all_passed() const;
  void absorb(const SweepAggregate& o);
};

/// Result of sweep(): totals, per-first-index breakdown (the corollary's
/// form depends on the first index, so results are grouped by it), and the
/// earliest failure in depth-first sequence order, if any.
struct SweepReport {
  int depth = 0;
  std::optional<int> first;
  SweepAggregate total;
  std::array<SweepAggregate, 3> by_first;
  std::optional<VerificationReport> first_failure;
  long long wall_time_ms = 0;

  bool all_passed() const { return total.all_passed() && !first_failure; }
};

/// Exhaustive verification over every reduced sequence of length 1..depth
/// (optionally restricted to one first index). At each node w it checks sign
/// coherence of every C-column, the duality oracle G = (C^{-1})^T, companion
/// consistency A^w = pseudo_cartan(B^w), the corollary, the signed c-vector
/// equation, and the theorem identity for both valid m. Invariant errors
/// (mixed-sign column, l-dependence, ...) are reported as failed nodes, and
/// the subtree below a corrupted node is pruned rather than crashed into.
///
/// jobs > 1 fans the enumeration subtrees out across threads; the report is
/// byte-identical to the single-threaded one (counts are associative and the
/// retained failure is the depth-first-earliest).
SweepReport sweep(const ExchangeMatrix& b, int depth,
                  std::optional<int> first = std::nullopt, int jobs = 1);

}  // namespace mutlab
