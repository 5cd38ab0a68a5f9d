#include "mutlab/verify.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "mutlab/errors.hpp"

namespace mutlab {

Int QuadraticForm::operator()(const std::vector<Int>& v) const {
  if (v.size() != 3) {
    throw WrongRank("quadratic form argument", 3, static_cast<int>(v.size()));
  }
  Int out = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  out += a_.a(1, 2) * v[0] * v[1];
  out += a_.a(1, 3) * v[0] * v[2];
  out += a_.a(2, 3) * v[1] * v[2];
  return out;
}

const char* subject_name(Subject s) {
  switch (s) {
    case Subject::theorem: return "theorem";
    case Subject::corollary: return "corollary";
    case Subject::cvector: return "cvector";
    case Subject::duality: return "duality";
    case Subject::companion: return "companion";
    case Subject::coherence: return "coherence";
  }
  return "unknown";
}

namespace {

VerificationReport passing(Subject subject, MutationSequence w,
                           std::optional<int> m = std::nullopt) {
  return VerificationReport{subject, std::move(w), m, true, "", {}};
}

VerificationReport failing(Subject subject, MutationSequence w, std::optional<int> m,
                           std::string witness) {
  return VerificationReport{subject, std::move(w), m, false, std::move(witness), {}};
}

void require_rank3(const ExchangeMatrix& b, const char* what) {
  if (b.rank() != 3) throw WrongRank(what, 3, b.rank());
}

void require_nonempty_reduced(const MutationSequence& w, const char* what) {
  if (w.empty()) {
    throw ValidationError(std::string(what) + " requires a nonempty sequence");
  }
  if (!is_reduced(w)) {
    throw NonReducedSequence("sequence " + sequence_to_string(w) + " is not reduced");
  }
}

// Theorem comparison once every ingredient is on hand: a_w is the chained
// A^w, a_first is A^{[i]}, g_wm is G^{w[m]}.
VerificationReport theorem_report(const IntMatrix& a_w, const IntMatrix& a_first,
                                  const IntMatrix& g_wm, const MutationSequence& w,
                                  int m) {
  const IntMatrix rhs = transpose(g_wm) * a_first * g_wm;
  if (rhs == a_w) return passing(Subject::theorem, w, m);
  std::ostringstream msg;
  msg << "A^w != (G^{w[m]})^T A^{[i]} G^{w[m]} at w=" << sequence_to_string(w)
      << ", m=" << m << ": lhs=" << to_string(a_w) << ", rhs=" << to_string(rhs);
  return failing(Subject::theorem, w, m, msg.str());
}

VerificationReport corollary_report(const QuadraticForm& q, const IntMatrix& g,
                                    const MutationSequence& w) {
  for (int j = 1; j <= 3; ++j) {
    const std::vector<Int> col = g.column(j);
    const Int value = q(col);
    if (value != 1) {
      std::ostringstream msg;
      msg << "q(g) != 1 at w=" << sequence_to_string(w) << ": column " << j << " = "
          << to_string(col) << " evaluates to " << value;
      return failing(Subject::corollary, w, std::nullopt, msg.str());
    }
  }
  return passing(Subject::corollary, w);
}

VerificationReport cvector_report(const Int& q12, const Int& q23, const Int& q31,
                                  const IntMatrix& c, const MutationSequence& w) {
  VerificationReport rep = passing(Subject::cvector, w);
  for (int j = 1; j <= 3; ++j) {
    const std::vector<Int> col = c.column(j);
    const Int& c1 = col[0];
    const Int& c2 = col[1];
    const Int& c3 = col[2];
    const Int base = c1 * c1 + c2 * c2 + c3 * c3;
    const Int t12 = q12 * c1 * c2;
    const Int t23 = q23 * c2 * c3;
    const Int t31 = q31 * c3 * c1;
    std::optional<SignWitness> found;
    for (int s12 : {+1, -1}) {
      for (int s23 : {+1, -1}) {
        for (int s31 : {+1, -1}) {
          if (!found && base + s12 * t12 + s23 * t23 + s31 * t31 == 1) {
            found = SignWitness{s12, s23, s31};
          }
        }
      }
    }
    if (!found) {
      std::ostringstream msg;
      msg << "no sign assignment solves the signed c-vector equation at w="
          << sequence_to_string(w) << ": column " << j << " = " << to_string(col)
          << " with weights (" << q12 << "," << q23 << "," << q31 << ")";
      rep.pass = false;
      rep.witness = msg.str();
      return rep;
    }
    rep.signs.push_back(*found);
  }
  return rep;
}

}  // namespace

VerificationReport verify_theorem(const ExchangeMatrix& b, const MutationSequence& w,
                                  int m) {
  require_rank3(b, "theorem check");
  require_nonempty_reduced(w, "theorem check");
  if (m < 1 || m > 3) throw IndexOutOfRange(m, 3);
  if (m == w.back()) throw InvalidM(m);

  const PseudoCartan a_w = cartan_along(b, w);
  const PseudoCartan a_first = pseudo_cartan(mutate(b, w.front()));
  MutationSequence wm = w;
  wm.push_back(m);
  const SeedState extended = replay(b, wm);
  return theorem_report(a_w.matrix(), a_first.matrix(), extended.g, w, m);
}

VerificationReport verify_corollary(const ExchangeMatrix& b, const MutationSequence& w) {
  require_rank3(b, "corollary check");
  require_nonempty_reduced(w, "corollary check");
  const QuadraticForm q(pseudo_cartan(mutate(b, w.front())));
  return corollary_report(q, replay(b, w).g, w);
}

VerificationReport verify_cvector_signed(const ExchangeMatrix& b,
                                         const MutationSequence& w) {
  require_rank3(b, "c-vector sign check");
  const SeedState s = replay(b, w);
  return cvector_report(abs_of(b.b(1, 2)), abs_of(b.b(2, 3)), abs_of(b.b(3, 1)), s.c, w);
}

// --- sweep ------------------------------------------------------------------

void CheckCounts::absorb(const CheckCounts& o) {
  instances += o.instances;
  passed += o.passed;
}

bool SweepAggregate::all_passed() const {
  return theorem.all_passed() && corollary.all_passed() && cvector.all_passed() &&
         duality.all_passed() && companion.all_passed() && coherence.all_passed();
}

void SweepAggregate::absorb(const SweepAggregate& o) {
  theorem.absorb(o.theorem);
  corollary.absorb(o.corollary);
  cvector.absorb(o.cvector);
  duality.absorb(o.duality);
  companion.absorb(o.companion);
  coherence.absorb(o.coherence);
  nodes += o.nodes;
  epsilon_minus_one += o.epsilon_minus_one;
  if (o.max_abs_entry > max_abs_entry) max_abs_entry = o.max_abs_entry;
}

namespace {

// Per-root constants threaded through a sweep.
struct SweepContext {
  IntMatrix a_first;  // A^{[i]}, the theorem/corollary anchor for this root
  QuadraticForm q;    // form of a_first
  Int q12, q23, q31;  // initial-quiver weights for the c-vector equation
  int depth;
  int split;  // subtree length handed to workers; 0 = fully inline
};

// A subtree root handed to a worker thread.
struct Deferred {
  int root;  // first index of the subtree's sequences
  SeedState state;
  PseudoCartan a;
};

int subject_order(Subject s) {
  switch (s) {
    case Subject::coherence: return 0;
    case Subject::duality: return 1;
    case Subject::companion: return 2;
    case Subject::corollary: return 3;
    case Subject::cvector: return 4;
    case Subject::theorem: return 5;
  }
  return 6;
}

// Deterministic retention order for the single kept failure: by sequence
// (lexicographic, so a node precedes its subtree), then by per-node check
// order, then by m. Associative min, hence identical for any thread count.
bool failure_precedes(const VerificationReport& a, const VerificationReport& b) {
  if (a.sequence != b.sequence) return a.sequence < b.sequence;
  const int sa = subject_order(a.subject), sb = subject_order(b.subject);
  if (sa != sb) return sa < sb;
  return a.m.value_or(0) < b.m.value_or(0);
}

void keep_earliest(std::optional<VerificationReport>& slot, VerificationReport r) {
  if (!slot || failure_precedes(r, *slot)) slot = std::move(r);
}

void absorb_entries(Int& best, const IntMatrix& m) {
  Int e = max_abs_entry(m);
  if (e > best) best = std::move(e);
}

// Runs every check at the node held by `s` (history nonempty), then walks its
// children in ascending order. Children are built once and serve both as the
// theorem's G^{w[m]} and as the recursion step. Nodes whose state is
// structurally broken (incoherent C, singular C, failed companion mutation)
// are reported and their subtrees pruned.
void visit_node(const SeedState& s, const PseudoCartan& a, const SweepContext& ctx,
                SweepAggregate& agg, std::optional<VerificationReport>& failure,
                std::vector<Deferred>* defer_sink) {
  agg.nodes += 1;
  absorb_entries(agg.max_abs_entry, s.b.matrix());
  absorb_entries(agg.max_abs_entry, s.c);
  absorb_entries(agg.max_abs_entry, s.g);
  absorb_entries(agg.max_abs_entry, a.matrix());

  agg.coherence.instances += 1;
  try {
    for (int j = 1; j <= 3; ++j) column_sign(s.c, j);
    agg.coherence.passed += 1;
  } catch (const InvariantError& e) {
    keep_earliest(failure, failing(Subject::coherence, s.history, std::nullopt, e.what()));
    return;
  }

  agg.duality.instances += 1;
  try {
    const IntMatrix dual = g_from_c(s.c);
    if (dual == s.g) {
      agg.duality.passed += 1;
    } else {
      std::ostringstream msg;
      msg << "duality oracle failed at w=" << sequence_to_string(s.history)
          << ": g=" << to_string(s.g) << " but (c^-1)^T=" << to_string(dual);
      keep_earliest(failure, failing(Subject::duality, s.history, std::nullopt, msg.str()));
    }
  } catch (const InvariantError& e) {
    keep_earliest(failure, failing(Subject::duality, s.history, std::nullopt, e.what()));
    return;
  }

  agg.companion.instances += 1;
  if (pseudo_cartan(s.b) == a) {
    agg.companion.passed += 1;
  } else {
    std::ostringstream msg;
    msg << "companion mismatch at w=" << sequence_to_string(s.history)
        << ": chained A^w=" << to_string(a.matrix())
        << ", companion of B^w=" << to_string(pseudo_cartan(s.b).matrix());
    keep_earliest(failure, failing(Subject::companion, s.history, std::nullopt, msg.str()));
  }

  agg.corollary.instances += 1;
  {
    VerificationReport rep = corollary_report(ctx.q, s.g, s.history);
    if (rep.pass) {
      agg.corollary.passed += 1;
    } else {
      keep_earliest(failure, std::move(rep));
    }
  }

  agg.cvector.instances += 1;
  {
    VerificationReport rep = cvector_report(ctx.q12, ctx.q23, ctx.q31, s.c, s.history);
    if (rep.pass) {
      agg.cvector.passed += 1;
    } else {
      keep_earliest(failure, std::move(rep));
    }
  }

  const int last = s.history.back();
  for (int k = 1; k <= 3; ++k) {
    if (k == last) continue;
    int eps = 0;
    SeedState child = mutate_seed(s, k, &eps);
    if (eps < 0) agg.epsilon_minus_one += 1;

    agg.theorem.instances += 1;
    VerificationReport rep = theorem_report(a.matrix(), ctx.a_first, child.g, s.history, k);
    if (rep.pass) {
      agg.theorem.passed += 1;
    } else {
      keep_earliest(failure, std::move(rep));
    }

    if (static_cast<int>(s.history.size()) < ctx.depth) {
      try {
        PseudoCartan child_a = mutate_cartan(a, k);
        if (defer_sink && static_cast<int>(child.history.size()) == ctx.split) {
          defer_sink->push_back(Deferred{s.history.front(), std::move(child),
                                         std::move(child_a)});
        } else {
          visit_node(child, child_a, ctx, agg, failure, defer_sink);
        }
      } catch (const InvariantError& e) {
        agg.companion.instances += 1;
        MutationSequence child_w = s.history;
        child_w.push_back(k);
        keep_earliest(failure,
                      failing(Subject::companion, std::move(child_w), std::nullopt, e.what()));
      }
    }
  }
}

}  // namespace

SweepReport sweep(const ExchangeMatrix& b, int depth, std::optional<int> first,
                  int jobs) {
  require_rank3(b, "verification sweep");
  if (depth < 1) throw ValidationError("sweep depth must be at least 1");
  if (first && (*first < 1 || *first > 3)) throw IndexOutOfRange(*first, 3);
  if (jobs < 1) throw ValidationError("job count must be at least 1");

  const auto t0 = std::chrono::steady_clock::now();
  SweepReport report;
  report.depth = depth;
  report.first = first;

  const Int q12 = abs_of(b.b(1, 2));
  const Int q23 = abs_of(b.b(2, 3));
  const Int q31 = abs_of(b.b(3, 1));

  const std::vector<int> roots =
      first ? std::vector<int>{*first} : std::vector<int>{1, 2, 3};

  // With several jobs, hand out subtrees rooted at this length; at least
  // four units per worker keeps the load even without over-slicing.
  int split = 0;
  if (jobs > 1 && depth >= 2) {
    split = 2;
    long long units = static_cast<long long>(roots.size()) * 2;
    while (split < depth && units < 4LL * jobs) {
      ++split;
      units *= 2;
    }
  }

  std::array<std::optional<SweepContext>, 3> ctx_by_root;
  std::vector<Deferred> deferred;
  std::optional<VerificationReport> failure;

  for (int i : roots) {
    int eps = 0;
    SeedState root_state = mutate_seed(initial_seed(b), i, &eps);
    PseudoCartan root_a = pseudo_cartan(root_state.b);
    ctx_by_root[i - 1] =
        SweepContext{root_a.matrix(), QuadraticForm(root_a), q12, q23, q31, depth, split};

    SweepAggregate agg;
    if (eps < 0) agg.epsilon_minus_one += 1;
    visit_node(root_state, root_a, *ctx_by_root[i - 1], agg, failure,
               split > 0 ? &deferred : nullptr);
    report.by_first[i - 1].absorb(agg);
  }

  if (!deferred.empty()) {
    struct UnitOut {
      SweepAggregate agg;
      std::optional<VerificationReport> fail;
    };
    std::vector<UnitOut> outs(deferred.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr worker_error;
    std::mutex error_mutex;

    const std::size_t workers =
        std::min(static_cast<std::size_t>(jobs), deferred.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        try {
          for (;;) {
            const std::size_t u = cursor.fetch_add(1);
            if (u >= deferred.size()) break;
            const Deferred& d = deferred[u];
            visit_node(d.state, d.a, *ctx_by_root[d.root - 1], outs[u].agg,
                       outs[u].fail, nullptr);
          }
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!worker_error) worker_error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (worker_error) std::rethrow_exception(worker_error);

    for (std::size_t u = 0; u < outs.size(); ++u) {
      report.by_first[deferred[u].root - 1].absorb(outs[u].agg);
      if (outs[u].fail) keep_earliest(failure, std::move(*outs[u].fail));
    }
  }

  for (const SweepAggregate& agg : report.by_first) report.total.absorb(agg);
  report.first_failure = std::move(failure);
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
  return report;
}

}  // namespace mutlab
