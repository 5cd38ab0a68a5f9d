#include "mutlab/cartan.hpp"

#include "mutlab/errors.hpp"

namespace mutlab {

namespace {

void check_cartan_index(int k) {
  if (k < 1 || k > 3) throw IndexOutOfRange(k, 3);
}

}  // namespace

PseudoCartan PseudoCartan::validate(const IntMatrix& raw) {
  if (raw.size() != 3) throw WrongRank("pseudo-Cartan companion", 3, raw.size());
  for (int i = 1; i <= 3; ++i) {
    if (raw.at(i, i) != 2) {
      throw ValidationError("companion diagonal entry (" + std::to_string(i) + "," +
                            std::to_string(i) + ") is not 2");
    }
    for (int j = i + 1; j <= 3; ++j) {
      if (raw.at(i, j) != raw.at(j, i)) {
        throw ValidationError("companion matrix is not symmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (raw.at(i, j).sign() < 0) {
        throw CompanionInvariantViolated(i, j, to_decimal(raw.at(i, j)));
      }
    }
  }
  return PseudoCartan(raw);
}

PseudoCartan PseudoCartan::of(
    std::initializer_list<std::initializer_list<long long>> rows) {
  return validate(IntMatrix::of(rows));
}

PseudoCartan pseudo_cartan(const ExchangeMatrix& b) {
  if (b.rank() != 3) throw WrongRank("pseudo-Cartan companion", 3, b.rank());
  IntMatrix a(3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      a.at(i, j) = (i == j) ? 2 : abs_of(b.b(i, j));
    }
  }
  return PseudoCartan::validate(a);
}

DMatrix d_matrix(const PseudoCartan& a, int k, int l) {
  check_cartan_index(k);
  check_cartan_index(l);
  if (k == l) throw IndexError(k);
  IntMatrix d = IntMatrix::identity(3);
  d.at(l, l) = -1;
  d.at(k, l) = a.a(k, l);
  return DMatrix{std::move(d), k, l};
}

PseudoCartan mutate_cartan(const PseudoCartan& a, int k) {
  check_cartan_index(k);
  IntMatrix candidate;
  bool have_candidate = false;
  for (int l = 1; l <= 3; ++l) {
    if (l == k) continue;
    const DMatrix d = d_matrix(a, k, l);
    IntMatrix branch = transpose(d.entries) * a.matrix() * d.entries;
    if (!have_candidate) {
      candidate = std::move(branch);
      have_candidate = true;
    } else if (branch != candidate) {
      throw LIndependenceViolated(k);
    }
  }
  return PseudoCartan::validate(candidate);
}

PseudoCartan cartan_along(const ExchangeMatrix& b, const MutationSequence& w) {
  if (w.empty()) {
    throw ValidationError("companion chain requires a nonempty sequence");
  }
  if (!is_reduced(w)) {
    throw NonReducedSequence("sequence " + sequence_to_string(w) + " is not reduced");
  }
  PseudoCartan a = pseudo_cartan(mutate(b, w.front()));
  for (std::size_t t = 1; t < w.size(); ++t) a = mutate_cartan(a, w[t]);
  return a;
}

}  // namespace mutlab
