#include "mutlab/explore.hpp"

#include <utility>
#include <vector>

#include "mutlab/errors.hpp"

namespace mutlab {

CyclicityResult check_mutation_cyclic_bounded(const ExchangeMatrix& b, int depth) {
  if (b.rank() != 3) throw WrongRank("cyclicity check", 3, b.rank());
  if (depth < 1) throw ValidationError("cyclicity check depth must be at least 1");

  struct Node {
    ExchangeMatrix b;
    MutationSequence w;
  };

  if (!is_cyclic_rank3(b)) return CyclicityResult{false, MutationSequence{}};

  std::vector<Node> level;
  level.push_back(Node{b, {}});
  for (int len = 1; len <= depth; ++len) {
    std::vector<Node> next;
    next.reserve(level.size() * 2);
    for (const Node& node : level) {
      const int last = node.w.empty() ? 0 : node.w.back();
      for (int k = 1; k <= 3; ++k) {
        if (k == last) continue;
        Node child{mutate(node.b, k), node.w};
        child.w.push_back(k);
        if (!is_cyclic_rank3(child.b)) {
          return CyclicityResult{false, std::move(child.w)};
        }
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return CyclicityResult{true, std::nullopt};
}

}  // namespace mutlab
