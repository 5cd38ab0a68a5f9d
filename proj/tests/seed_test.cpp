#include <mutlab/errors.hpp>
#include <mutlab/matrix.hpp>
#include <mutlab/seed.hpp>

#include <doctest.h>

#include <random>

using namespace mutlab;

namespace {

const ExchangeMatrix kB0 = ExchangeMatrix::of({{0, -3, 3}, {3, 0, -3}, {-3, 3, 0}});

ExchangeMatrix random_rank3(std::mt19937& rng, int max_weight) {
    std::uniform_int_distribution<int> weight(1, max_weight);
    std::uniform_int_distribution<int> coin(0, 1);
    IntMatrix m(3);
    const std::pair<int, int> edges[] = {{1, 2}, {1, 3}, {2, 3}};
    for (auto [i, j] : edges) {
        int w = weight(rng) * (coin(rng) ? 1 : -1);
        m.at(i, j) = w;
        m.at(j, i) = -w;
    }
    return ExchangeMatrix::validate(m);
}

}  // namespace

TEST_CASE("initial seed carries identity C and G") {
    SeedState s = initial_seed(kB0);
    CHECK(s.c == IntMatrix::identity(3));
    CHECK(s.g == IntMatrix::identity(3));
    CHECK(s.history.empty());
}

TEST_CASE("column_sign: strict signs, zero and mixed columns") {
    CHECK(column_sign(IntMatrix::of({{1, 0}, {3, -1}}), 1) == 1);
    CHECK(column_sign(IntMatrix::of({{1, 0}, {3, -1}}), 2) == -1);
    CHECK(column_sign(IntMatrix::of({{1, 0}, {0, 1}}), 1) == 1);
    CHECK_THROWS_AS(column_sign(IntMatrix::of({{0, 1}, {0, 1}}), 1), ZeroColumn);
    CHECK_THROWS_AS(column_sign(IntMatrix::of({{1, 0}, {-1, 1}}), 1), MixedSignColumn);
}

TEST_CASE("golden C/G chain along [2,3,1,2,1]") {
    SeedState s = initial_seed(kB0);
    int eps = 0;

    s = mutate_seed(s, 2, &eps);
    CHECK(eps == 1);
    CHECK(s.c == IntMatrix::of({{1, 0, 0}, {3, -1, 0}, {0, 0, 1}}));
    CHECK(s.g == IntMatrix::of({{1, 3, 0}, {0, -1, 0}, {0, 0, 1}}));

    s = mutate_seed(s, 3, &eps);
    CHECK(eps == 1);
    CHECK(s.c == IntMatrix::of({{1, 0, 0}, {3, -1, 0}, {6, 0, -1}}));
    CHECK(s.g == IntMatrix::of({{1, 3, 6}, {0, -1, 0}, {0, 0, -1}}));

    s = mutate_seed(s, 1, &eps);
    CHECK(eps == 1);
    CHECK(s.c == IntMatrix::of({{-1, 0, 6}, {-3, -1, 18}, {-6, 0, 35}}));
    CHECK(s.g == IntMatrix::of({{35, 3, 6}, {0, -1, 0}, {-6, 0, -1}}));

    // The fourth step is the interesting one: its pre-mutation C-column is
    // negative, so epsilon = -1. A +1 here produces a visibly different G.
    s = mutate_seed(s, 2, &eps);
    CHECK(eps == -1);
    CHECK(s.g == IntMatrix::of({{35, 522, 6}, {0, 1, 0}, {-6, -90, -1}}));

    s = mutate_seed(s, 1, &eps);
    CHECK(s.g == IntMatrix::of({{7795, 522, 6}, {15, 1, 0}, {-1344, -90, -1}}));
    CHECK(s.history == MutationSequence{2, 3, 1, 2, 1});
}

TEST_CASE("replay equals the fold of mutate_seed") {
    SeedState direct = replay(kB0, {2, 3, 1});
    SeedState folded = mutate_seed(mutate_seed(mutate_seed(initial_seed(kB0), 2), 3), 1);
    CHECK(direct == folded);
}

TEST_CASE("replay accepts non-reduced words; mutation cancels") {
    SeedState s = replay(kB0, {2, 2});
    CHECK(s.b == kB0);
    CHECK(s.c == IntMatrix::identity(3));
    CHECK(s.g == IntMatrix::identity(3));
    CHECK(s.history == MutationSequence{2, 2});
    CHECK_THROWS_AS(replay(kB0, {2, 4}), IndexOutOfRange);
}

TEST_CASE("duality: G is the transposed inverse of C everywhere (randomized)") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> vertex(1, 3);
    std::uniform_int_distribution<int> len(0, 8);
    for (int trial = 0; trial < 200; ++trial) {
        ExchangeMatrix b = random_rank3(rng, 6);
        MutationSequence w;
        int steps = len(rng);
        while (static_cast<int>(w.size()) < steps) {
            int k = vertex(rng);
            if (!w.empty() && w.back() == k) continue;
            w.push_back(k);
        }
        SeedState s = replay(b, w);
        CHECK(g_from_c(s.c) == s.g);
        Int det = determinant(s.c);
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("g_from_c rejects non-unimodular input") {
    CHECK_THROWS_AS(g_from_c(IntMatrix::of({{2, 0}, {0, 1}})), NotUnimodular);
}

TEST_CASE("seed mutation is an involution on (B, C, G)") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> vertex(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        ExchangeMatrix b = random_rank3(rng, 9);
        SeedState s0 = initial_seed(b);
        int k = vertex(rng);
        SeedState s2 = mutate_seed(mutate_seed(s0, k), k);
        CHECK(s2.b == s0.b);
        CHECK(s2.c == s0.c);
        CHECK(s2.g == s0.g);
        CHECK(s2.history == MutationSequence{k, k});
    }
}
