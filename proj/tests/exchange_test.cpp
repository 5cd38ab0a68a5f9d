#include <mutlab/errors.hpp>
#include <mutlab/exchange.hpp>

#include <doctest.h>

#include <random>
#include <vector>

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

TEST_CASE("is_reduced and sequence_to_string") {
    CHECK(is_reduced({}));
    CHECK(is_reduced({2}));
    CHECK(is_reduced({2, 3, 2}));
    CHECK_FALSE(is_reduced({2, 2}));
    CHECK_FALSE(is_reduced({1, 2, 2, 3}));
    CHECK(sequence_to_string({2, 3, 1}) == "[2,3,1]");
    CHECK(sequence_to_string({}) == "[]");
}

TEST_CASE("validate accepts skew-symmetric and rejects the rest") {
    CHECK(kB0.rank() == 3);
    CHECK(kB0.b(1, 2) == -3);
    CHECK_THROWS_AS(ExchangeMatrix::of({{0, 1}, {1, 0}}), NotSkewSymmetric);
    CHECK_THROWS_AS(ExchangeMatrix::of({{1, 0}, {0, 1}}), NotSkewSymmetric);
    CHECK_THROWS_AS(ExchangeMatrix::validate(IntMatrix::from_rows(
                        {{Int(0), Int(1)}, {Int(-1), Int(0)}, {Int(0), Int(0)}})),
                    NotSquare);
}

TEST_CASE("cycle builds the oriented 3-cycle 1->2->3->1") {
    ExchangeMatrix b = ExchangeMatrix::cycle(2, 2, 3);
    CHECK(b.b(1, 2) == 2);
    CHECK(b.b(2, 3) == 2);
    CHECK(b.b(3, 1) == 3);
    CHECK(b.b(2, 1) == -2);
    CHECK(is_cyclic_rank3(b));
}

TEST_CASE("mutation reproduces the printed B chain") {
    ExchangeMatrix b2 = mutate(kB0, 2);
    CHECK(b2 == ExchangeMatrix::of({{0, 3, -6}, {-3, 0, 3}, {6, -3, 0}}));
    ExchangeMatrix b23 = mutate(b2, 3);
    CHECK(b23 == ExchangeMatrix::of({{0, -15, 6}, {15, 0, -3}, {-6, 3, 0}}));
    ExchangeMatrix b231 = mutate(b23, 1);
    CHECK(b231 == ExchangeMatrix::of({{0, 15, -6}, {-15, 0, 87}, {6, -87, 0}}));
}

TEST_CASE("mutation is an involution (randomized)") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> vertex(1, 3);
    for (int trial = 0; trial < 300; ++trial) {
        ExchangeMatrix b = random_rank3(rng, 9);
        int k = vertex(rng);
        CHECK(mutate(mutate(b, k), k) == b);
    }
}

TEST_CASE("mutate validates the vertex index") {
    CHECK_THROWS_AS(mutate(kB0, 0), IndexOutOfRange);
    CHECK_THROWS_AS(mutate(kB0, 4), IndexOutOfRange);
}

TEST_CASE("apply_sequence folds left to right") {
    CHECK(apply_sequence(kB0, {}) == kB0);
    CHECK(apply_sequence(kB0, {2, 3, 1}) == mutate(mutate(mutate(kB0, 2), 3), 1));
    CHECK(apply_sequence(kB0, {2, 2}) == kB0);
}

TEST_CASE("is_cyclic_rank3 reads the orientation") {
    CHECK(is_cyclic_rank3(kB0));
    ExchangeMatrix acyclic = ExchangeMatrix::of({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}});
    CHECK_FALSE(is_cyclic_rank3(acyclic));
    ExchangeMatrix degenerate = ExchangeMatrix::of({{0, 0, 1}, {0, 0, 1}, {-1, -1, 0}});
    CHECK_FALSE(is_cyclic_rank3(degenerate));
    CHECK_THROWS_AS(
        is_cyclic_rank3(ExchangeMatrix::of({{0, 1}, {-1, 0}})), WrongRank);
}

TEST_CASE("enumerator yields depth-first lexicographic order") {
    auto all = enumerate_reduced(3, 2);
    std::vector<MutationSequence> expected = {
        {1}, {1, 2}, {1, 3}, {2}, {2, 1}, {2, 3}, {3}, {3, 1}, {3, 2}};
    CHECK(all == expected);
}

TEST_CASE("enumerator counts match 3 * 2^(t-1) per length") {
    for (int depth : {1, 2, 3, 4, 6}) {
        long long expected = 0;
        for (int t = 1; t <= depth; ++t) expected += 3LL << (t - 1);
        CHECK(static_cast<long long>(enumerate_reduced(3, depth).size()) == expected);
    }
}

TEST_CASE("enumerator with fixed first index") {
    auto all = enumerate_reduced(3, 2, 2);
    std::vector<MutationSequence> expected = {{2}, {2, 1}, {2, 3}};
    CHECK(all == expected);
    CHECK_THROWS_AS(enumerate_reduced(3, 2, 5), IndexOutOfRange);
}

TEST_CASE("enumerator restarted from a prefix yields the prefix subtree") {
    ReducedSequenceEnumerator en(3, 4, MutationSequence{2, 3});
    std::vector<MutationSequence> got;
    while (auto w = en.next()) got.push_back(*w);
    std::vector<MutationSequence> expected = {
        {2, 3}, {2, 3, 1}, {2, 3, 1, 2}, {2, 3, 1, 3}, {2, 3, 2}, {2, 3, 2, 1},
        {2, 3, 2, 3}};
    CHECK(got == expected);
}

TEST_CASE("every enumerated sequence is reduced, none repeats") {
    auto all = enumerate_reduced(3, 5);
    for (const auto& w : all) CHECK(is_reduced(w));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] != all[i]);
}
