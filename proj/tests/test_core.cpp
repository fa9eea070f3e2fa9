#include <gtest/gtest.h>

#include <set>

#include "phc/core.hpp"

using namespace phc;

namespace {

std::vector<std::vector<int>> member_lists(const Qss& q) {
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < q.size(); ++i) out.push_back(q[i].members());
    return out;
}

} // namespace

TEST(PositionSet, MembersAndBounds) {
    const auto s = PositionSet::from_members(5, {2, 4, 5});
    EXPECT_EQ(s.size(), 3);
    EXPECT_EQ(s.front(), 2);
    EXPECT_EQ(s.back(), 5);
    EXPECT_TRUE(s.contains(4));
    EXPECT_FALSE(s.contains(3));
    EXPECT_EQ(s.members(), (std::vector<int>{2, 4, 5}));
    EXPECT_TRUE(PositionSet::full(3).is_full());
    EXPECT_TRUE(PositionSet(0).is_full());
}

TEST(PositionSet, RejectsOutOfRangeMembers) {
    EXPECT_THROW(PositionSet::from_members(3, {0}), std::invalid_argument);
    EXPECT_THROW(PositionSet::from_members(3, {4}), std::invalid_argument);
    EXPECT_THROW(PositionSet(65), std::length_error);
    EXPECT_NO_THROW(PositionSet::full(64));
}

TEST(Compositions, SmallCases) {
    const auto c0 = compositions_of(0);
    ASSERT_EQ(c0.size(), 1U);
    EXPECT_EQ(c0[0].length(), 0U);

    const auto c3 = compositions_of(3);
    const std::vector<Composition> want = {{1, 1, 1}, {1, 2}, {2, 1}, {3}};
    EXPECT_EQ(c3, want);
    EXPECT_EQ(compositions_of(5).size(), 16U);
}

TEST(Compositions, CountIsPowerOfTwo) {
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(compositions_of(n).size(), std::size_t{1} << (n - 1)) << n;
}

TEST(Compositions, RejectsZeroParts) {
    EXPECT_THROW(Composition({2, 0, 1}), std::invalid_argument);
}

TEST(CumulativeSumSet, Examples) {
    EXPECT_EQ(cumulative_sum_set(Composition{2, 1}).members(), (std::vector<int>{2}));
    EXPECT_TRUE(cumulative_sum_set(Composition{4}).empty());
    EXPECT_EQ(cumulative_sum_set(Composition::ones(4)).members(), (std::vector<int>{1, 2, 3}));
    try {
        cumulative_sum_set(Composition{});
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("undefined for empty composition"), std::string::npos);
    }
}

TEST(CompositionFromSplits, Examples) {
    EXPECT_EQ(composition_from_splits(std::vector<int>{2}, 3), (Composition{2, 1}));
    EXPECT_EQ(composition_from_splits(std::vector<int>{}, 4), (Composition{4}));
    EXPECT_EQ(composition_from_splits(std::vector<int>{1, 2, 3}, 4), Composition::ones(4));
    try {
        composition_from_splits(std::vector<int>{3}, 3);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("invalid split point"), std::string::npos);
    }
    EXPECT_THROW(composition_from_splits(std::vector<int>{0}, 3), std::invalid_argument);
}

TEST(CompositionFromSplits, RoundTrip) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& a : compositions_of(n)) EXPECT_EQ(composition_from_splits(cumulative_sum_set(a), n), a);
}

TEST(CompositionLeq, Examples) {
    EXPECT_TRUE(composition_leq({2, 1}, {1, 1, 1}));
    for (const auto& a : compositions_of(3)) EXPECT_TRUE(composition_leq({3}, a));
    EXPECT_FALSE(composition_leq({1, 2}, {2, 1}));
    try {
        composition_leq({2}, {1, 2});
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("incomparable sizes"), std::string::npos);
    }
}

TEST(CompositionLeq, IsPartialOrder) {
    for (int n = 1; n <= 6; ++n) {
        const auto all = compositions_of(n);
        for (const auto& a : all) {
            EXPECT_TRUE(composition_leq(a, a));
            for (const auto& b : all) {
                if (composition_leq(a, b) && composition_leq(b, a)) EXPECT_EQ(a, b);
                for (const auto& c : all)
                    if (composition_leq(a, b) && composition_leq(b, c)) EXPECT_TRUE(composition_leq(a, c));
            }
        }
    }
}

TEST(Merges, Examples) {
    EXPECT_TRUE(merges({2, 1}, 1, 2));
    EXPECT_FALSE(merges({2, 1}, 2, 3));
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) EXPECT_FALSE(merges(Composition::ones(4), i, j));
    EXPECT_TRUE(merges({3}, 1, 3));
    try {
        merges({3}, 2, 2);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("indices not ordered"), std::string::npos);
    }
    EXPECT_THROW(merges({3}, 1, 4), std::invalid_argument);
}

TEST(Merges, BlocksAreConvex) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : compositions_of(n))
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int m = i + 1; m < j; ++m)
                        if (merges(a, i, j)) {
                            EXPECT_TRUE(merges(a, i, m));
                            EXPECT_TRUE(merges(a, m, j));
                        }
}

TEST(Covers, Examples) {
    auto one = enumerate_covers(1, {1, 1});
    auto q = one.next();
    ASSERT_TRUE(q);
    EXPECT_EQ(member_lists(*q), (std::vector<std::vector<int>>{{1}, {1}}));
    EXPECT_FALSE(one.next());

    EXPECT_EQ(enumerate_covers(3, {1, 2}).count_remaining(), 3U);
    EXPECT_EQ(enumerate_covers(2, {1}).count_remaining(), 0U);
    EXPECT_EQ(enumerate_covers(0, std::vector<int>{}).count_remaining(), 1U);
}

TEST(Covers, LexicographicOrder) {
    auto s = enumerate_covers(3, {1, 2});
    std::vector<std::vector<std::vector<int>>> got;
    while (auto q = s.next()) got.push_back(member_lists(*q));
    const std::vector<std::vector<std::vector<int>>> want = {{{1}, {2, 3}}, {{2}, {1, 3}}, {{3}, {1, 2}}};
    EXPECT_EQ(got, want);
}

// Every tuple of subsets of the given sizes, filtered by union, against the
// stream.
TEST(Covers, MatchBruteForce) {
    const std::vector<std::vector<int>> size_lists = {{1}, {2}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {2, 1, 2}, {3, 2}, {1, 1, 1, 1}, {2, 3, 1}};
    for (int n = 0; n <= 5; ++n)
        for (const auto& sizes : size_lists) {
            std::set<std::vector<std::uint64_t>> brute;
            std::vector<std::uint64_t> cur;
            const std::uint64_t total = std::uint64_t{1} << n;
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == sizes.size()) {
                    std::uint64_t u = 0;
                    for (auto m : cur) u |= m;
                    if (u == total - 1) brute.insert(cur);
                    return;
                }
                for (std::uint64_t m = 0; m < total; ++m)
                    if (std::popcount(m) == sizes[i]) {
                        cur.push_back(m);
                        self(self, i + 1);
                        cur.pop_back();
                    }
            };
            rec(rec, 0);

            auto stream = enumerate_covers(n, std::span<const int>(sizes));
            std::set<std::vector<std::uint64_t>> got;
            std::size_t emitted = 0;
            while (const auto* masks = stream.next_masks()) {
                ++emitted;
                got.insert(*masks);
            }
            EXPECT_EQ(emitted, got.size()) << "duplicates for n=" << n;
            EXPECT_EQ(got, brute) << "n=" << n;
        }
}

TEST(Qss, ValidatesCovering) {
    EXPECT_NO_THROW(Qss::from_lists(3, {{1}, {2, 3}}));
    EXPECT_THROW(Qss::from_lists(3, {{1}, {2}}), std::invalid_argument);
    EXPECT_EQ(Qss::from_lists(5, {{1, 2}, {3}, {4, 5}}).to_string(), "({1 2},{3},{4 5})");
}
