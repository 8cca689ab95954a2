#include <gtest/gtest.h>

#include <set>

#include "tamari/error.hpp"
#include "tamari/intervals.hpp"

using namespace tamari;

namespace {

const BinaryTree kLeaf = BinaryTree::leaf();
const BinaryTree kNode = BinaryTree::node(kLeaf, kLeaf);
const BinaryTree kTa = BinaryTree::node(kLeaf, kNode);  // right comb
const BinaryTree kTb = BinaryTree::node(kNode, kLeaf);  // left comb

std::size_t count_if_all(int n, bool (*pred)(const TamariInterval&)) {
    std::size_t c = 0;
    for (const auto& i : enumerate_intervals(n)) c += pred(i) ? 1 : 0;
    return c;
}

}  // namespace

TEST(Intervals, MakeInterval) {
    EXPECT_NO_THROW(make_interval(kTb, kTa));
    EXPECT_THROW(make_interval(kTa, kTb), Error);
    EXPECT_THROW(make_interval(kNode, kTa), Error);
    try {
        make_interval(kTa, kTb);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAnInterval);
    }
}

TEST(Intervals, AllPairsBruteForce) {
    const auto trees = enumerate_binary_trees(4);
    int valid = 0;
    for (const auto& a : trees) {
        for (const auto& b : trees) {
            try {
                make_interval(a, b);
                ++valid;
            } catch (const Error&) {
            }
        }
    }
    EXPECT_EQ(valid, 68);
}

TEST(Intervals, EnumerationSizes) {
    EXPECT_EQ(enumerate_intervals(1).size(), 1u);
    EXPECT_EQ(enumerate_intervals(2).size(), 3u);
    EXPECT_EQ(enumerate_intervals(5).size(), 399u);
    std::set<std::string> seen;
    for (const auto& i : enumerate_intervals(5)) seen.insert(i.to_string());
    EXPECT_EQ(seen.size(), 399u);
}

TEST(Intervals, ParseAndPrint) {
    const auto i = TamariInterval::parse("UDUD|UUDD");
    EXPECT_EQ(i.lower(), kTb);
    EXPECT_EQ(i.upper(), kTa);
    EXPECT_EQ(i.to_string(), "UDUD|UUDD");
    EXPECT_THROW(TamariInterval::parse("UDUD"), Error);
    EXPECT_THROW(TamariInterval::parse("UUDD|UDUD"), Error);
}

TEST(Intervals, Duality) {
    const auto ba = make_interval(kTb, kTa);
    EXPECT_EQ(dual_interval(ba), ba);
    EXPECT_TRUE(is_self_dual(ba));
    const auto aa = make_interval(kTa, kTa);
    EXPECT_EQ(dual_interval(aa), make_interval(kTb, kTb));
    EXPECT_FALSE(is_self_dual(aa));
    EXPECT_EQ(count_if_all(2, is_self_dual), 1u);
    EXPECT_EQ(count_if_all(4, is_self_dual), 4u);
    for (const auto& i : enumerate_intervals(5)) EXPECT_EQ(dual_interval(dual_interval(i)), i);
}

TEST(Intervals, RiseAndDerise) {
    const auto one = enumerate_intervals(1)[0];
    const auto [lo, up] = rise(one);
    EXPECT_EQ(lo, kTb);
    EXPECT_EQ(up, kTa);
    EXPECT_EQ(derise(make_interval(kTb, kTa)), one);
    EXPECT_THROW(derise(make_interval(kTa, kTa)), Error);
    for (const auto& i : enumerate_intervals(5)) {
        if (!is_modern(i)) continue;
        const auto [l, u] = rise(i);
        EXPECT_EQ(derise(make_interval(l, u)), i);
    }
}

TEST(Intervals, JointCanopy) {
    const auto ba = make_interval(kTb, kTa);
    EXPECT_EQ(joint_canopy(ba), (JointCanopy{CanopyType::S11, CanopyType::M10, CanopyType::S00}));
    EXPECT_EQ(canopy_type_counts(ba), (CanopyCounts{1, 1, 1}));
    EXPECT_EQ(canopy_type_counts(make_interval(kTa, kTa)), (CanopyCounts{2, 1, 0}));
    for (const auto& i : enumerate_intervals(6)) {
        const auto c = canopy_type_counts(i);
        EXPECT_EQ(c.s11 + c.s00 + c.m10, i.size() + 1);
        const auto cl = canopy(i.lower());
        const auto cu = canopy(i.upper());
        for (std::size_t k = 0; k < cl.size(); ++k) EXPECT_FALSE(cu[k] == 0 && cl[k] == 1);
    }
}

TEST(Intervals, BiLengths) {
    EXPECT_EQ(bi_length_vector(enumerate_intervals(1)[0]), (std::vector<std::pair<int, int>>{{1, 0}, {0, 1}}));
    EXPECT_EQ(bi_length_vector(make_interval(kTb, kTa)), (std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {0, 1}}));
}

TEST(Intervals, FamiliesAtSmallSizes) {
    std::vector<std::string> sync;
    for (const auto& i : enumerate_intervals(2)) {
        if (is_synchronized(i)) sync.push_back(i.to_string());
    }
    EXPECT_EQ(sync.size(), 2u);
    EXPECT_EQ(count_if_all(3, is_modern), 12u);
    EXPECT_EQ(count_if_all(3, is_kreweras), 12u);
    EXPECT_EQ(count_if_all(3, is_infinitely_modern), 12u);
    EXPECT_EQ(count_if_all(3, is_synchronized), 6u);
    EXPECT_EQ(count_if_all(3, is_trivial), 5u);
}

TEST(Intervals, TrivialIntervalsAreSynchronizedAndKreweras) {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& t : enumerate_binary_trees(n)) {
            const auto i = make_interval(t, t);
            EXPECT_TRUE(is_synchronized(i));
            EXPECT_TRUE(is_kreweras(i));
        }
    }
}

TEST(Intervals, BalancedTrivialIntervalIsNotModern) {
    // Upper arc [0,1] ends one unit before lower arc [2,3] starts: a 1-gap.
    const auto i = TamariInterval::parse("UDUUDD|UDUUDD");
    EXPECT_TRUE(is_trivial(i));
    EXPECT_FALSE(separated_pairs(i, 1).empty());
    EXPECT_FALSE(is_modern(i));
    EXPECT_FALSE(is_infinitely_modern(i));
}

TEST(Intervals, SeparatedPairsMatchRepeatedRises) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& i : enumerate_intervals(n)) {
            EXPECT_EQ(separated_pairs(i, 1).empty(), is_modern(i));
            EXPECT_EQ(is_infinitely_modern(i), is_infinitely_modern_by_rising(i));
            EXPECT_EQ(is_k_modern(i, 1), is_modern(i));
        }
    }
}

TEST(Intervals, NewIntervalsAreRisesOfModernOnes) {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> rises;
        for (const auto& i : enumerate_intervals(n)) {
            if (!is_modern(i)) continue;
            const auto [l, u] = rise(i);
            rises.insert(make_interval(l, u).to_string());
        }
        std::set<std::string> fresh;
        for (const auto& i : enumerate_intervals(n + 1)) {
            if (is_new(i)) fresh.insert(i.to_string());
        }
        EXPECT_EQ(rises, fresh);
    }
}

TEST(Intervals, KrewerasMap) {
    EXPECT_EQ(iota(kTa), (NonCrossingPartition{{1, 2}}));
    EXPECT_EQ(iota(kTb), (NonCrossingPartition{{1}, {2}}));
    for (const auto& t : enumerate_binary_trees(6)) EXPECT_TRUE(is_non_crossing(iota(t)));
    EXPECT_TRUE(refines({{1}, {2}}, {{1, 2}}));
    EXPECT_FALSE(refines({{1, 2}}, {{1}, {2}}));
    EXPECT_FALSE(is_non_crossing({{1, 3}, {2, 4}}));
}
