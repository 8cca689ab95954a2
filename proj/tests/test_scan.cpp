#include <gtest/gtest.h>

#include "tamari/error.hpp"
#include "tamari/scan.hpp"

using namespace tamari;

TEST(Scan, ParallelEnumerationMatchesSerial) {
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_intervals_parallel(n), enumerate_intervals(n));
}

TEST(Scan, ParallelTallyMatchesSerial) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(tally_parallel(n), tally_serial(n));
}

TEST(Scan, TallyAtSizeTwo) {
    const Tally t = tally(2);
    EXPECT_EQ(t.total, 3u);
    EXPECT_EQ(t.family.at(Family::General), 3u);
    EXPECT_EQ(t.family.at(Family::Synchronized), 2u);
    EXPECT_EQ(t.family.at(Family::Modern), 3u);
    EXPECT_EQ(t.family.at(Family::Kreweras), 3u);
    EXPECT_EQ(t.self_dual.at(Family::General), 1u);
}

TEST(Scan, TallyMatchesFormulas) {
    for (int n = 1; n <= 6; ++n) {
        const Tally t = tally(n);
        for (Family f : kAllFamilies) {
            const std::uint64_t brute = t.family.count(f) ? t.family.at(f) : 0;
            EXPECT_EQ(BigInt(brute), count(f, n)) << family_name(f) << " n=" << n;
            const std::uint64_t sd = t.self_dual.count(f) ? t.self_dual.at(f) : 0;
            EXPECT_EQ(BigInt(sd), count_self_dual(f, n)) << family_name(f) << " n=" << n;
        }
    }
    EXPECT_EQ(tally(5).total, 399u);
    EXPECT_EQ(tally(6).family.at(Family::Kreweras), 1428u);
    EXPECT_EQ(tally(6).family.at(Family::InfinitelyModern), 1428u);
}

TEST(Scan, TallyRespectsCap) {
    EXPECT_THROW(tally(9), Error);
}

TEST(Scan, Classify) {
    const auto c = classify(TamariInterval::parse("UDUD|UUDD"));
    EXPECT_TRUE(c.family.at(Family::General));
    EXPECT_FALSE(c.family.at(Family::Synchronized));
    EXPECT_TRUE(c.family.at(Family::Modern));
    EXPECT_TRUE(c.self_dual);
    EXPECT_FALSE(c.trivial);
    EXPECT_EQ(c.canopy, (CanopyCounts{1, 1, 1}));
}
