#include <gtest/gtest.h>

#include <set>

#include "tamari/error.hpp"
#include "tamari/meandering.hpp"

using namespace tamari;

namespace {

const BinaryTree kLeaf = BinaryTree::leaf();
const BinaryTree kNode = BinaryTree::node(kLeaf, kLeaf);
const BinaryTree kTa = BinaryTree::node(kLeaf, kNode);
const BinaryTree kTb = BinaryTree::node(kNode, kLeaf);

// Independent connectivity oracle: repeated edge relaxation.
bool connected_by_relaxation(const MeanderingDiagram& m) {
    std::vector<int> reach(m.size() + 1, 0);
    reach[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [a, b] : underlying_edges(m)) {
            if (reach[a] != reach[b]) {
                reach[a] = reach[b] = 1;
                changed = true;
            }
        }
    }
    return std::count(reach.begin(), reach.end(), 1) == m.size() + 1;
}

}  // namespace

TEST(Meandering, PhiExamples) {
    const auto ba = phi(kTb, kTa);
    EXPECT_EQ(ba.ups(), (std::vector<int>{0, 1}));
    EXPECT_EQ(ba.los(), (std::vector<int>{1, 2}));
    const auto aa = phi(kTa, kTa);
    EXPECT_EQ(aa.ups(), (std::vector<int>{0, 1}));
    EXPECT_EQ(aa.los(), (std::vector<int>{2, 2}));
    const auto ab = phi(kTa, kTb);
    EXPECT_EQ(ab.ups(), (std::vector<int>{0, 0}));
    EXPECT_EQ(ab.los(), (std::vector<int>{2, 2}));
    EXPECT_THROW(phi(kNode, kTa), Error);
}

TEST(Meandering, PsiInvertsPhi) {
    EXPECT_EQ(psi(MeanderingDiagram({0, 1}, {1, 2})), std::make_pair(kTb, kTa));
    for (int n = 1; n <= 5; ++n) {
        const auto trees = enumerate_binary_trees(n);
        for (const auto& a : trees) {
            for (const auto& b : trees) EXPECT_EQ(psi(phi(a, b)), std::make_pair(a, b));
        }
    }
}

TEST(Meandering, TreesAreExactlyIntervals) {
    EXPECT_TRUE(is_meandering_tree(phi(kTb, kTa)));
    EXPECT_FALSE(is_meandering_tree(phi(kTa, kTb)));
    EXPECT_EQ(flawed_pairs(phi(kTa, kTb)).size(), 1u);
    for (int n = 1; n <= 5; ++n) {
        const auto trees = enumerate_binary_trees(n);
        for (const auto& a : trees) {
            for (const auto& b : trees) {
                const auto m = phi(a, b);
                const bool interval = tamari_leq(a, b);
                EXPECT_EQ(is_meandering_tree(m), interval);
                EXPECT_EQ(connected_by_relaxation(m), interval);
                EXPECT_EQ(flawed_pairs(m).empty(), interval);
            }
        }
    }
}

TEST(Meandering, JsonRoundTrip) {
    const auto m = phi(kTb, kTa);
    EXPECT_EQ(m.to_json(), R"({"n":2,"up":[0,1],"lo":[1,2]})");
    EXPECT_EQ(MeanderingDiagram::from_json(m.to_json()), m);
    EXPECT_THROW(MeanderingDiagram::from_json("{\"n\":2}"), Error);
    EXPECT_THROW(MeanderingDiagram::from_json("not json"), Error);
}

TEST(Meandering, InvalidDiagramsRejected) {
    EXPECT_THROW(MeanderingDiagram({1}, {1}), Error);
    EXPECT_THROW(MeanderingDiagram({0, 1}, {1}), Error);
}

TEST(Meandering, NonKrewerasPairs) {
    const auto one = enumerate_intervals(1)[0];
    EXPECT_TRUE(non_kreweras_pairs(phi(one)).empty());
    for (int n = 1; n <= 6; ++n) {
        for (const auto& i : enumerate_intervals(n)) EXPECT_EQ(non_kreweras_pairs(phi(i)).empty(), is_kreweras(i));
    }
}

TEST(Meandering, HalfTurnIsDuality) {
    const auto ba = phi(kTb, kTa);
    EXPECT_EQ(half_turn(ba), ba);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& i : enumerate_intervals(n)) {
            EXPECT_EQ(half_turn(phi(i)), phi(dual_interval(i)));
            EXPECT_EQ(half_turn(half_turn(phi(i))), phi(i));
        }
    }
}

TEST(Meandering, DegreesMatchDyckVectors) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& i : enumerate_intervals(n)) {
            const auto m = phi(i);
            EXPECT_EQ(upper_degrees(m), contact_vector(dyck_from_tree(i.upper())));
            EXPECT_EQ(lower_degrees(m), descent_vector(dyck_from_tree(i.lower())));
        }
    }
}

TEST(Meandering, Decomposition) {
    const auto single = phi(enumerate_intervals(1)[0]);
    const auto parts = decompose(single);
    EXPECT_EQ(parts.left.size(), 0);
    EXPECT_EQ(parts.right.size(), 0);
    EXPECT_EQ(parts.attach, 0);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& i : enumerate_intervals(n)) {
            const auto m = phi(i);
            const auto d = decompose(m);
            EXPECT_EQ(d.left.size() + d.right.size() + 1, n);
            EXPECT_EQ(compose(d.left, d.right, d.attach), m);
        }
    }
}

TEST(Meandering, CompositionCountsIntervals) {
    const std::vector<std::size_t> expected = {1, 3, 13, 68, 399, 2530};
    for (int n = 1; n <= 6; ++n) {
        const auto built = meandering_trees_by_composition(n);
        std::set<MeanderingDiagram> distinct(built.begin(), built.end());
        EXPECT_EQ(built.size(), expected[n - 1]);
        EXPECT_EQ(distinct.size(), built.size());
        for (const auto& m : built) EXPECT_TRUE(is_meandering_tree(m));
    }
}

TEST(Meandering, ComposeRejectsEnclosedAttachPoint) {
    const auto right = phi(make_interval(kTa, kTa));  // lower arcs reach point 2 from points 1 and 2
    const auto left = MeanderingDiagram();
    const auto free = free_attach_points(right);
    for (int j = 0; j <= right.size(); ++j) {
        if (std::find(free.begin(), free.end(), j) == free.end()) {
            EXPECT_THROW(compose(left, right, j), Error);
        } else {
            EXPECT_NO_THROW(compose(left, right, j));
        }
    }
    EXPECT_THROW(compose(left, right, right.size() + 1), Error);
}
