#include <gtest/gtest.h>

#include <set>

#include "tamari/error.hpp"
#include "tamari/trees.hpp"

using namespace tamari;

namespace {

const BinaryTree kLeaf = BinaryTree::leaf();
const BinaryTree kNode = BinaryTree::node(kLeaf, kLeaf);
const BinaryTree kRightComb = BinaryTree::node(kLeaf, kNode);  // (e,(e,e))
const BinaryTree kLeftComb = BinaryTree::node(kNode, kLeaf);   // ((e,e),e)

// Independent oracle: Tamari order as the reflexive-transitive closure of right rotations.
std::set<std::string> reachable(const BinaryTree& t) {
    std::set<std::string> seen{t.to_string()};
    std::vector<BinaryTree> stack{t};
    while (!stack.empty()) {
        const BinaryTree cur = stack.back();
        stack.pop_back();
        for (const auto& next : right_rotations(cur)) {
            if (seen.insert(next.to_string()).second) stack.push_back(next);
        }
    }
    return seen;
}

}  // namespace

TEST(Trees, EnumerationSizes) {
    ASSERT_EQ(enumerate_binary_trees(0).size(), 1u);
    EXPECT_TRUE(enumerate_binary_trees(0)[0].is_leaf());
    const auto two = enumerate_binary_trees(2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_NE(std::find(two.begin(), two.end(), kLeftComb), two.end());
    EXPECT_NE(std::find(two.begin(), two.end(), kRightComb), two.end());
    EXPECT_EQ(enumerate_binary_trees(8).size(), 1430u);
}

TEST(Trees, EnumerationIsDistinctAndMatchesCatalan) {
    for (int n = 0; n <= 7; ++n) {
        std::set<std::string> seen;
        for (const auto& t : enumerate_binary_trees(n)) {
            EXPECT_EQ(t.size(), n);
            seen.insert(t.to_string());
        }
        EXPECT_EQ(seen.size(), catalan_small(n));
    }
}

TEST(Trees, Mirror) {
    EXPECT_TRUE(mirror(kLeaf).is_leaf());
    EXPECT_EQ(mirror(kRightComb), kLeftComb);
    for (const auto& t : enumerate_binary_trees(6)) EXPECT_EQ(mirror(mirror(t)), t);
}

TEST(Trees, BracketVectors) {
    EXPECT_EQ(bracket_vector(kRightComb), (IntVector{1, 0}));
    EXPECT_EQ(dual_bracket_vector(kRightComb), (IntVector{0, 0}));
    EXPECT_EQ(bracket_vector(kLeftComb), (IntVector{0, 0}));
    EXPECT_EQ(dual_bracket_vector(kLeftComb), (IntVector{0, 1}));
    EXPECT_EQ(tree_from_bracket_vector({1, 0}), kRightComb);
    EXPECT_EQ(tree_from_bracket_vector({0, 0}), kLeftComb);
}

TEST(Trees, BracketVectorDecodingMatchesImageSet) {
    std::set<IntVector> image;
    for (const auto& t : enumerate_binary_trees(3)) image.insert(bracket_vector(t));
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
            for (int c = 0; c <= 2; ++c) {
                const IntVector v{a, b, c};
                if (image.count(v)) {
                    EXPECT_EQ(bracket_vector(tree_from_bracket_vector(v)), v);
                } else {
                    EXPECT_THROW(tree_from_bracket_vector(v), Error);
                }
            }
        }
    }
    EXPECT_NO_THROW(tree_from_bracket_vector({2, 0, 0}));
    EXPECT_THROW(tree_from_bracket_vector({0, 2, 0}), Error);
}

TEST(Trees, BracketVectorRoundTrips) {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& t : enumerate_binary_trees(n)) {
            EXPECT_EQ(tree_from_bracket_vector(bracket_vector(t)), t);
            EXPECT_EQ(tree_from_dual_bracket_vector(dual_bracket_vector(t)), t);
        }
    }
}

TEST(Trees, DegreeVectorsAndCanopy) {
    EXPECT_EQ(degree_vector(kRightComb), (IntVector{1, 1, 0}));
    EXPECT_EQ(degree_vector(kLeftComb), (IntVector{2, 0, 0}));
    EXPECT_EQ(dual_degree_vector(kLeftComb), (IntVector{0, 1, 1}));
    EXPECT_EQ(canopy(kRightComb), (std::vector<int>{1, 1, 0}));
    EXPECT_EQ(canopy(kLeftComb), (std::vector<int>{1, 0, 0}));
    for (const auto& t : enumerate_binary_trees(6)) {
        const auto d = degree_vector(t);
        const auto c = canopy(t);
        for (std::size_t k = 0; k < c.size(); ++k) EXPECT_EQ(c[k], d[k] > 0 ? 1 : 0);
    }
}

TEST(Trees, SmoothArcs) {
    EXPECT_EQ(smooth_arcs(kNode), (std::vector<Arc>{{0, 1}}));
    auto arcs = smooth_arcs(kRightComb);
    std::sort(arcs.begin(), arcs.end());
    EXPECT_EQ(arcs, (std::vector<Arc>{{0, 2}, {1, 2}}));
}

TEST(Trees, EachUnitSegmentHasOneDeepestCoveringArc) {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& t : enumerate_binary_trees(n)) {
            const auto arcs = smooth_arcs(t);
            std::set<int> chosen;
            for (int s = 1; s <= n; ++s) {
                int best = -1;
                for (int a = 0; a < n; ++a) {
                    if (arcs[a].left <= s - 1 && s <= arcs[a].right &&
                        (best < 0 || arcs[a].right - arcs[a].left < arcs[best].right - arcs[best].left)) {
                        best = a;
                    }
                }
                ASSERT_GE(best, 0);
                chosen.insert(best);
            }
            EXPECT_EQ(static_cast<int>(chosen.size()), n);
        }
    }
}

TEST(Trees, TamariOrderMatchesRotationClosure) {
    EXPECT_TRUE(tamari_leq(kLeftComb, kRightComb));
    EXPECT_FALSE(tamari_leq(kRightComb, kLeftComb));
    EXPECT_THROW(tamari_leq(kNode, kLeftComb), Error);
    for (int n = 1; n <= 5; ++n) {
        const auto trees = enumerate_binary_trees(n);
        for (const auto& a : trees) {
            const auto up = reachable(a);
            for (const auto& b : trees) EXPECT_EQ(tamari_leq(a, b), up.count(b.to_string()) > 0);
        }
    }
}

TEST(Trees, RightRotations) {
    EXPECT_TRUE(right_rotations(kLeaf).empty());
    EXPECT_EQ(right_rotations(kLeftComb), (std::vector<BinaryTree>{kRightComb}));
}

TEST(Trees, DyckWords) {
    EXPECT_EQ(dyck_from_tree(kRightComb), "UUDD");
    EXPECT_EQ(dyck_from_tree(kLeftComb), "UDUD");
    for (const auto& t : enumerate_binary_trees(7)) EXPECT_EQ(tree_from_dyck(dyck_from_tree(t)), t);
    EXPECT_THROW(tree_from_dyck("UDD"), Error);
    EXPECT_THROW(tree_from_dyck("DU"), Error);
    EXPECT_THROW(tree_from_dyck("UXDD"), Error);
}

TEST(Trees, ContactAndDescentVectors) {
    EXPECT_EQ(contact_vector("UUDD"), (IntVector{1, 1, 0}));
    EXPECT_EQ(descent_vector("UUDD"), (IntVector{0, 0, 2}));
    EXPECT_EQ(contact_vector("UDUD"), (IntVector{2, 0, 0}));
    EXPECT_EQ(descent_vector("UDUD"), (IntVector{0, 1, 1}));
    for (int n = 1; n <= 7; ++n) {
        for (const auto& t : enumerate_binary_trees(n)) {
            EXPECT_EQ(contact_vector(dyck_from_tree(t)), degree_vector(t));
            EXPECT_EQ(descent_vector(dyck_from_tree(t)), dual_degree_vector(t));
        }
    }
}
