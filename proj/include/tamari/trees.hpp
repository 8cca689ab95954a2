#pragma once

// Binary trees, their integer-vector encodings, the Tamari order and the
// Dyck-walk correspondence.
//
// Nodes are labeled 1..n in infix order and leaves sit at abscissas 0..n
// from left to right. Labels are never stored; every encoding recomputes
// them from the shape.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tamari {

using IntVector = std::vector<int>;

class BinaryTree {
public:
    /// The leaf.
    BinaryTree() = default;

    static BinaryTree leaf() { return {}; }
    static BinaryTree node(BinaryTree left, BinaryTree right);

    bool is_leaf() const noexcept { return node_ == nullptr; }
    int size() const noexcept;

    // Precondition: !is_leaf().
    const BinaryTree& left() const;
    const BinaryTree& right() const;

    friend bool operator==(const BinaryTree& a, const BinaryTree& b);
    friend bool operator!=(const BinaryTree& a, const BinaryTree& b) { return !(a == b); }

    /// Parenthesized form, e.g. "((e,e),e)".
    std::string to_string() const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

struct BinaryTree::Node {
    BinaryTree left;
    BinaryTree right;
    int size;
};

inline int BinaryTree::size() const noexcept { return node_ ? node_->size : 0; }
inline const BinaryTree& BinaryTree::left() const { return node_->left; }
inline const BinaryTree& BinaryTree::right() const { return node_->right; }

constexpr int kDefaultTreeCap = 12;

/// All Catalan(n) trees of size n, in a fixed deterministic order.
std::vector<BinaryTree> enumerate_binary_trees(int n, int cap = kDefaultTreeCap);

std::size_t catalan_small(int n);

BinaryTree mirror(const BinaryTree& t);

/// a_i = size of the right subtree of infix node i.
IntVector bracket_vector(const BinaryTree& t);
/// b_i = size of the left subtree of infix node i.
IntVector dual_bracket_vector(const BinaryTree& t);

/// Inverse of bracket_vector; throws InvalidBracketVector.
BinaryTree tree_from_bracket_vector(const IntVector& v);
BinaryTree tree_from_dual_bracket_vector(const IntVector& v);

/// d(T)_k = number of nodes on the maximal left branch ending at leaf k.
IntVector degree_vector(const BinaryTree& t);
/// d(T)_k = number of nodes on the maximal right branch ending at leaf k.
/// Positionally this equals reverse(degree_vector(mirror(t))).
IntVector dual_degree_vector(const BinaryTree& t);

/// Bit k is 1 iff leaf k is a left child.
std::vector<int> canopy(const BinaryTree& t);

struct Arc {
    int left;
    int right;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// One arc per node in infix order: (leftmost leaf, rightmost leaf) of its subtree.
std::vector<Arc> smooth_arcs(const BinaryTree& t);

/// T <= T' in the Tamari order (componentwise bracket-vector domination).
bool tamari_leq(const BinaryTree& lower, const BinaryTree& upper);

/// All trees covering t by one right rotation ((A,B),C) -> (A,(B,C)).
std::vector<BinaryTree> right_rotations(const BinaryTree& t);

/// Dyck walk over {U, D}: Leaf -> "", (L,R) -> dyck(L) U dyck(R) D.
std::string dyck_from_tree(const BinaryTree& t);
BinaryTree tree_from_dyck(std::string_view word);
void validate_dyck(std::string_view word);

/// c_0 = returns to height 0; c_i = returns to the height reached right after
/// the i-th up step before the walk first drops below it.
IntVector contact_vector(std::string_view word);
/// d_0 = 0; d_i = run of down steps immediately following the i-th up step.
IntVector descent_vector(std::string_view word);

}  // namespace tamari
