#include "tamari/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "tamari/error.hpp"

namespace tamari {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidBracketVector: return "InvalidBracketVector";
        case ErrorCode::InvalidDyckWord: return "InvalidDyckWord";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorCode::NotAnInterval: return "NotAnInterval";
        case ErrorCode::NotDerisable: return "NotDerisable";
        case ErrorCode::InvalidDiagram: return "InvalidDiagram";
        case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::InvalidBlossoming: return "InvalidBlossoming";
        case ErrorCode::ClosureOrientationError: return "ClosureOrientationError";
        case ErrorCode::UnsupportedSize: return "UnsupportedSize";
        case ErrorCode::OracleDisagreement: return "OracleDisagreement";
        case ErrorCode::CycleLemmaViolation: return "CycleLemmaViolation";
        case ErrorCode::InvalidSequence: return "InvalidSequence";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
    BinaryTree t;
    const int size = left.size() + right.size() + 1;
    t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), size});
    return t;
}

bool operator==(const BinaryTree& a, const BinaryTree& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.node_->size != b.node_->size) return false;
    return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

std::string BinaryTree::to_string() const {
    if (is_leaf()) return "e";
    return "(" + left().to_string() + "," + right().to_string() + ")";
}

std::size_t catalan_small(int n) {
    std::size_t c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

std::vector<BinaryTree> enumerate_binary_trees(int n, int cap) {
    if (n < 0 || n > cap) {
        throw Error(ErrorCode::SizeCapExceeded,
                    "tree size " + std::to_string(n) + " outside [0, " + std::to_string(cap) + "]");
    }
    // Subtrees are shared between sizes, so the whole table is built once.
    static std::mutex mutex;
    static std::vector<std::vector<BinaryTree>> table{{BinaryTree::leaf()}};
    std::lock_guard lock(mutex);
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        std::vector<BinaryTree> trees;
        trees.reserve(catalan_small(m));
        for (int left = m - 1; left >= 0; --left) {
            for (const auto& l : table[left]) {
                for (const auto& r : table[m - 1 - left]) trees.push_back(BinaryTree::node(l, r));
            }
        }
        table.push_back(std::move(trees));
    }
    return table[n];
}

BinaryTree mirror(const BinaryTree& t) {
    if (t.is_leaf()) return t;
    return BinaryTree::node(mirror(t.right()), mirror(t.left()));
}

namespace {

void fill_subtree_sizes(const BinaryTree& t, IntVector& left_sizes, IntVector& right_sizes) {
    if (t.is_leaf()) return;
    fill_subtree_sizes(t.left(), left_sizes, right_sizes);
    left_sizes.push_back(t.left().size());
    right_sizes.push_back(t.right().size());
    fill_subtree_sizes(t.right(), left_sizes, right_sizes);
}

}  // namespace

IntVector bracket_vector(const BinaryTree& t) {
    IntVector left, right;
    left.reserve(t.size());
    right.reserve(t.size());
    fill_subtree_sizes(t, left, right);
    return right;
}

IntVector dual_bracket_vector(const BinaryTree& t) {
    IntVector left, right;
    left.reserve(t.size());
    right.reserve(t.size());
    fill_subtree_sizes(t, left, right);
    return left;
}

BinaryTree tree_from_bracket_vector(const IntVector& v) {
    const int n = static_cast<int>(v.size());
    for (int x : v) {
        if (x < 0) throw Error(ErrorCode::InvalidBracketVector, "negative bracket entry");
    }
    // Labels lo..hi (1-based) form one subtree; its root is the smallest r with r + a_r = hi.
    std::function<BinaryTree(int, int)> build = [&](int lo, int hi) -> BinaryTree {
        if (lo > hi) return BinaryTree::leaf();
        for (int r = lo; r <= hi; ++r) {
            if (r + v[r - 1] == hi) return BinaryTree::node(build(lo, r - 1), build(r + 1, hi));
        }
        throw Error(ErrorCode::InvalidBracketVector, "no root for label range");
    };
    BinaryTree t = build(1, n);
    if (bracket_vector(t) != v) {
        throw Error(ErrorCode::InvalidBracketVector, "bracket vector violates nesting");
    }
    return t;
}

BinaryTree tree_from_dual_bracket_vector(const IntVector& v) {
    IntVector reversed(v.rbegin(), v.rend());
    return mirror(tree_from_bracket_vector(reversed));
}

namespace {

// Each leaf records the length of the chain of nodes reaching it through
// same-side links (left links for degree_vector, right links for the dual).
void branch_lengths(const BinaryTree& t, int chain, bool follow_left, IntVector& out) {
    if (t.is_leaf()) {
        out.push_back(chain);
        return;
    }
    branch_lengths(t.left(), follow_left ? chain + 1 : 0, follow_left, out);
    branch_lengths(t.right(), follow_left ? 0 : chain + 1, follow_left, out);
}

void leaf_sides(const BinaryTree& t, int is_left, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(is_left);
        return;
    }
    leaf_sides(t.left(), 1, out);
    leaf_sides(t.right(), 0, out);
}

}  // namespace

IntVector degree_vector(const BinaryTree& t) {
    IntVector out;
    out.reserve(t.size() + 1);
    branch_lengths(t, 0, true, out);
    return out;
}

IntVector dual_degree_vector(const BinaryTree& t) {
    IntVector out;
    out.reserve(t.size() + 1);
    branch_lengths(t, 0, false, out);
    return out;
}

std::vector<int> canopy(const BinaryTree& t) {
    std::vector<int> out;
    out.reserve(t.size() + 1);
    if (t.is_leaf()) {
        out.push_back(1);
        return out;
    }
    leaf_sides(t, 1, out);
    return out;
}

std::vector<Arc> smooth_arcs(const BinaryTree& t) {
    const IntVector a = bracket_vector(t);
    const IntVector b = dual_bracket_vector(t);
    std::vector<Arc> arcs;
    arcs.reserve(a.size());
    for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
        arcs.push_back({i - 1 - b[i - 1], i + a[i - 1]});
    }
    return arcs;
}

bool tamari_leq(const BinaryTree& lower, const BinaryTree& upper) {
    if (lower.size() != upper.size()) {
        throw Error(ErrorCode::SizeMismatch, "tamari_leq on trees of different sizes");
    }
    const IntVector a = bracket_vector(lower);
    const IntVector b = bracket_vector(upper);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

std::vector<BinaryTree> right_rotations(const BinaryTree& t) {
    std::vector<BinaryTree> out;
    if (t.is_leaf()) return out;
    if (!t.left().is_leaf()) {
        const auto& l = t.left();
        out.push_back(BinaryTree::node(l.left(), BinaryTree::node(l.right(), t.right())));
    }
    for (auto& l : right_rotations(t.left())) out.push_back(BinaryTree::node(std::move(l), t.right()));
    for (auto& r : right_rotations(t.right())) out.push_back(BinaryTree::node(t.left(), std::move(r)));
    return out;
}

namespace {

void append_dyck(const BinaryTree& t, std::string& out) {
    if (t.is_leaf()) return;
    append_dyck(t.left(), out);
    out.push_back('U');
    append_dyck(t.right(), out);
    out.push_back('D');
}

BinaryTree parse_dyck(std::string_view w) {
    if (w.empty()) return BinaryTree::leaf();
    // W = W1 U W2 D with U..D the last primitive factor.
    int height = 0;
    std::size_t last_zero = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        height += w[i] == 'U' ? 1 : -1;
        if (height == 0) last_zero = i + 1;
    }
    return BinaryTree::node(parse_dyck(w.substr(0, last_zero)),
                            parse_dyck(w.substr(last_zero + 1, w.size() - last_zero - 2)));
}

}  // namespace

std::string dyck_from_tree(const BinaryTree& t) {
    std::string out;
    out.reserve(2 * t.size());
    append_dyck(t, out);
    return out;
}

void validate_dyck(std::string_view word) {
    int height = 0;
    for (char c : word) {
        if (c == 'U') {
            ++height;
        } else if (c == 'D') {
            if (--height < 0) throw Error(ErrorCode::InvalidDyckWord, "Dyck word goes below zero");
        } else {
            throw Error(ErrorCode::InvalidDyckWord, std::string("unexpected character '") + c + "'");
        }
    }
    if (height != 0) throw Error(ErrorCode::InvalidDyckWord, "Dyck word is unbalanced");
}

BinaryTree tree_from_dyck(std::string_view word) {
    validate_dyck(word);
    return parse_dyck(word);
}

IntVector contact_vector(std::string_view word) {
    validate_dyck(word);
    const int n = static_cast<int>(word.size()) / 2;
    IntVector c(n + 1, 0);
    std::vector<int> heights(word.size() + 1, 0);
    for (std::size_t i = 0; i < word.size(); ++i) heights[i + 1] = heights[i] + (word[i] == 'U' ? 1 : -1);
    for (std::size_t i = 1; i < heights.size(); ++i) {
        if (heights[i] == 0) ++c[0];
    }
    int up = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] != 'U') continue;
        ++up;
        const int h = heights[i + 1];
        for (std::size_t j = i + 2; j < heights.size() && heights[j] >= h; ++j) {
            if (heights[j] == h && word[j - 1] == 'D') ++c[up];
        }
    }
    return c;
}

IntVector descent_vector(std::string_view word) {
    validate_dyck(word);
    const int n = static_cast<int>(word.size()) / 2;
    IntVector d(n + 1, 0);
    int up = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] != 'U') continue;
        ++up;
        for (std::size_t j = i + 1; j < word.size() && word[j] == 'D'; ++j) ++d[up];
    }
    return d;
}

}  // namespace tamari
