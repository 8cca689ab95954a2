#include "tamari/intervals.hpp"

#include <algorithm>
#include <functional>

#include "tamari/error.hpp"

namespace tamari {

TamariInterval TamariInterval::make(BinaryTree lower, BinaryTree upper) {
    if (lower.size() != upper.size()) {
        throw Error(ErrorCode::SizeMismatch, "interval trees have different sizes");
    }
    if (lower.size() == 0) throw Error(ErrorCode::NotAnInterval, "intervals have size at least 1");
    if (!tamari_leq(lower, upper)) {
        throw Error(ErrorCode::NotAnInterval, "lower tree is not below upper tree");
    }
    return TamariInterval(std::move(lower), std::move(upper));
}

TamariInterval TamariInterval::parse(std::string_view text) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
        throw Error(ErrorCode::ParseError, "interval text must look like <lower>|<upper>");
    }
    return make(tree_from_dyck(text.substr(0, bar)), tree_from_dyck(text.substr(bar + 1)));
}

std::string TamariInterval::to_string() const {
    return dyck_from_tree(lower_) + "|" + dyck_from_tree(upper_);
}

std::vector<TamariInterval> enumerate_intervals(int n, int cap) {
    if (n < 1 || n > cap) {
        throw Error(ErrorCode::SizeCapExceeded,
                    "interval size " + std::to_string(n) + " outside [1, " + std::to_string(cap) + "]");
    }
    const auto trees = enumerate_binary_trees(n, std::max(cap, kDefaultTreeCap));
    std::vector<IntVector> brackets;
    brackets.reserve(trees.size());
    for (const auto& t : trees) brackets.push_back(bracket_vector(t));

    std::vector<TamariInterval> out;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = 0; j < trees.size(); ++j) {
            if (std::equal(brackets[i].begin(), brackets[i].end(), brackets[j].begin(),
                           [](int a, int b) { return a <= b; })) {
                out.push_back(TamariInterval::make(trees[i], trees[j]));
            }
        }
    }
    return out;
}

TamariInterval dual_interval(const TamariInterval& interval) {
    return TamariInterval::make(mirror(interval.upper()), mirror(interval.lower()));
}

bool is_self_dual(const TamariInterval& interval) {
    return dual_interval(interval) == interval;
}

std::pair<BinaryTree, BinaryTree> rise(const BinaryTree& lower, const BinaryTree& upper) {
    return {BinaryTree::node(lower, BinaryTree::leaf()), BinaryTree::node(BinaryTree::leaf(), upper)};
}

std::pair<BinaryTree, BinaryTree> rise(const TamariInterval& interval) {
    return rise(interval.lower(), interval.upper());
}

TamariInterval derise(const TamariInterval& interval) {
    const auto& lower = interval.lower();
    const auto& upper = interval.upper();
    if (interval.size() < 2 || !lower.right().is_leaf() || !upper.left().is_leaf()) {
        throw Error(ErrorCode::NotDerisable, "interval is not the rise of a pair");
    }
    if (!tamari_leq(lower.left(), upper.right())) {
        throw Error(ErrorCode::NotDerisable, "derised pair is not an interval");
    }
    return TamariInterval::make(lower.left(), upper.right());
}

std::string_view canopy_type_name(CanopyType type) {
    switch (type) {
        case CanopyType::S11: return "S11";
        case CanopyType::S00: return "S00";
        case CanopyType::M10: return "M10";
    }
    return "?";
}

JointCanopy joint_canopy(const TamariInterval& interval) {
    const auto up = canopy(interval.upper());
    const auto lo = canopy(interval.lower());
    JointCanopy out;
    out.reserve(up.size());
    for (std::size_t k = 0; k < up.size(); ++k) {
        if (up[k] == 1 && lo[k] == 1) {
            out.push_back(CanopyType::S11);
        } else if (up[k] == 0 && lo[k] == 0) {
            out.push_back(CanopyType::S00);
        } else if (up[k] == 1 && lo[k] == 0) {
            out.push_back(CanopyType::M10);
        } else {
            throw Error(ErrorCode::NotAnInterval, "joint canopy type [0;1] cannot occur in an interval");
        }
    }
    return out;
}

CanopyCounts canopy_type_counts(const TamariInterval& interval) {
    CanopyCounts counts;
    for (CanopyType t : joint_canopy(interval)) {
        switch (t) {
            case CanopyType::S11: ++counts.s11; break;
            case CanopyType::S00: ++counts.s00; break;
            case CanopyType::M10: ++counts.m10; break;
        }
    }
    return counts;
}

std::vector<std::pair<int, int>> bi_length_vector(const TamariInterval& interval) {
    const auto up = degree_vector(interval.upper());
    const auto lo = dual_degree_vector(interval.lower());
    std::vector<std::pair<int, int>> out;
    out.reserve(up.size());
    for (std::size_t k = 0; k < up.size(); ++k) out.emplace_back(up[k], lo[k]);
    return out;
}

std::vector<std::pair<Arc, Arc>> smooth_flawed_pairs(const BinaryTree& lower, const BinaryTree& upper) {
    if (lower.size() != upper.size()) {
        throw Error(ErrorCode::SizeMismatch, "flawed pairs need trees of equal size");
    }
    std::vector<std::pair<Arc, Arc>> out;
    const auto lows = smooth_arcs(lower);
    const auto ups = smooth_arcs(upper);
    for (const Arc& a : lows) {
        for (const Arc& b : ups) {
            if (b.left < a.left && a.left <= b.right && b.right < a.right) out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<std::pair<Arc, Arc>> separated_pairs(const TamariInterval& interval, int max_gap) {
    std::vector<std::pair<Arc, Arc>> out;
    const auto lows = smooth_arcs(interval.lower());
    const auto ups = smooth_arcs(interval.upper());
    for (const Arc& u : ups) {
        for (const Arc& l : lows) {
            const int gap = l.left - u.right;
            if (gap >= 1 && (max_gap == 0 || gap <= max_gap)) out.emplace_back(u, l);
        }
    }
    return out;
}

bool is_trivial(const TamariInterval& interval) {
    return interval.lower() == interval.upper();
}

bool is_synchronized(const TamariInterval& interval) {
    return canopy(interval.lower()) == canopy(interval.upper());
}

bool is_modern(const TamariInterval& interval) {
    const auto [lower, upper] = rise(interval);
    return tamari_leq(lower, upper);
}

bool is_k_modern(const TamariInterval& interval, int k) {
    BinaryTree lower = interval.lower();
    BinaryTree upper = interval.upper();
    for (int i = 1; i <= k; ++i) {
        std::tie(lower, upper) = rise(lower, upper);
        if (!tamari_leq(lower, upper)) return false;
    }
    return true;
}

bool is_infinitely_modern(const TamariInterval& interval) {
    return separated_pairs(interval).empty();
}

bool is_infinitely_modern_by_rising(const TamariInterval& interval) {
    // A gap has length at most n, so n rises expose every obstruction.
    return is_k_modern(interval, interval.size());
}

bool is_kreweras(const TamariInterval& interval) {
    return refines(iota(interval.lower()), iota(interval.upper()));
}

bool is_new(const TamariInterval& interval) {
    // The size-1 interval is the rise of the empty pair.
    if (interval.size() == 1) return true;
    try {
        return is_modern(derise(interval));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotDerisable) return false;
        throw;
    }
}

NonCrossingPartition iota(const BinaryTree& t) {
    // block_of[label] = label of the top node of the right branch through it.
    std::vector<int> block_of(t.size() + 1, 0);
    int next_label = 1;
    std::function<void(const BinaryTree&, int)> walk = [&](const BinaryTree& s, int branch_top) {
        if (s.is_leaf()) return;
        walk(s.left(), 0);
        const int label = next_label++;
        const int top = branch_top == 0 ? label : branch_top;
        block_of[label] = top;
        walk(s.right(), top);
    };
    walk(t, 0);
    NonCrossingPartition blocks;
    std::vector<int> index_of(t.size() + 1, -1);
    for (int label = 1; label <= t.size(); ++label) {
        const int top = block_of[label];
        if (index_of[top] < 0) {
            index_of[top] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[index_of[top]].push_back(label);
    }
    return blocks;
}

bool is_non_crossing(const NonCrossingPartition& p) {
    for (std::size_t x = 0; x < p.size(); ++x) {
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (x == y) continue;
            for (int a : p[x]) {
                for (int c : p[x]) {
                    if (c <= a) continue;
                    for (int b : p[y]) {
                        if (b <= a || b >= c) continue;
                        for (int d : p[y]) {
                            if (d > c) return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

bool refines(const NonCrossingPartition& p, const NonCrossingPartition& q) {
    int n = 0;
    for (const auto& block : p) n += static_cast<int>(block.size());
    int m = 0;
    for (const auto& block : q) m += static_cast<int>(block.size());
    if (n != m) throw Error(ErrorCode::SizeMismatch, "refines on partitions of different sizes");
    std::vector<int> q_block(n + 1, -1);
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (int x : q[i]) q_block[x] = static_cast<int>(i);
    }
    for (const auto& block : p) {
        for (int x : block) {
            if (q_block[x] != q_block[block.front()]) return false;
        }
    }
    return true;
}

}  // namespace tamari
