#pragma once

// Validated Tamari intervals and the family classifiers that work straight
// from the definitions (canopies, rise, right-branch partitions). These are
// the oracles the blossoming-tree pattern detectors are checked against.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamari/trees.hpp"

namespace tamari {

class TamariInterval {
public:
    /// Throws SizeMismatch or NotAnInterval; also rejects size 0.
    static TamariInterval make(BinaryTree lower, BinaryTree upper);
    /// Parses "<dyckLower>|<dyckUpper>".
    static TamariInterval parse(std::string_view text);

    const BinaryTree& lower() const noexcept { return lower_; }
    const BinaryTree& upper() const noexcept { return upper_; }
    int size() const noexcept { return lower_.size(); }

    std::string to_string() const;

    friend bool operator==(const TamariInterval&, const TamariInterval&) = default;

private:
    TamariInterval(BinaryTree lower, BinaryTree upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {}

    BinaryTree lower_;
    BinaryTree upper_;
};

inline TamariInterval make_interval(BinaryTree lower, BinaryTree upper) {
    return TamariInterval::make(std::move(lower), std::move(upper));
}

constexpr int kDefaultIntervalCap = 9;

/// All intervals of size n in a deterministic order (lower-tree major).
std::vector<TamariInterval> enumerate_intervals(int n, int cap = kDefaultIntervalCap);

/// (mir(upper), mir(lower)).
TamariInterval dual_interval(const TamariInterval& interval);
bool is_self_dual(const TamariInterval& interval);

/// ((T, e), (e, T')) for any pair of equal-size trees.
std::pair<BinaryTree, BinaryTree> rise(const BinaryTree& lower, const BinaryTree& upper);
std::pair<BinaryTree, BinaryTree> rise(const TamariInterval& interval);
/// Inverse of rise; throws NotDerisable when the shapes do not allow it or
/// the stripped pair is not an interval.
TamariInterval derise(const TamariInterval& interval);

enum class CanopyType { S11, S00, M10 };

std::string_view canopy_type_name(CanopyType type);

using JointCanopy = std::vector<CanopyType>;

struct CanopyCounts {
    int s11 = 0;
    int s00 = 0;
    int m10 = 0;
    friend bool operator==(const CanopyCounts&, const CanopyCounts&) = default;
};

JointCanopy joint_canopy(const TamariInterval& interval);
CanopyCounts canopy_type_counts(const TamariInterval& interval);

/// Entry k = (d_up(upper)_k, d_down(lower)_k).
std::vector<std::pair<int, int>> bi_length_vector(const TamariInterval& interval);

/// Smooth-drawing flawed pairs: lower arc (l, r) of T, upper arc (l', r') of
/// T' with l' < l <= r' < r. Works on any pair of equal-size trees.
std::vector<std::pair<Arc, Arc>> smooth_flawed_pairs(const BinaryTree& lower, const BinaryTree& upper);

/// Pairs (upper arc, lower arc) with the upper arc entirely left of the lower
/// arc; `max_gap` bounds the gap length (0 means unbounded).
std::vector<std::pair<Arc, Arc>> separated_pairs(const TamariInterval& interval, int max_gap = 0);

bool is_trivial(const TamariInterval& interval);
bool is_synchronized(const TamariInterval& interval);
bool is_modern(const TamariInterval& interval);
bool is_k_modern(const TamariInterval& interval, int k);
/// No separated pair in the smooth drawing.
bool is_infinitely_modern(const TamariInterval& interval);
/// rise^k valid for k = 1..n; agrees with is_infinitely_modern.
bool is_infinitely_modern_by_rising(const TamariInterval& interval);
bool is_kreweras(const TamariInterval& interval);
bool is_new(const TamariInterval& interval);

/// Blocks are sorted lists of infix labels; blocks sorted by first element.
using NonCrossingPartition = std::vector<std::vector<int>>;

/// Partition of the infix labels into right branches.
NonCrossingPartition iota(const BinaryTree& t);
bool is_non_crossing(const NonCrossingPartition& p);
/// p refines q (every block of p lies inside a block of q).
bool refines(const NonCrossingPartition& p, const NonCrossingPartition& q);

}  // namespace tamari
