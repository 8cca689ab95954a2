#pragma once

// Meandering diagrams: 2n+1 axis points, black at integers 0..n and white at
// t - 1/2 for t = 1..n. White point t carries one upper arc to the black
// point up[t] <= t-1 and one lower arc to the black point lo[t] >= t.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tamari/intervals.hpp"
#include "tamari/trees.hpp"

namespace tamari {

class MeanderingDiagram {
public:
    MeanderingDiagram() = default;

    /// `up` and `lo` are indexed by white point t = 1..n (stored at t-1).
    /// Throws InvalidDiagram on range or crossing violations.
    MeanderingDiagram(std::vector<int> up, std::vector<int> lo);

    int size() const noexcept { return static_cast<int>(up_.size()); }
    /// 1-based accessors.
    int up(int t) const { return up_[t - 1]; }
    int lo(int t) const { return lo_[t - 1]; }
    const std::vector<int>& ups() const noexcept { return up_; }
    const std::vector<int>& los() const noexcept { return lo_; }

    /// {"n":2,"up":[0,1],"lo":[1,2]}
    std::string to_json() const;
    static MeanderingDiagram from_json(std::string_view text);

    friend bool operator==(const MeanderingDiagram&, const MeanderingDiagram&) = default;
    friend auto operator<=>(const MeanderingDiagram&, const MeanderingDiagram&) = default;

private:
    std::vector<int> up_;
    std::vector<int> lo_;
};

/// Edge t joins black points up[t] and lo[t].
std::vector<std::pair<int, int>> underlying_edges(const MeanderingDiagram& m);

MeanderingDiagram phi(const BinaryTree& lower, const BinaryTree& upper);
inline MeanderingDiagram phi(const TamariInterval& i) { return phi(i.lower(), i.upper()); }
std::pair<BinaryTree, BinaryTree> psi(const MeanderingDiagram& m);

/// Underlying graph connected (n edges on n+1 vertices, so a tree).
bool is_meandering_tree(const MeanderingDiagram& m);

struct ArcPair {
    int lower_white;  ///< white point s of the lower arc (s - 1/2, lo[s])
    int upper_white;  ///< white point t of the upper arc (up[t], t - 1/2)
    friend bool operator==(const ArcPair&, const ArcPair&) = default;
};

/// up[t] < s - 1/2 < t - 1/2 < lo[s].
std::vector<ArcPair> flawed_pairs(const MeanderingDiagram& m);
/// s - 1/2 < up[t] < lo[s] < t - 1/2.
std::vector<ArcPair> non_kreweras_pairs(const MeanderingDiagram& m);

/// Per-black-point arc counts (index 0..n).
std::vector<int> upper_degrees(const MeanderingDiagram& m);
std::vector<int> lower_degrees(const MeanderingDiagram& m);

MeanderingDiagram half_turn(const MeanderingDiagram& m);

struct Decomposition {
    MeanderingDiagram left;
    MeanderingDiagram right;
    int attach = 0;  ///< black point of `right` receiving the removed lower arc
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Removes the edge of the outermost upper arc from black point 0.
Decomposition decompose(const MeanderingDiagram& m);
/// Throws InvalidDecomposition when `attach` is enclosed by a lower arc of
/// `right` or out of range.
MeanderingDiagram compose(const MeanderingDiagram& left, const MeanderingDiagram& right, int attach);

/// Black points of m not strictly enclosed by any lower arc.
std::vector<int> free_attach_points(const MeanderingDiagram& m);

/// All meandering trees of size n, generated by compose alone.
std::vector<MeanderingDiagram> meandering_trees_by_composition(int n);

}  // namespace tamari
