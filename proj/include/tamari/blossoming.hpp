#pragma once

// Bicolored blossoming trees and the bijection with Tamari intervals.
//
// Each node stores its incident items in counterclockwise order, with the
// drawing convention of the meandering layout (y axis pointing up): at black
// point k the ccw order is right bud, upper arcs from innermost to outermost,
// left bud, lower arcs from innermost to outermost. Clockwise successors are
// read by walking the same list backwards.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamari/intervals.hpp"
#include "tamari/meandering.hpp"

namespace tamari {

enum class Color { Blue, Red };

class BlossomingTree {
public:
    static constexpr int kBud = -1;

    struct Edge {
        int blue_end;
        int red_end;
    };

    BlossomingTree() = default;
    /// `rotations[v]` lists edge ids or kBud counterclockwise around v.
    /// Throws InvalidBlossoming unless every structural invariant holds.
    BlossomingTree(std::vector<std::vector<int>> rotations, std::vector<Edge> edges);

    int node_count() const noexcept { return static_cast<int>(rotations_.size()); }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<int>& rotation(int node) const { return rotations_[node]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    int other_end(int e, int node) const;
    Color half_color(int e, int node) const;

    /// Item after / before `e` counterclockwise around `node` (kBud or an edge id).
    int ccw_successor(int node, int e) const;
    int cw_successor(int node, int e) const;

    /// Multi-line listing of nodes, their cyclic items and colors.
    std::string debug_string() const;

private:
    std::vector<std::vector<int>> rotations_;
    std::vector<Edge> edges_;
};

BlossomingTree gamma(const MeanderingDiagram& m);

struct ClosureResult {
    struct Match {
        int node;  ///< tree vertex carrying the bud
        int edge;  ///< plain edge whose leg closes it
    };
    std::vector<Match> matching;
    /// Alternates tree vertices (ids 0..n) and edge vertices (ids n+1+e);
    /// starts and ends at tree vertices.
    std::vector<int> meandric_path;
    std::array<int, 2> extremal{};
};

ClosureResult closure(const BlossomingTree& b);

struct Stretch {
    MeanderingDiagram diagram;
    std::vector<int> black_of_node;  ///< node -> black point
    std::vector<int> white_of_edge;  ///< edge -> white point t (1-based)
};

/// Closure stretched along the meandric path, with the node/edge placement.
Stretch stretch(const BlossomingTree& b);
MeanderingDiagram delta(const BlossomingTree& b);

BlossomingTree Phi(const TamariInterval& interval);
TamariInterval Psi(const BlossomingTree& b);

BlossomingTree dual(const BlossomingTree& b);
BlossomingTree refl(const BlossomingTree& b);

/// Psi o refl o Phi.
TamariInterval rho(const TamariInterval& interval);

/// True when `a` and `b` coincide after renaming nodes and edges of `a`
/// through the given maps (colors and cyclic orders compared up to rotation).
bool same_plane_tree(const BlossomingTree& a, const BlossomingTree& b,
                     const std::vector<int>& node_map, const std::vector<int>& edge_map);

struct BiDegree {
    int blue = 0;
    int red = 0;
    friend bool operator==(const BiDegree&, const BiDegree&) = default;
    friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
};

BiDegree bi_degree(const BlossomingTree& b, int node);
CanopyType node_type(const BlossomingTree& b, int node);
CanopyCounts node_type_counts(const BlossomingTree& b);

bool is_synchronized_tree(const BlossomingTree& b);

/// Edges whose clockwise successor is plain at both ends.
std::vector<int> non_modern_edges(const BlossomingTree& b);

struct TreePath {
    int from;
    int to;
    int length;
    friend bool operator==(const TreePath&, const TreePath&) = default;
};

/// Unordered node pairs {from < to} whose tree path has a plain clockwise
/// successor after its first edge at `from` and after its last edge at `to`.
/// `max_length` bounds the path length (0 means unbounded).
std::vector<TreePath> non_modern_paths(const BlossomingTree& b, int max_length = 0);
/// Same with counterclockwise successors.
std::vector<TreePath> non_kreweras_paths(const BlossomingTree& b);

bool is_modern_tree(const BlossomingTree& b);
bool is_infinitely_modern_tree(const BlossomingTree& b);
bool is_kreweras_tree(const BlossomingTree& b);

bool is_half_turn_symmetric(const BlossomingTree& b);

/// Some edge e such that at every node both buds come right after the edge
/// pointing toward e, in counterclockwise order.
bool trivial_bud_position_check(const BlossomingTree& b);

/// Serialized delta(b); equal strings iff equal bicolored blossoming trees.
std::string canonical_encode(const BlossomingTree& b);
BlossomingTree canonical_decode(std::string_view encoding);

}  // namespace tamari
