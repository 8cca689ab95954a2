#include "tamari/blossoming.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tamari/error.hpp"

namespace tamari {

namespace {

[[noreturn]] void invalid(const std::string& what) {
    throw Error(ErrorCode::InvalidBlossoming, what);
}

int index_of(const std::vector<int>& rotation, int item) {
    const auto it = std::find(rotation.begin(), rotation.end(), item);
    return it == rotation.end() ? -1 : static_cast<int>(it - rotation.begin());
}

}  // namespace

BlossomingTree::BlossomingTree(std::vector<std::vector<int>> rotations, std::vector<Edge> edges)
    : rotations_(std::move(rotations)), edges_(std::move(edges)) {
    const int nodes = node_count();
    const int m = size();
    if (nodes < 2) invalid("a blossoming tree has at least two nodes");
    if (m != nodes - 1) invalid("edge count must be node count minus one");
    std::vector<int> seen(m, 0);
    for (int v = 0; v < nodes; ++v) {
        int buds = 0;
        for (int item : rotations_[v]) {
            if (item == kBud) {
                ++buds;
                continue;
            }
            if (item < 0 || item >= m) invalid("edge id out of range");
            const Edge& e = edges_[item];
            if (e.blue_end != v && e.red_end != v) invalid("edge listed at a node it does not touch");
            ++seen[item];
        }
        if (buds != 2) invalid("node " + std::to_string(v) + " does not carry exactly two buds");
    }
    std::vector<int> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < m; ++e) {
        const Edge& edge = edges_[e];
        if (edge.blue_end < 0 || edge.blue_end >= nodes || edge.red_end < 0 || edge.red_end >= nodes) {
            invalid("edge endpoint out of range");
        }
        if (edge.blue_end == edge.red_end) invalid("loop edge");
        if (seen[e] != 2) invalid("edge " + std::to_string(e) + " must appear once at each end");
        const int a = find(edge.blue_end);
        const int b = find(edge.red_end);
        if (a == b) invalid("plain edges contain a cycle");
        parent[a] = b;
    }
    for (int v = 0; v < nodes; ++v) {
        const auto& rot = rotations_[v];
        const int first = index_of(rot, kBud);
        const int deg = static_cast<int>(rot.size());
        int second = first + 1;
        while (rot[second] != kBud) ++second;
        // The buds split the half-edges into a blue group and a red group.
        std::array<std::optional<Color>, 2> groups;
        int g = 0;
        for (auto [from, to] : {std::pair{first + 1, second}, std::pair{second + 1, first + deg}}) {
            for (int i = from; i < to; ++i) {
                const Color c = half_color(rot[i % deg], v);
                if (groups[g] && *groups[g] != c) invalid("buds do not separate colors at node " + std::to_string(v));
                groups[g] = c;
            }
            ++g;
        }
        if (groups[0] && groups[1] && *groups[0] == *groups[1]) {
            invalid("both bud-separated groups at node " + std::to_string(v) + " have the same color");
        }
    }
}

int BlossomingTree::other_end(int e, int node) const {
    const Edge& edge = edges_[e];
    return edge.blue_end == node ? edge.red_end : edge.blue_end;
}

Color BlossomingTree::half_color(int e, int node) const {
    return edges_[e].blue_end == node ? Color::Blue : Color::Red;
}

int BlossomingTree::ccw_successor(int node, int e) const {
    const auto& rot = rotations_[node];
    const int i = index_of(rot, e);
    return rot[(i + 1) % rot.size()];
}

int BlossomingTree::cw_successor(int node, int e) const {
    const auto& rot = rotations_[node];
    const int i = index_of(rot, e);
    return rot[(i + rot.size() - 1) % rot.size()];
}

std::string BlossomingTree::debug_string() const {
    std::ostringstream out;
    for (int v = 0; v < node_count(); ++v) {
        out << "node " << v << ":";
        for (int item : rotations_[v]) {
            if (item == kBud) {
                out << " bud";
            } else {
                out << " e" << item << (half_color(item, v) == Color::Blue ? "(blue)->" : "(red)->")
                    << other_end(item, v);
            }
        }
        out << "\n";
    }
    return out.str();
}

BlossomingTree gamma(const MeanderingDiagram& m) {
    if (!is_meandering_tree(m)) throw Error(ErrorCode::NotATree, "gamma needs a meandering tree");
    const int n = m.size();
    if (n < 1) throw Error(ErrorCode::NotATree, "gamma needs size at least 1");
    std::vector<std::vector<int>> rotations(n + 1);
    std::vector<BlossomingTree::Edge> edges(n);
    for (int t = 1; t <= n; ++t) edges[t - 1] = {m.up(t), m.lo(t)};
    for (int k = 0; k <= n; ++k) {
        auto& rot = rotations[k];
        rot.push_back(BlossomingTree::kBud);  // right bud
        for (int t = k + 1; t <= n; ++t) {
            if (m.up(t) == k) rot.push_back(t - 1);
        }
        rot.push_back(BlossomingTree::kBud);  // left bud
        for (int t = k; t >= 1; --t) {
            if (m.lo(t) == k) rot.push_back(t - 1);
        }
    }
    return BlossomingTree(std::move(rotations), std::move(edges));
}

ClosureResult closure(const BlossomingTree& b) {
    const int nodes = b.node_count();
    const int m = b.size();

    // Counterclockwise contour: leaving along an edge passes one of its legs,
    // then the walk resumes after that edge at the far end.
    struct Token {
        bool bud;
        int node;  // bud carrier
        int edge;  // leg owner
    };
    std::vector<Token> word;
    word.reserve(4 * m + 2);
    int v = 0;
    int pos = 0;
    for (int step = 0; step < 4 * m + 2; ++step) {
        const auto& rot = b.rotation(v);
        const int item = rot[pos];
        if (item == BlossomingTree::kBud) {
            word.push_back({true, v, -1});
            pos = (pos + 1) % static_cast<int>(rot.size());
        } else {
            word.push_back({false, -1, item});
            const int w = b.other_end(item, v);
            const auto& next = b.rotation(w);
            pos = (index_of(next, item) + 1) % static_cast<int>(next.size());
            v = w;
        }
    }
    if (v != 0 || pos != 0) invalid("contour did not close up");

    // Planar matching of buds (openers) with legs (closers) on the circle.
    const int len = static_cast<int>(word.size());
    std::vector<int> partner(len, -1);
    std::vector<int> stack;
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < len; ++i) {
            if (partner[i] >= 0) continue;
            if (word[i].bud) {
                if (pass == 0) stack.push_back(i);
            } else if (!stack.empty()) {
                partner[i] = stack.back();
                partner[stack.back()] = i;
                stack.pop_back();
            }
        }
    }
    if (stack.size() != 2) invalid("closure must leave exactly two buds unmatched");

    ClosureResult result;
    std::vector<std::vector<int>> adjacency(nodes + m);
    for (int i = 0; i < len; ++i) {
        if (!word[i].bud) {
            if (partner[i] < 0) invalid("closure left a leg unmatched");
            continue;
        }
        if (partner[i] < 0) continue;
        const int node = word[i].node;
        const int edge = word[partner[i]].edge;
        result.matching.push_back({node, edge});
        adjacency[node].push_back(nodes + edge);
        adjacency[nodes + edge].push_back(node);
    }
    result.extremal = {word[stack[0]].node, word[stack[1]].node};
    if (result.extremal[0] == result.extremal[1]) invalid("unmatched buds share a vertex");

    // Follow the closure edges from one extremal vertex.
    std::vector<int>& path = result.meandric_path;
    std::vector<char> used_edge(result.matching.size(), 0);
    std::vector<std::vector<int>> incident(nodes + m);
    for (std::size_t k = 0; k < result.matching.size(); ++k) {
        incident[result.matching[k].node].push_back(static_cast<int>(k));
        incident[nodes + result.matching[k].edge].push_back(static_cast<int>(k));
    }
    int cur = result.extremal[0];
    path.push_back(cur);
    for (;;) {
        int next_match = -1;
        for (int k : incident[cur]) {
            if (!used_edge[k]) {
                next_match = k;
                break;
            }
        }
        if (next_match < 0) break;
        used_edge[next_match] = 1;
        const auto& match = result.matching[next_match];
        cur = cur == match.node ? nodes + match.edge : match.node;
        path.push_back(cur);
    }
    if (static_cast<int>(path.size()) != nodes + m || path.back() != result.extremal[1]) {
        invalid("closure edges do not form a Hamiltonian path");
    }
    return result;
}

Stretch stretch(const BlossomingTree& b) {
    const ClosureResult c = closure(b);
    const int nodes = b.node_count();
    const int n = b.size();
    std::vector<Stretch> valid;
    std::vector<int> position(nodes + n);
    for (int dir = 0; dir < 2; ++dir) {
        for (int i = 0; i <= 2 * n; ++i) {
            const int vertex = c.meandric_path[dir == 0 ? i : 2 * n - i];
            position[vertex] = i;
        }
        bool ok = true;
        std::vector<int> up(n), lo(n), white_of_edge(n);
        for (int e = 0; e < n && ok; ++e) {
            const int w = position[nodes + e];
            const int blue = position[b.edge(e).blue_end];
            const int red = position[b.edge(e).red_end];
            ok = w % 2 == 1 && blue % 2 == 0 && red % 2 == 0 && blue < w && w < red;
            const int t = (w + 1) / 2;
            white_of_edge[e] = t;
            up[t - 1] = blue / 2;
            lo[t - 1] = red / 2;
        }
        if (!ok) continue;
        std::vector<int> black_of_node(nodes);
        for (int v = 0; v < nodes; ++v) black_of_node[v] = position[v] / 2;
        try {
            MeanderingDiagram diagram(std::move(up), std::move(lo));
            if (is_meandering_tree(diagram)) {
                valid.push_back({std::move(diagram), std::move(black_of_node), std::move(white_of_edge)});
            }
        } catch (const Error&) {
            // crossing arcs: this orientation is not a valid stretch
        }
    }
    if (valid.size() != 1) {
        throw Error(ErrorCode::ClosureOrientationError,
                    std::to_string(valid.size()) + " orientations of the meandric path validate, expected 1");
    }
    return std::move(valid.front());
}

MeanderingDiagram delta(const BlossomingTree& b) {
    return stretch(b).diagram;
}

BlossomingTree Phi(const TamariInterval& interval) {
    return gamma(phi(interval));
}

TamariInterval Psi(const BlossomingTree& b) {
    auto [lower, upper] = psi(delta(b));
    return make_interval(std::move(lower), std::move(upper));
}

BlossomingTree dual(const BlossomingTree& b) {
    std::vector<std::vector<int>> rotations;
    for (int v = 0; v < b.node_count(); ++v) rotations.push_back(b.rotation(v));
    std::vector<BlossomingTree::Edge> edges;
    for (const auto& e : b.edges()) edges.push_back({e.red_end, e.blue_end});
    return BlossomingTree(std::move(rotations), std::move(edges));
}

BlossomingTree refl(const BlossomingTree& b) {
    std::vector<std::vector<int>> rotations;
    for (int v = 0; v < b.node_count(); ++v) {
        rotations.emplace_back(b.rotation(v).rbegin(), b.rotation(v).rend());
    }
    return BlossomingTree(std::move(rotations), b.edges());
}

TamariInterval rho(const TamariInterval& interval) {
    return Psi(refl(Phi(interval)));
}

bool same_plane_tree(const BlossomingTree& a, const BlossomingTree& b,
                     const std::vector<int>& node_map, const std::vector<int>& edge_map) {
    if (a.node_count() != b.node_count() || a.size() != b.size()) return false;
    for (int e = 0; e < a.size(); ++e) {
        const auto& ea = a.edge(e);
        const auto& eb = b.edge(edge_map[e]);
        if (node_map[ea.blue_end] != eb.blue_end || node_map[ea.red_end] != eb.red_end) return false;
    }
    for (int v = 0; v < a.node_count(); ++v) {
        std::vector<int> mapped;
        for (int item : a.rotation(v)) mapped.push_back(item == BlossomingTree::kBud ? item : edge_map[item]);
        const auto& target = b.rotation(node_map[v]);
        if (mapped.size() != target.size()) return false;
        bool found = false;
        for (std::size_t shift = 0; shift < target.size() && !found; ++shift) {
            found = std::equal(mapped.begin(), mapped.end(), target.begin(), [&, i = std::size_t{0}](int x, int) mutable {
                return x == target[(i++ + shift) % target.size()];
            });
        }
        if (!found) return false;
    }
    return true;
}

BiDegree bi_degree(const BlossomingTree& b, int node) {
    BiDegree d;
    for (int item : b.rotation(node)) {
        if (item == BlossomingTree::kBud) continue;
        if (b.half_color(item, node) == Color::Blue) {
            ++d.blue;
        } else {
            ++d.red;
        }
    }
    return d;
}

CanopyType node_type(const BlossomingTree& b, int node) {
    const BiDegree d = bi_degree(b, node);
    if (d.red == 0) return CanopyType::S11;
    if (d.blue == 0) return CanopyType::S00;
    return CanopyType::M10;
}

CanopyCounts node_type_counts(const BlossomingTree& b) {
    CanopyCounts counts;
    for (int v = 0; v < b.node_count(); ++v) {
        switch (node_type(b, v)) {
            case CanopyType::S11: ++counts.s11; break;
            case CanopyType::S00: ++counts.s00; break;
            case CanopyType::M10: ++counts.m10; break;
        }
    }
    return counts;
}

bool is_synchronized_tree(const BlossomingTree& b) {
    return node_type_counts(b).m10 == 0;
}

std::vector<int> non_modern_edges(const BlossomingTree& b) {
    std::vector<int> out;
    for (int e = 0; e < b.size(); ++e) {
        const auto& edge = b.edge(e);
        if (b.cw_successor(edge.blue_end, e) != BlossomingTree::kBud &&
            b.cw_successor(edge.red_end, e) != BlossomingTree::kBud) {
            out.push_back(e);
        }
    }
    return out;
}

namespace {

// For every pair of distinct nodes, the first and last edges of the tree path
// between them; `first[u][v]` is the edge leaving u toward v.
struct PathTable {
    std::vector<std::vector<int>> first;
    std::vector<std::vector<int>> depth;

    explicit PathTable(const BlossomingTree& b)
        : first(b.node_count(), std::vector<int>(b.node_count(), -1)),
          depth(b.node_count(), std::vector<int>(b.node_count(), 0)) {
        const int nodes = b.node_count();
        std::vector<int> stack;
        for (int root = 0; root < nodes; ++root) {
            auto& f = first[root];
            auto& d = depth[root];
            std::vector<int> via(nodes, -2);
            via[root] = -1;
            stack.assign(1, root);
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (int item : b.rotation(u)) {
                    if (item == BlossomingTree::kBud) continue;
                    const int w = b.other_end(item, u);
                    if (via[w] != -2) continue;
                    via[w] = item;
                    f[w] = u == root ? item : f[u];
                    d[w] = d[u] + 1;
                    stack.push_back(w);
                }
            }
        }
    }
};

template <typename Successor>
std::vector<TreePath> path_patterns(const BlossomingTree& b, int max_length, Successor successor) {
    const PathTable table(b);
    std::vector<TreePath> out;
    for (int u = 0; u < b.node_count(); ++u) {
        for (int v = u + 1; v < b.node_count(); ++v) {
            const int length = table.depth[u][v];
            if (max_length > 0 && length > max_length) continue;
            if (successor(u, table.first[u][v]) != BlossomingTree::kBud &&
                successor(v, table.first[v][u]) != BlossomingTree::kBud) {
                out.push_back({u, v, length});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<TreePath> non_modern_paths(const BlossomingTree& b, int max_length) {
    return path_patterns(b, max_length, [&](int node, int e) { return b.cw_successor(node, e); });
}

std::vector<TreePath> non_kreweras_paths(const BlossomingTree& b) {
    return path_patterns(b, 0, [&](int node, int e) { return b.ccw_successor(node, e); });
}

bool is_modern_tree(const BlossomingTree& b) {
    return non_modern_edges(b).empty();
}

bool is_infinitely_modern_tree(const BlossomingTree& b) {
    return non_modern_paths(b).empty();
}

bool is_kreweras_tree(const BlossomingTree& b) {
    return non_kreweras_paths(b).empty();
}

bool is_half_turn_symmetric(const BlossomingTree& b) {
    return canonical_encode(dual(b)) == canonical_encode(b);
}

bool trivial_bud_position_check(const BlossomingTree& b) {
    const int nodes = b.node_count();
    for (int root_edge = 0; root_edge < b.size(); ++root_edge) {
        // toward[v] = edge at v on the way to root_edge.
        std::vector<int> toward(nodes, -2);
        std::vector<int> stack;
        for (int end : {b.edge(root_edge).blue_end, b.edge(root_edge).red_end}) {
            toward[end] = root_edge;
            stack.push_back(end);
        }
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int item : b.rotation(u)) {
                if (item == BlossomingTree::kBud) continue;
                const int w = b.other_end(item, u);
                if (toward[w] != -2) continue;
                toward[w] = item;
                stack.push_back(w);
            }
        }
        bool ok = true;
        for (int v = 0; v < nodes && ok; ++v) {
            const auto& rot = b.rotation(v);
            const int deg = static_cast<int>(rot.size());
            const int i = index_of(rot, toward[v]);
            ok = rot[(i + 1) % deg] == BlossomingTree::kBud && rot[(i + 2) % deg] == BlossomingTree::kBud;
        }
        if (ok) return true;
    }
    return false;
}

std::string canonical_encode(const BlossomingTree& b) {
    return delta(b).to_json();
}

BlossomingTree canonical_decode(std::string_view encoding) {
    return gamma(MeanderingDiagram::from_json(encoding));
}

}  // namespace tamari
