#include "tamari/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tamari/error.hpp"

namespace tamari {

std::uint64_t RandomSource::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = -bound % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

namespace {

int size_of(const MarkedSequence& a) {
    return static_cast<int>(a.size()) / 3 - 1;
}

int block(const MarkedSequence& a, int i) {
    return a[3 * i] + a[3 * i + 1] + a[3 * i + 2];
}

}  // namespace

bool is_composition(const MarkedSequence& a) {
    if (a.size() < 6 || a.size() % 3 != 0) return false;
    if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; })) return false;
    return std::accumulate(a.begin(), a.end(), 0LL) == size_of(a) - 1;
}

bool is_marked_sequence(const MarkedSequence& a) {
    if (!is_composition(a)) return false;
    long long prefix = 0;
    for (int i = 0; i < size_of(a); ++i) {
        prefix += block(a, i);
        if (prefix < i) return false;
    }
    return true;
}

MarkedSequence sample_composition(int n, RandomSource& rng) {
    if (n < 1) throw Error(ErrorCode::UnsupportedSize, "sample size must be at least 1");
    // Stars and bars: n - 1 stars among 4n + 1 slots, the rest are 3n + 2 bars.
    const int slots = 4 * n + 1;
    const int stars = n - 1;
    std::set<int> chosen;  // Floyd's subset sampling
    for (int j = slots - stars; j < slots; ++j) {
        const int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    MarkedSequence a(3 * n + 3, 0);
    int part = 0;
    for (int slot = 0; slot < slots; ++slot) {
        if (chosen.count(slot)) {
            ++a[part];
        } else {
            ++part;
        }
    }
    return a;
}

MarkedSequence shift_blocks(const MarkedSequence& a, int shift) {
    MarkedSequence out(a.size());
    std::rotate_copy(a.begin(), a.begin() + 3 * shift, a.end(), out.begin());
    return out;
}

std::vector<int> valid_shifts(const MarkedSequence& a) {
    if (!is_composition(a)) throw Error(ErrorCode::InvalidSequence, "not a composition of the right shape");
    const int n = size_of(a);
    // Steps b_i - 1 sum to -2, so exactly two rotations keep the walk >= -1
    // until the last step. Direct O(n^2) scan.
    std::vector<int> out;
    for (int s = 0; s <= n; ++s) {
        long long prefix = 0;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            prefix += block(a, (s + i) % (n + 1));
            ok = prefix >= i;
        }
        if (ok) out.push_back(s);
    }
    if (out.size() != 2) {
        throw Error(ErrorCode::CycleLemmaViolation,
                    "expected 2 valid shifts, found " + std::to_string(out.size()));
    }
    return out;
}

namespace {

void compositions(int parts, int total, MarkedSequence& cur, std::vector<MarkedSequence>& out) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= total; ++x) {
        cur.push_back(x);
        compositions(parts, total - x, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MarkedSequence> enumerate_compositions(int n) {
    if (n < 1 || n > 6) throw Error(ErrorCode::SizeCapExceeded, "composition enumeration needs 1 <= n <= 6");
    std::vector<MarkedSequence> out;
    MarkedSequence cur;
    compositions(3 * n + 3, n - 1, cur, out);
    return out;
}

std::vector<MarkedSequence> enumerate_marked_sequences(int n) {
    auto all = enumerate_compositions(n);
    std::erase_if(all, [](const MarkedSequence& a) { return !is_marked_sequence(a); });
    return all;
}

MarkedSequence vec(const BlossomingTree& b, int marked_edge) {
    if (marked_edge < 0 || marked_edge >= b.size()) {
        throw Error(ErrorCode::InvalidBlossoming, "marked edge out of range");
    }
    MarkedSequence out;
    out.reserve(3 * b.node_count());
    const auto& e = b.edge(marked_edge);
    for (int root : {e.red_end, e.blue_end}) {
        // (node, edge toward its parent), explored in preorder.
        std::vector<std::pair<int, int>> stack{{root, marked_edge}};
        while (!stack.empty()) {
            const auto [v, parent_edge] = stack.back();
            stack.pop_back();
            auto rot = b.rotation(v);
            std::rotate(rot.begin(), std::find(rot.begin(), rot.end(), parent_edge), rot.end());
            const int first = static_cast<int>(std::find(rot.begin() + 1, rot.end(), BlossomingTree::kBud) - rot.begin());
            const int second =
                static_cast<int>(std::find(rot.begin() + first + 1, rot.end(), BlossomingTree::kBud) - rot.begin());
            const int deg = static_cast<int>(rot.size());
            out.push_back(first - 1);
            out.push_back(second - first - 1);
            out.push_back(deg - second - 1);
            for (int i = deg - 1; i >= 1; --i) {
                if (rot[i] != BlossomingTree::kBud) stack.emplace_back(b.other_end(rot[i], v), rot[i]);
            }
        }
    }
    return out;
}

MarkedBlossomingTree vec_inverse(const MarkedSequence& s) {
    if (!is_marked_sequence(s)) throw Error(ErrorCode::InvalidSequence, "sequence is not a valid marked sequence");
    const int n = size_of(s);
    const int nodes = n + 1;
    int split = 0;
    for (long long prefix = 0;; ++split) {
        prefix += block(s, split);
        if (prefix == split) break;
    }

    std::vector<int> parent(nodes, -1);
    std::vector<std::vector<int>> children(nodes);
    for (auto [from, to] : {std::pair{0, split + 1}, std::pair{split + 1, nodes}}) {
        std::vector<int> open;  // nodes still missing children
        for (int v = from; v < to; ++v) {
            if (v != from) {
                if (open.empty()) throw Error(ErrorCode::InvalidSequence, "preorder reconstruction ran out of slots");
                const int p = open.back();
                parent[v] = p;
                children[p].push_back(v);
                if (static_cast<int>(children[p].size()) == block(s, p)) open.pop_back();
            }
            if (block(s, v) > 0) open.push_back(v);
        }
        if (!open.empty()) throw Error(ErrorCode::InvalidSequence, "preorder reconstruction left open slots");
    }

    // Edge 0 is the marked edge; edge of child v is created in preorder.
    std::vector<BlossomingTree::Edge> edges(n);
    std::vector<int> edge_to_parent(nodes, 0);
    std::vector<Color> parent_half(nodes);  // color of v's half on its parent edge
    parent_half[0] = Color::Red;
    parent_half[split + 1] = Color::Blue;
    edges[0] = {split + 1, 0};
    int next_edge = 1;
    for (int v = 0; v < nodes; ++v) {
        const int l = s[3 * v];
        const int m = s[3 * v + 1];
        for (int k = 0; k < static_cast<int>(children[v].size()); ++k) {
            const int c = children[v][k];
            const bool middle = k >= l && k < l + m;
            const Color mine = middle ? (parent_half[v] == Color::Red ? Color::Blue : Color::Red) : parent_half[v];
            parent_half[c] = mine == Color::Red ? Color::Blue : Color::Red;
            edge_to_parent[c] = next_edge;
            edges[next_edge++] = mine == Color::Blue ? BlossomingTree::Edge{v, c} : BlossomingTree::Edge{c, v};
        }
    }
    std::vector<std::vector<int>> rotations(nodes);
    for (int v = 0; v < nodes; ++v) {
        const int l = s[3 * v];
        const int m = s[3 * v + 1];
        auto& rot = rotations[v];
        rot.push_back(edge_to_parent[v]);
        for (int k = 0; k < static_cast<int>(children[v].size()); ++k) {
            if (k == l) rot.push_back(BlossomingTree::kBud);
            if (k == l + m) rot.push_back(BlossomingTree::kBud);
            rot.push_back(edge_to_parent[children[v][k]]);
        }
        const int deg = static_cast<int>(children[v].size());
        if (l >= deg) rot.push_back(BlossomingTree::kBud);
        if (l + m >= deg) rot.push_back(BlossomingTree::kBud);
    }
    return {BlossomingTree(std::move(rotations), std::move(edges)), 0};
}

BlossomingTree sample_blossoming(int n, RandomSource& rng) {
    const MarkedSequence a = sample_composition(n, rng);
    const auto shifts = valid_shifts(a);
    const int shift = shifts[rng.below(2)];
    return vec_inverse(shift_blocks(a, shift)).tree;
}

TamariInterval sample_interval(int n, RandomSource& rng) {
    return Psi(sample_blossoming(n, rng));
}

}  // namespace tamari
