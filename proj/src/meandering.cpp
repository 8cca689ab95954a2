#include "tamari/meandering.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "tamari/error.hpp"

namespace tamari {

MeanderingDiagram::MeanderingDiagram(std::vector<int> up, std::vector<int> lo)
    : up_(std::move(up)), lo_(std::move(lo)) {
    const int n = static_cast<int>(up_.size());
    if (static_cast<int>(lo_.size()) != n) {
        throw Error(ErrorCode::InvalidDiagram, "up and lo must have the same length");
    }
    for (int t = 1; t <= n; ++t) {
        if (this->up(t) < 0 || this->up(t) > t - 1) {
            throw Error(ErrorCode::InvalidDiagram, "up[" + std::to_string(t) + "] out of range");
        }
        if (this->lo(t) < t || this->lo(t) > n) {
            throw Error(ErrorCode::InvalidDiagram, "lo[" + std::to_string(t) + "] out of range");
        }
    }
    for (int s = 1; s <= n; ++s) {
        for (int t = s + 1; t <= n; ++t) {
            if (!(this->up(t) <= this->up(s) || this->up(t) >= s)) {
                throw Error(ErrorCode::InvalidDiagram, "upper arcs cross");
            }
            if (!(this->lo(s) <= t - 1 || this->lo(s) >= this->lo(t))) {
                throw Error(ErrorCode::InvalidDiagram, "lower arcs cross");
            }
        }
    }
}

std::string MeanderingDiagram::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = size();
    j["up"] = up_;
    j["lo"] = lo_;
    return j.dump();
}

MeanderingDiagram MeanderingDiagram::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("bad diagram JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("up") || !j.contains("lo")) {
        throw Error(ErrorCode::ParseError, "diagram JSON needs \"up\" and \"lo\" arrays");
    }
    std::vector<int> up, lo;
    try {
        up = j.at("up").get<std::vector<int>>();
        lo = j.at("lo").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad diagram JSON: ") + e.what());
    }
    if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<int>() != static_cast<int>(up.size()))) {
        throw Error(ErrorCode::ParseError, "\"n\" does not match the array lengths");
    }
    return MeanderingDiagram(std::move(up), std::move(lo));
}

std::vector<std::pair<int, int>> underlying_edges(const MeanderingDiagram& m) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m.size());
    for (int t = 1; t <= m.size(); ++t) edges.emplace_back(m.up(t), m.lo(t));
    return edges;
}

MeanderingDiagram phi(const BinaryTree& lower, const BinaryTree& upper) {
    if (lower.size() != upper.size()) {
        throw Error(ErrorCode::SizeMismatch, "phi needs trees of equal size");
    }
    const IntVector a = bracket_vector(lower);
    const IntVector b = dual_bracket_vector(upper);
    const int n = lower.size();
    std::vector<int> up(n), lo(n);
    for (int t = 1; t <= n; ++t) {
        lo[t - 1] = t + a[t - 1];
        up[t - 1] = t - 1 - b[t - 1];
    }
    return MeanderingDiagram(std::move(up), std::move(lo));
}

std::pair<BinaryTree, BinaryTree> psi(const MeanderingDiagram& m) {
    const int n = m.size();
    IntVector a(n), b(n);
    for (int t = 1; t <= n; ++t) {
        a[t - 1] = m.lo(t) - t;
        b[t - 1] = t - 1 - m.up(t);
    }
    return {tree_from_bracket_vector(a), tree_from_dual_bracket_vector(b)};
}

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

bool is_meandering_tree(const MeanderingDiagram& m) {
    UnionFind uf(m.size() + 1);
    for (int t = 1; t <= m.size(); ++t) {
        if (!uf.unite(m.up(t), m.lo(t))) return false;
    }
    return true;
}

std::vector<ArcPair> flawed_pairs(const MeanderingDiagram& m) {
    std::vector<ArcPair> out;
    for (int s = 1; s <= m.size(); ++s) {
        for (int t = s + 1; t <= m.size(); ++t) {
            if (m.up(t) <= s - 1 && t <= m.lo(s)) out.push_back({s, t});
        }
    }
    return out;
}

std::vector<ArcPair> non_kreweras_pairs(const MeanderingDiagram& m) {
    std::vector<ArcPair> out;
    for (int s = 1; s <= m.size(); ++s) {
        for (int t = s + 1; t <= m.size(); ++t) {
            if (s <= m.up(t) && m.up(t) < m.lo(s) && m.lo(s) <= t - 1) out.push_back({s, t});
        }
    }
    return out;
}

std::vector<int> upper_degrees(const MeanderingDiagram& m) {
    std::vector<int> d(m.size() + 1, 0);
    for (int x : m.ups()) ++d[x];
    return d;
}

std::vector<int> lower_degrees(const MeanderingDiagram& m) {
    std::vector<int> d(m.size() + 1, 0);
    for (int x : m.los()) ++d[x];
    return d;
}

MeanderingDiagram half_turn(const MeanderingDiagram& m) {
    const int n = m.size();
    std::vector<int> up(n), lo(n);
    for (int t = 1; t <= n; ++t) {
        up[t - 1] = n - m.lo(n + 1 - t);
        lo[t - 1] = n - m.up(n + 1 - t);
    }
    return MeanderingDiagram(std::move(up), std::move(lo));
}

Decomposition decompose(const MeanderingDiagram& m) {
    const int n = m.size();
    if (n < 1 || !is_meandering_tree(m)) {
        throw Error(ErrorCode::NotATree, "decompose needs a meandering tree of size >= 1");
    }
    int cut = 0;  // white point of the outermost upper arc from black point 0
    for (int t = 1; t <= n; ++t) {
        if (m.up(t) == 0) cut = t;
    }
    const int i = cut - 1;
    std::vector<int> lup, llo;
    for (int t = 1; t <= i; ++t) {
        lup.push_back(m.up(t));
        llo.push_back(m.lo(t));
    }
    std::vector<int> rup, rlo;
    for (int t = cut + 1; t <= n; ++t) {
        rup.push_back(m.up(t) - cut);
        rlo.push_back(m.lo(t) - cut);
    }
    return {MeanderingDiagram(std::move(lup), std::move(llo)),
            MeanderingDiagram(std::move(rup), std::move(rlo)), m.lo(cut) - cut};
}

std::vector<int> free_attach_points(const MeanderingDiagram& m) {
    std::vector<int> out;
    for (int j = 0; j <= m.size(); ++j) {
        bool enclosed = false;
        for (int t = 1; t <= m.size() && !enclosed; ++t) enclosed = t <= j && j < m.lo(t);
        if (!enclosed) out.push_back(j);
    }
    return out;
}

MeanderingDiagram compose(const MeanderingDiagram& left, const MeanderingDiagram& right, int attach) {
    const auto free = free_attach_points(right);
    if (std::find(free.begin(), free.end(), attach) == free.end()) {
        throw Error(ErrorCode::InvalidDecomposition,
                    "attach point " + std::to_string(attach) + " is not free in the right part");
    }
    const int shift = left.size() + 1;
    std::vector<int> up = left.ups();
    std::vector<int> lo = left.los();
    up.push_back(0);
    lo.push_back(shift + attach);
    for (int t = 1; t <= right.size(); ++t) {
        up.push_back(right.up(t) + shift);
        lo.push_back(right.lo(t) + shift);
    }
    return MeanderingDiagram(std::move(up), std::move(lo));
}

std::vector<MeanderingDiagram> meandering_trees_by_composition(int n) {
    std::vector<std::vector<MeanderingDiagram>> table{{MeanderingDiagram()}};
    for (int size = 1; size <= n; ++size) {
        std::vector<MeanderingDiagram> trees;
        for (int left = 0; left < size; ++left) {
            for (const auto& r : table[size - 1 - left]) {
                const auto free = free_attach_points(r);
                for (const auto& l : table[left]) {
                    for (int j : free) trees.push_back(compose(l, r, j));
                }
            }
        }
        table.push_back(std::move(trees));
    }
    return table[n];
}

}  // namespace tamari
