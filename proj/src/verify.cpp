#include "tamari/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tamari/blossoming.hpp"
#include "tamari/counting.hpp"
#include "tamari/error.hpp"
#include "tamari/render.hpp"
#include "tamari/sampler.hpp"
#include "tamari/scan.hpp"

namespace tamari {

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

template <typename T>
std::string str(const T& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

CheckResult run(std::string name, int max_n, const std::function<std::string(int)>& body) {
    CheckResult r{std::move(name), max_n, false, ""};
    try {
        r.detail = body(max_n);
        r.passed = true;
    } catch (const Error& e) {
        r.detail = std::string(error_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    return r;
}

std::vector<std::pair<BinaryTree, BinaryTree>> all_pairs(int n) {
    const auto trees = enumerate_binary_trees(n);
    std::vector<std::pair<BinaryTree, BinaryTree>> out;
    for (const auto& a : trees) {
        for (const auto& b : trees) out.emplace_back(a, b);
    }
    return out;
}

std::string at(const TamariInterval& interval) {
    return " at " + interval.to_string();
}

}  // namespace

CheckResult check_interval_counts(int max_n) {
    return run("interval counts", std::min(max_n, 9), [](int m) {
        for (int n = 1; n <= m; ++n) {
            const auto serial = enumerate_intervals(n);
            expect(BigInt(serial.size()) == count(Family::General, n),
                   "n=" + str(n) + ": enumerated " + str(serial.size()) + ", formula " + count(Family::General, n).str());
            if (n <= 8) {
                const auto parallel = enumerate_intervals_parallel(n);
                expect(parallel == serial, "n=" + str(n) + ": parallel enumeration differs from serial");
            }
        }
        return std::string("enumeration matches the closed formula");
    });
}

CheckResult check_flawed_pairs(int max_n) {
    return run("flawed pairs", std::min(max_n, 6), [](int m) {
        for (int n = 1; n <= m; ++n) {
            for (const auto& [lower, upper] : all_pairs(n)) {
                const bool interval = tamari_leq(lower, upper);
                const MeanderingDiagram d = phi(lower, upper);
                const std::string where = " at " + dyck_from_tree(lower) + "|" + dyck_from_tree(upper);
                expect(smooth_flawed_pairs(lower, upper).empty() == interval, "smooth drawing" + where);
                expect(flawed_pairs(d).empty() == interval, "meandering diagram" + where);
                expect(is_meandering_tree(d) == interval, "meandering tree" + where);
                if (interval) {
                    const auto i = TamariInterval::make(lower, upper);
                    expect(non_kreweras_pairs(d).empty() == is_kreweras(i), "non-Kreweras pairs" + at(i));
                }
            }
        }
        return std::string("interval <=> no flawed pair <=> meandering tree, on all pairs");
    });
}

CheckResult check_round_trips(int max_n) {
    return run("round trips", std::min(max_n, 7), [](int m) {
        for (int n = 1; n <= m; ++n) {
            for (const auto& [lower, upper] : all_pairs(n)) {
                const MeanderingDiagram d = phi(lower, upper);
                const auto back = psi(d);
                expect(back.first == lower && back.second == upper, "psi(phi(X)) != X");
                expect(phi(back.first, back.second) == d, "phi(psi(M)) != M");
            }
            std::set<std::string> encodings;
            for (const auto& i : enumerate_intervals(n)) {
                const BlossomingTree b = Phi(i);
                expect(Psi(b) == i, "Psi(Phi(I)) != I" + at(i));
                const MeanderingDiagram d = phi(i);
                expect(delta(gamma(d)) == d, "delta(gamma(M)) != M" + at(i));
                const Stretch s = stretch(b);
                std::vector<int> edge_map(b.size());
                for (int e = 0; e < b.size(); ++e) edge_map[e] = s.white_of_edge[e] - 1;
                expect(same_plane_tree(b, gamma(s.diagram), s.black_of_node, edge_map), "gamma(delta(B)) != B" + at(i));
                const std::string code = canonical_encode(b);
                expect(canonical_encode(canonical_decode(code)) == code, "decode(encode(B)) != B" + at(i));
                encodings.insert(code);
            }
            expect(BigInt(encodings.size()) == count(Family::General, n), "Phi not injective at n=" + str(n));
        }
        return std::string("phi/psi, gamma/delta and Phi/Psi are mutually inverse");
    });
}

CheckResult check_transfer_lemmas(int max_n) {
    return run("transfer lemmas", std::min(max_n, 8), [](int m) {
        for (int n = 1; n <= m; ++n) {
            const Tally t = tally_parallel(n);  // classify() throws on any disagreement
            for (Family f : kAllFamilies) {
                expect(BigInt(t.family.count(f) ? t.family.at(f) : 0) == count(f, n),
                       std::string(family_name(f)) + " count mismatch at n=" + str(n));
            }
            if (n > 7) continue;
            for (const auto& i : enumerate_intervals(n)) {
                expect(separated_pairs(i, 1).empty() == is_modern(i), "modern <=> no 1-gap" + at(i));
                if (is_trivial(i)) {
                    expect(is_synchronized(i), "trivial interval not synchronized" + at(i));
                }
                if (is_modern(i) && is_synchronized(i)) {
                    expect(is_infinitely_modern(i), "modern synchronized but not infinitely modern" + at(i));
                }
                if (is_modern(i)) {
                    const auto [lo, up] = rise(i);
                    expect(is_new(TamariInterval::make(lo, up)), "rise of a modern interval is not new" + at(i));
                }
            }
        }
        return std::string("direct and blossoming classifiers agree; family counts match formulas");
    });
}

CheckResult check_duality(int max_n) {
    return run("duality", std::min(max_n, 7), [](int m) {
        for (int n = 1; n <= m; ++n) {
            for (const auto& i : enumerate_intervals(n)) {
                const TamariInterval d = dual_interval(i);
                expect(dual_interval(d) == i, "dual is not an involution" + at(i));
                expect(canonical_encode(dual(Phi(i))) == canonical_encode(Phi(d)), "dual(Phi(I)) != Phi(dual(I))" + at(i));
                expect(half_turn(phi(i)) == phi(d), "half turn of phi(I) != phi(dual(I))" + at(i));
                const MeanderingDiagram md = delta(Phi(i));
                expect(is_half_turn_symmetric(Phi(i)) == (half_turn(md) == md), "half-turn symmetry tests differ" + at(i));
                expect(is_synchronized(i) == is_synchronized(d), "duality does not preserve synchronized" + at(i));
            }
            const Tally t = tally_parallel(n);
            for (Family f : kAllFamilies) {
                const BigInt brute = t.self_dual.count(f) ? t.self_dual.at(f) : 0;
                expect(brute == count_self_dual(f, n), std::string(family_name(f)) + " self-dual at n=" + str(n) +
                                                           ": brute " + brute.str() + ", formula " +
                                                           count_self_dual(f, n).str());
            }
        }
        return std::string("dual commutes with Phi; self-dual tallies match the table");
    });
}

CheckResult check_parameter_transfer(int max_n) {
    return run("parameter transfer", std::min(max_n, 7), [](int m) {
        for (int n = 1; n <= m; ++n) {
            for (const auto& i : enumerate_intervals(n)) {
                const BlossomingTree b = Phi(i);
                auto lengths = bi_length_vector(i);
                std::vector<std::pair<int, int>> degrees;
                for (int v = 0; v < b.node_count(); ++v) {
                    const BiDegree d = bi_degree(b, v);
                    degrees.emplace_back(d.blue, d.red);
                }
                std::sort(lengths.begin(), lengths.end());
                std::sort(degrees.begin(), degrees.end());
                expect(lengths == degrees, "bi-length multiset != bi-degree multiset" + at(i));
                expect(node_type_counts(b) == canopy_type_counts(i), "canopy types do not transfer" + at(i));
                const MeanderingDiagram d = phi(i);
                expect(upper_degrees(d) == degree_vector(i.upper()), "upper arc counts != degree vector" + at(i));
                expect(lower_degrees(d) == dual_degree_vector(i.lower()), "lower arc counts != dual degree vector" + at(i));
            }
        }
        return std::string("bi-lengths, bi-degrees and canopy types correspond");
    });
}

CheckResult check_dyck_formulation(int max_n) {
    return run("Dyck formulation", std::min(max_n, 7), [](int m) {
        for (int n = 1; n <= m; ++n) {
            for (const auto& t : enumerate_binary_trees(n)) {
                const std::string w = dyck_from_tree(t);
                expect(contact_vector(w) == degree_vector(t), "contact vector != degree vector at " + w);
                IntVector d = degree_vector(mirror(t));
                std::reverse(d.begin(), d.end());
                expect(descent_vector(w) == d, "descent vector != reversed mirror degree vector at " + w);
            }
            for (const auto& i : enumerate_intervals(n)) {
                const MeanderingDiagram d = phi(i);
                expect(upper_degrees(d) == contact_vector(dyck_from_tree(i.upper())), "upper arcs vs contacts" + at(i));
                expect(lower_degrees(d) == descent_vector(dyck_from_tree(i.lower())), "lower arcs vs descents" + at(i));
            }
        }
        return std::string("contact/descent vectors give the arc degrees");
    });
}

CheckResult check_decomposition(int max_n) {
    return run("recursive decomposition", std::min(max_n, 8), [](int m) {
        for (int n = 1; n <= m; ++n) {
            if (n <= 7) {
                for (const auto& i : enumerate_intervals(n)) {
                    const MeanderingDiagram d = phi(i);
                    const Decomposition parts = decompose(d);
                    expect(compose(parts.left, parts.right, parts.attach) == d, "compose(decompose(M)) != M" + at(i));
                }
            }
            const auto built = meandering_trees_by_composition(n);
            expect(BigInt(built.size()) == count(Family::General, n),
                   "composition count " + str(built.size()) + " at n=" + str(n));
            std::set<MeanderingDiagram> distinct(built.begin(), built.end());
            expect(distinct.size() == built.size(), "composition produced duplicates at n=" + str(n));
            for (const auto& d : built) expect(is_meandering_tree(d), "composition produced a non-tree");
        }
        return std::string("decompose/compose are inverse; recursive count matches");
    });
}

CheckResult check_refined_counts(int max_n) {
    return run("refined counts", std::min(max_n, 7), [](int m) {
        for (int n = 1; n <= 10; ++n) {
            BigInt sum = 0;
            for (int k = 0; k <= n - 1; ++k) sum += count_J(n, k);
            expect(sum == count(Family::General, n), "sum of J_k != I_n at n=" + str(n));
            expect(count(Family::Kreweras, n) == count(Family::InfinitelyModern, n), "Kreweras != inf. modern");
            if (n <= 8) expect(count_J(n, n - 1) == count(Family::Synchronized, n), "J_{n-1} != S_n");
        }
        for (int n = 1; n <= m; ++n) {
            const Tally t = tally_parallel(n);
            for (int k = 0; k <= n + 1; ++k) {
                const BigInt brute = k < static_cast<int>(t.equal_canopy.size()) ? t.equal_canopy[k] : 0;
                expect(brute == count_J(n, k), "J_" + str(k) + "(" + str(n) + ") brute " + brute.str());
            }
            for (int i = 1; i <= n; ++i) {
                const int j = n + 1 - i;
                const auto s = t.synchronized_ij.find({i, j});
                const auto ms = t.modern_synchronized_ij.find({i, j});
                expect(BigInt(s == t.synchronized_ij.end() ? 0 : s->second) == count_sync_ij(i, j),
                       "S_{" + str(i) + "," + str(j) + "} mismatch");
                expect(BigInt(ms == t.modern_synchronized_ij.end() ? 0 : ms->second) == narayana(i, j),
                       "Narayana(" + str(i) + "," + str(j) + ") mismatch");
            }
        }
        return std::string("J_k(n), S_{i,j} and Narayana tallies match");
    });
}

CheckResult check_trivariate(int max_n) {
    return run("trivariate series", std::min(max_n, 7), [](int m) {
        const TrivariateResult series = trivariate_coefficients(m);
        for (int n = 1; n <= m; ++n) {
            const Tally t = tally_parallel(n);
            BigInt total = 0;
            for (const auto& [key, c] : series.coefficients) {
                if (key[0] + key[1] + key[2] != n + 1) continue;
                total += c;
                const auto it = t.canopy.find(key);
                expect(BigInt(it == t.canopy.end() ? 0 : it->second) == c, "I_{i,j,m} mismatch at n=" + str(n));
                const auto sym = series.coefficients.find({key[1], key[0], key[2]});
                expect(sym != series.coefficients.end() && sym->second == c, "F not symmetric in x, y");
            }
            for (const auto& [key, c] : t.canopy) {
                const auto it = series.coefficients.find(key);
                expect(it != series.coefficients.end() && it->second == c, "brute-force class missing from F");
            }
            expect(total == count(Family::General, n), "trivariate total != I_n at n=" + str(n));
        }
        return "coefficients match brute force after " + str(series.rounds) + " rounds";
    });
}

CheckResult check_modern_series(int max_n) {
    return run("modern series", std::max(max_n, 8), [](int m) {
        const ModernSeries s = modern_series_coefficients(m);
        expect(s.c[1] == 1 && s.c[2] == 4, "low-order coefficients of C_m");
        return std::string("C_m matches its closed form; modern counts recovered");
    });
}

CheckResult check_bud_adjacency(int max_n) {
    return run("bud adjacency and closure", std::min(max_n, 7), [](int m) {
        for (int n = 1; n <= m; ++n) {
            for (const auto& i : enumerate_intervals(n)) {
                const BlossomingTree b = Phi(i);
                const ClosureResult c = closure(b);
                expect(c.extremal[0] != c.extremal[1], "unmatched buds on one vertex" + at(i));
                expect(static_cast<int>(c.meandric_path.size()) == 2 * n + 1, "path is not Hamiltonian" + at(i));
                for (std::size_t k = 0; k < c.meandric_path.size(); ++k) {
                    expect((c.meandric_path[k] < b.node_count()) == (k % 2 == 0), "path does not alternate" + at(i));
                }
                if (n > 6) continue;
                const Stretch s = stretch(b);
                for (int e = 0; e < b.size(); ++e) {
                    for (int u : {b.edge(e).blue_end, b.edge(e).red_end}) {
                        const bool adjacent = std::abs(2 * s.black_of_node[u] - (2 * s.white_of_edge[e] - 1)) == 1;
                        expect(adjacent == (b.cw_successor(u, e) == BlossomingTree::kBud), "bud adjacency" + at(i));
                    }
                }
            }
        }
        return std::string("closure leaves two buds; cw bud successors are axis neighbors");
    });
}

CheckResult check_involution(int max_n) {
    return run("involution rho", std::min(max_n, 6), [](int m) {
        for (int n = 1; n <= m; ++n) {
            for (const auto& i : enumerate_intervals(n)) {
                const TamariInterval r = rho(i);
                expect(rho(r) == i, "rho is not an involution" + at(i));
                expect(rho(dual_interval(i)) == dual_interval(r), "rho does not commute with duality" + at(i));
                expect(is_synchronized(i) == is_synchronized(r), "rho does not preserve synchronized" + at(i));
                expect(is_infinitely_modern(i) == is_kreweras(r), "rho does not exchange inf. modern/Kreweras" + at(i));
                expect((is_modern(i) && is_synchronized(i)) == is_trivial(r),
                       "rho does not exchange modern-synchronized/trivial" + at(i));
                const BlossomingTree b = Phi(i);
                expect(canonical_encode(refl(refl(b))) == canonical_encode(b), "refl is not an involution" + at(i));
                expect(canonical_encode(dual(refl(b))) == canonical_encode(refl(dual(b))), "dual and refl differ" + at(i));
            }
        }
        return std::string("rho exchanges the families as claimed");
    });
}

CheckResult check_sampler_encoding(int max_n) {
    return run("sampler encoding", std::min(max_n, 5), [](int m) {
        for (int n = 1; n <= m; ++n) {
            const auto compositions = enumerate_compositions(n);
            const auto sequences = enumerate_marked_sequences(n);
            std::size_t shifts = 0;
            for (const auto& a : compositions) shifts += valid_shifts(a).size();
            expect(shifts == 2 * compositions.size(), "cycle lemma count at n=" + str(n));
            expect(shifts == static_cast<std::size_t>(n + 1) * sequences.size(), "2-to-(n+1) correspondence");
            std::map<std::string, int> multiplicity;
            for (const auto& s : sequences) {
                const MarkedBlossomingTree t = vec_inverse(s);
                expect(vec(t.tree, t.marked_edge) == s, "vec(vec_inverse(s)) != s");
                ++multiplicity[canonical_encode(t.tree)];
            }
            std::map<std::string, int> expected;
            for (const auto& i : enumerate_intervals(n)) expected[canonical_encode(Phi(i))] = n;
            expect(multiplicity == expected, "forget-mark multiset differs at n=" + str(n));
        }
        return std::string("vec is a bijection; every tree appears n times");
    });
}

CheckResult check_rendering(int max_n) {
    return run("rendering", std::min(max_n, 5), [](int m) {
        for (int n = 1; n <= m; ++n) {
            for (const auto& i : enumerate_intervals(n)) {
                const Figure a = render_meandering(phi(i));
                const Figure b = render_smooth(i);
                const Figure c = render_blossoming(Phi(i));
                expect(arcs_disjoint(a) && arcs_disjoint(b) && arcs_disjoint(c), "crossing arcs" + at(i));
                expect(render_blossoming(Phi(i)).svg == c.svg, "non-deterministic output" + at(i));
                expect(a.arcs.size() == static_cast<std::size_t>(2 * n), "meandering arc count" + at(i));
            }
        }
        return std::string("arcs meet only at endpoints; output deterministic");
    });
}

std::vector<CheckResult> run_verify(int max_n) {
    return {check_interval_counts(max_n), check_flawed_pairs(max_n),     check_round_trips(max_n),
            check_transfer_lemmas(max_n), check_duality(max_n),          check_parameter_transfer(max_n),
            check_dyck_formulation(max_n), check_decomposition(max_n),   check_refined_counts(max_n),
            check_trivariate(max_n),      check_modern_series(max_n),    check_bud_adjacency(max_n),
            check_involution(max_n),      check_sampler_encoding(max_n), check_rendering(max_n)};
}

}  // namespace tamari
