#include "tamari/scan.hpp"

#include <exception>
#include <mutex>

#include <omp.h>

#include "tamari/blossoming.hpp"
#include "tamari/error.hpp"

namespace tamari {

namespace {

void agree(bool direct, bool pattern, std::string_view what, const TamariInterval& interval) {
    if (direct != pattern) {
        throw Error(ErrorCode::OracleDisagreement,
                    std::string(what) + " classifiers disagree on " + interval.to_string());
    }
}

void add(Tally& t, const Classification& c) {
    ++t.total;
    for (const auto& [f, member] : c.family) {
        if (!member) continue;
        ++t.family[f];
        if (c.self_dual) ++t.self_dual[f];
    }
    ++t.canopy[{c.canopy.s11, c.canopy.s00, c.canopy.m10}];
    const std::size_t k = static_cast<std::size_t>(c.equal_canopy - 2);
    if (t.equal_canopy.size() <= k) t.equal_canopy.resize(k + 1, 0);
    ++t.equal_canopy[k];
    if (c.family.at(Family::Synchronized)) ++t.synchronized_ij[{c.canopy.s11, c.canopy.s00}];
    if (c.family.at(Family::ModernSynchronized)) ++t.modern_synchronized_ij[{c.canopy.s11, c.canopy.s00}];
}

void check_cap(int n, int cap) {
    if (n < 1 || n > cap) {
        throw Error(ErrorCode::SizeCapExceeded,
                    "scan size " + std::to_string(n) + " outside [1, " + std::to_string(cap) + "]");
    }
}

}  // namespace

Classification classify(const TamariInterval& interval) {
    Classification c;
    for (Family f : kAllFamilies) c.family[f] = in_family(interval, f);
    c.trivial = is_trivial(interval);
    c.self_dual = is_self_dual(interval);
    c.canopy = canopy_type_counts(interval);
    c.equal_canopy = c.canopy.s11 + c.canopy.s00;

    const BlossomingTree b = Phi(interval);
    if (!(Psi(b) == interval)) {
        throw Error(ErrorCode::OracleDisagreement, "Psi(Phi(I)) != I for " + interval.to_string());
    }
    agree(c.family[Family::Synchronized], is_synchronized_tree(b), "synchronized", interval);
    agree(c.family[Family::Modern], is_modern_tree(b), "modern", interval);
    agree(c.family[Family::InfinitelyModern], is_infinitely_modern_tree(b), "infinitely modern", interval);
    agree(c.family[Family::InfinitelyModern], is_infinitely_modern_by_rising(interval), "infinitely modern (rise)",
          interval);
    agree(c.family[Family::Kreweras], is_kreweras_tree(b), "kreweras", interval);
    agree(c.trivial, trivial_bud_position_check(b), "trivial", interval);
    agree(c.self_dual, is_half_turn_symmetric(b), "self-dual", interval);
    if (!(node_type_counts(b) == c.canopy)) {
        throw Error(ErrorCode::OracleDisagreement, "canopy types do not transfer for " + interval.to_string());
    }
    return c;
}

std::vector<TamariInterval> enumerate_intervals_parallel(int n, int cap) {
    if (n < 1 || n > cap) {
        throw Error(ErrorCode::SizeCapExceeded,
                    "interval size " + std::to_string(n) + " outside [1, " + std::to_string(cap) + "]");
    }
    const auto trees = enumerate_binary_trees(n, std::max(cap, kDefaultTreeCap));
    const int count = static_cast<int>(trees.size());
    std::vector<IntVector> brackets(count);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < count; ++i) brackets[i] = bracket_vector(trees[i]);

    // One bucket per lower tree keeps the serial output order.
    std::vector<std::vector<int>> uppers(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            bool leq = true;
            for (int k = 0; k < n && leq; ++k) leq = brackets[i][k] <= brackets[j][k];
            if (leq) uppers[i].push_back(j);
        }
    }
    std::vector<TamariInterval> out;
    for (int i = 0; i < count; ++i) {
        for (int j : uppers[i]) out.push_back(TamariInterval::make(trees[i], trees[j]));
    }
    return out;
}

Tally tally_serial(int n, int cap) {
    check_cap(n, cap);
    Tally t;
    t.n = n;
    for (const auto& interval : enumerate_intervals(n, std::max(cap, kDefaultIntervalCap))) add(t, classify(interval));
    return t;
}

Tally tally_parallel(int n, int cap) {
    check_cap(n, cap);
    const auto intervals = enumerate_intervals_parallel(n, std::max(cap, kDefaultIntervalCap));
    const long long count = static_cast<long long>(intervals.size());
    Tally total;
    total.n = n;
    std::exception_ptr failure;
    std::mutex mutex;
#pragma omp parallel
    {
        Tally local;
#pragma omp for schedule(dynamic, 64)
        for (long long i = 0; i < count; ++i) {
            try {
                add(local, classify(intervals[i]));
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!failure) failure = std::current_exception();
            }
        }
        std::lock_guard lock(mutex);
        total.merge(local);
    }
    if (failure) std::rethrow_exception(failure);
    return total;
}

}  // namespace tamari
