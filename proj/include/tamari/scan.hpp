#pragma once

// Exhaustive scans over all intervals of a size: enumeration and the
// brute-force tally. Each has a serial reference and an OpenMP version that
// must return identical results.

#include <vector>

#include "tamari/counting.hpp"
#include "tamari/intervals.hpp"

namespace tamari {

constexpr int kDefaultTallyCap = 8;

struct Classification {
    std::map<Family, bool> family;
    bool trivial = false;
    bool self_dual = false;
    CanopyCounts canopy;
    int equal_canopy = 0;  ///< leaves where the two canopies agree
};

/// Direct classification of one interval, cross-checked against the pattern
/// classifiers on Phi(I). Throws OracleDisagreement on any mismatch.
Classification classify(const TamariInterval& interval);

std::vector<TamariInterval> enumerate_intervals_parallel(int n, int cap = kDefaultIntervalCap);

Tally tally_serial(int n, int cap = kDefaultTallyCap);
Tally tally_parallel(int n, int cap = kDefaultTallyCap);
inline Tally tally(int n, int cap = kDefaultTallyCap) { return tally_parallel(n, cap); }

}  // namespace tamari
