#pragma once

// Exact uniform sampling of blossoming trees (hence intervals) through the
// block-sequence encoding of edge-marked trees and the cycle lemma.
//
// A marked sequence (a_0, ..., a_{3n+2}) is read as n + 1 blocks
// (l_i, m_i, r_i): the number of children of node i in the left, middle and
// right group, nodes listed in preorder. Around a node the ccw order is
// parent edge, left group, bud, middle group, bud, right group.

#include <cstdint>
#include <vector>

#include "tamari/blossoming.hpp"
#include "tamari/intervals.hpp"

namespace tamari {

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, one add and a mixing
/// function per output. Identical seeds give identical streams.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform integer in [0, bound), bound >= 1 (Lemire's rejection method).
    std::uint64_t below(std::uint64_t bound);
    /// Independent generator seeded from this stream.
    RandomSource split() { return RandomSource(next()); }

private:
    std::uint64_t state_;
};

using MarkedSequence = std::vector<int>;

/// Length 3n+3, non-negative, summing to n - 1.
bool is_composition(const MarkedSequence& a);
/// Additionally every prefix of i + 1 blocks sums to at least i (i < n).
bool is_marked_sequence(const MarkedSequence& a);

/// Uniform weak composition of n - 1 into 3n + 3 parts.
MarkedSequence sample_composition(int n, RandomSource& rng);

/// Rotate blocks so that block `shift` comes first.
MarkedSequence shift_blocks(const MarkedSequence& a, int shift);
/// The block shifts that land in the marked-sequence set; always exactly two.
/// Throws CycleLemmaViolation otherwise.
std::vector<int> valid_shifts(const MarkedSequence& a);

/// All compositions / all marked sequences of size n (small n only).
std::vector<MarkedSequence> enumerate_compositions(int n);
std::vector<MarkedSequence> enumerate_marked_sequences(int n);

struct MarkedBlossomingTree {
    BlossomingTree tree;
    int marked_edge = 0;
};

/// The tour starts at the red end of the marked edge. Throws InvalidBlossoming
/// on a bad edge id.
MarkedSequence vec(const BlossomingTree& b, int marked_edge);
/// Throws InvalidSequence unless is_marked_sequence(s).
MarkedBlossomingTree vec_inverse(const MarkedSequence& s);

BlossomingTree sample_blossoming(int n, RandomSource& rng);
TamariInterval sample_interval(int n, RandomSource& rng);

}  // namespace tamari
