#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace grainforge {

struct TapRequest {
    int kappa1 = 0, kappa2 = 0, delta_speed = 1;
    int n0 = 0, n1 = 0, p0 = 0, p1 = 0, q0 = 0, q1 = 0;
    std::vector<int> A;  // fixed LFSR tap set (from the chosen tau)
    std::uint64_t seed = 0;
};

struct TapLists {
    std::vector<int> S0, S1, P0, P1, Q0, Q1;
};

// P1 = (1..p1); S0 ascending 1+i*p1 for the first n0/2 entries, then
// descending from 1+n0*p1. The reversal keeps shifted copies of the
// quadratic pairs from cancelling.
std::pair<std::vector<int>, std::vector<int>> p1_s0_lists(int p1, int n0);

// True iff all pairwise sums of the two lists are distinct.
bool check_cartesian(const std::vector<int>& P1, const std::vector<int>& S0);

// From {0..l-1}, pick two disjoint sets of sizes r1 and r2 avoiding `avoid`:
// an array of length l-|avoid| marked 1/2/0 is shuffled by four complete
// Fisher-Yates passes, then a sentinel is inserted at the avoided positions.
// Deterministic per seed (xorshift64* index selection, rejection-sampled).
std::pair<std::vector<int>, std::vector<int>> shuffled_disjoint_pick(
    int l, int r1, int r2, const std::vector<int>& avoid, std::uint64_t seed);

TapLists generate_taps(const TapRequest& req);

}  // namespace grainforge
