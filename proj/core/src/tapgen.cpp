#include "grainforge/tapgen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "grainforge/rng.hpp"

namespace grainforge {

std::pair<std::vector<int>, std::vector<int>> p1_s0_lists(int p1, int n0) {
    if (p1 < 1) throw std::invalid_argument("p1 must be >= 1");
    if (n0 < 2 || n0 % 2) throw std::invalid_argument("n0 must be even and >= 2");
    std::vector<int> P1, S0;
    for (int i = 1; i <= p1; ++i) P1.push_back(i);
    for (int i = 1; i <= n0 / 2; ++i) S0.push_back(1 + i * p1);
    for (int i = n0; i >= n0 / 2 + 1; --i) S0.push_back(1 + i * p1);
    return {P1, S0};
}

bool check_cartesian(const std::vector<int>& P1, const std::vector<int>& S0) {
    std::set<int> sums;
    for (int a : P1)
        for (int b : S0) sums.insert(a + b);
    return sums.size() == P1.size() * S0.size();
}

std::pair<std::vector<int>, std::vector<int>> shuffled_disjoint_pick(
    int l, int r1, int r2, const std::vector<int>& avoid, std::uint64_t seed) {
    std::set<int> av(avoid.begin(), avoid.end());
    for (int a : av)
        if (a < 0 || a >= l) throw std::invalid_argument("avoided position out of range");
    if (r1 < 0 || r2 < 0 || r1 + r2 + int(av.size()) > l)
        throw std::invalid_argument("infeasible pick sizes");

    int m = l - int(av.size());
    std::vector<int> arr(m, 0);
    for (int i = 0; i < r1; ++i) arr[i] = 1;
    for (int i = 0; i < r2; ++i) arr[r1 + i] = 2;

    Xorshift64Star rng(seed);
    for (int pass = 0; pass < 4; ++pass)
        for (int i = m - 1; i >= 1; --i)
            std::swap(arr[i], arr[rng.below(std::uint64_t(i) + 1)]);

    // Re-expand to length l with sentinels at the avoided positions.
    std::vector<int> set1, set2;
    int src = 0;
    for (int pos = 0; pos < l; ++pos) {
        if (av.count(pos)) continue;  // sentinel slot
        int mark = arr[src++];
        if (mark == 1) set1.push_back(pos);
        else if (mark == 2) set2.push_back(pos);
    }
    return {set1, set2};
}

TapLists generate_taps(const TapRequest& req) {
    if (req.n0 % 2) throw std::invalid_argument("n0 must be even");
    if (1 + req.n0 * req.p1 > req.kappa1 - req.delta_speed)
        throw std::invalid_argument("1 + n0*p1 exceeds kappa1 - delta");
    for (int a : req.A)
        if (a > req.kappa2 - req.delta_speed)
            throw std::invalid_argument("LFSR tap above kappa2 - delta");

    Xorshift64Star seeder(req.seed);
    std::uint64_t seed_q = seeder.next();
    std::uint64_t seed_n = seeder.next();

    TapLists out;
    std::tie(out.P1, out.S0) = p1_s0_lists(req.p1, req.n0);

    // Q0/Q1 from {0..kappa2-delta} avoiding A (0 is in A, so 0 is excluded).
    auto [q0set, q1set] =
        shuffled_disjoint_pick(req.kappa2 - req.delta_speed + 1, req.q0, req.q1, req.A, seed_q);
    out.Q0 = q0set;
    out.Q1 = q1set;

    // S1 \ {0} and P0 from {0..kappa1-delta} avoiding P1, S0 and 0.
    std::vector<int> avoid = {0};
    avoid.insert(avoid.end(), out.P1.begin(), out.P1.end());
    avoid.insert(avoid.end(), out.S0.begin(), out.S0.end());
    auto [s1set, p0set] = shuffled_disjoint_pick(req.kappa1 - req.delta_speed + 1,
                                                 req.n1 - 1, req.p0, avoid, seed_n);
    out.S1 = {0};
    out.S1.insert(out.S1.end(), s1set.begin(), s1set.end());
    out.P0 = p0set;
    return out;
}

}  // namespace grainforge
