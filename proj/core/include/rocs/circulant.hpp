#pragma once

#include <cstdint>
#include <vector>

namespace rocs {

using rank_t = std::int64_t;

// Jump sequence of the circulant communication graph on p ranks, generated by
// iterated halving: s[q] = p, s[k] = ceil(s[k+1] / 2), down to s[0] = 1.
// q = ceil(log2 p) is the number of rounds per communication phase.
struct Skips {
  rank_t p = 0;
  int q = 0;
  std::vector<rank_t> s;  // q+1 entries, strictly increasing for p >= 2

  rank_t at(int k) const { return s[static_cast<std::size_t>(k)]; }
};

// Communication partners of a rank in one round: data flows r -> to and
// from -> r along the skip for that round.
struct Edge {
  rank_t to = 0;    // (r + s[k]) mod p
  rank_t from = 0;  // (r - s[k] + p) mod p
};

// The rank interval [s[level], s[level+1] - 1] containing a given rank.
struct Homerange {
  int level = 0;
  rank_t lo = 0;
  rank_t hi = 0;
};

int ceil_log2(rank_t p);

Skips compute_skips(rank_t p);

Edge neighbors(rank_t r, int k, const Skips& skips);

// Defined for 1 <= r < p; the root has no homerange.
Homerange homerange(rank_t r, const Skips& skips);

}  // namespace rocs
