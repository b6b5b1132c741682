#pragma once

// Walk enumeration by explicit depth-first search over step sequences. Shares
// no code with the DP kernels; exponential, so only for short lengths.

#include <cstdint>
#include <vector>

#include "stripwalk/oracle.hpp"

namespace stripwalk::testing {

struct BruteForceQuery {
  long width;
  long from;
  long to;
  bool irreducible = false;
};

namespace detail {

inline void dfs(const WalkModel& m, const BruteForceQuery& q, long x, long h, long max_len, long floor_height,
                std::vector<std::uint64_t>& out) {
  for (const Step& s : m.steps()) {
    const long nx = x + static_cast<long>(s.dx);
    const long nh = h + s.dy;
    if (nx > max_len || nh < 0 || nh > q.width) continue;
    if (nh == q.to) ++out[static_cast<std::size_t>(nx)];
    // an irreducible walk dies on reaching the floor after its start
    if (q.irreducible && nh == floor_height) continue;
    dfs(m, q, nx, nh, max_len, floor_height, out);
  }
}

}  // namespace detail

// out[L] = number of walks of x-length L, for L = 0..max_len.
inline std::vector<std::uint64_t> brute_force_counts(const WalkModel& m, const BruteForceQuery& q, long max_len) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(max_len) + 1);
  if (!q.irreducible && q.from == q.to) out[0] = 1;
  detail::dfs(m, q, 0, q.from, max_len, std::min(q.from, q.to), out);
  return out;
}

}  // namespace stripwalk::testing
