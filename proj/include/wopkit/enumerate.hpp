#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wopkit/errors.hpp"
#include "wopkit/weak_order.hpp"

namespace wopkit {

using BigInt = boost::multiprecision::cpp_int;

// Hard cap for exhaustive generation (7087261 weak orders at n = 9).
inline constexpr int kEnumerationGuard = 9;
// Default cap for exhaustive verification scans; callers may raise it up to
// the enumeration guard.
inline constexpr int kDefaultScanGuard = 7;

// Ordered Bell numbers: a(n) = sum_{k=1..n} C(n,k) a(n-k), a(0) = 1.
inline BigInt count_weak_orders(int n) {
  if (n < 0) throw ParameterError("count_weak_orders: n must be nonnegative");
  std::vector<std::vector<BigInt>> choose(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    auto& row = choose[static_cast<std::size_t>(m)];
    row.assign(static_cast<std::size_t>(m) + 1, 1);
    for (int k = 1; k < m; ++k)
      row[static_cast<std::size_t>(k)] = choose[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)] +
                                         choose[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k)];
  }
  std::vector<BigInt> a(static_cast<std::size_t>(n) + 1);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt total = 0;
    for (int k = 1; k <= m; ++k)
      total += choose[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(m - k)];
    a[static_cast<std::size_t>(m)] = total;
  }
  return a[static_cast<std::size_t>(n)];
}

namespace detail {

// Rank vector packed 4 bits per alternative, alternative 1 in the highest
// nibble, so ascending key order is ascending lexicographic rank order.
inline std::uint64_t pack_ranks(const std::vector<int>& rank_of, int n) {
  std::uint64_t key = 0;
  for (int i = 1; i <= n; ++i)
    key = (key << 4) | static_cast<std::uint64_t>(rank_of[static_cast<std::size_t>(i)]);
  return key;
}

inline Ranking unpack_ranks(std::uint64_t key, int n) {
  Ranking r;
  r.values.assign(static_cast<std::size_t>(n), 0);
  for (int i = n; i >= 1; --i) {
    r.values[static_cast<std::size_t>(i - 1)] = static_cast<int>(key & 0xF);
    key >>= 4;
  }
  return r;
}

// Every ordered set partition of [n], as packed rank keys: unordered
// partitions by restricted growth, then all block orderings.
inline std::vector<std::uint64_t> ordered_partition_keys(int n) {
  std::vector<std::uint64_t> keys;
  keys.reserve(1024);
  std::vector<std::vector<int>> blocks;
  std::vector<int> rank_of(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int)> place = [&](int alt) {
    if (alt > n) {
      const int p = static_cast<int>(blocks.size());
      std::vector<int> order(static_cast<std::size_t>(p));
      std::iota(order.begin(), order.end(), 0);
      do {
        int next_rank = 1;
        for (int b : order) {
          for (int a : blocks[static_cast<std::size_t>(b)]) rank_of[static_cast<std::size_t>(a)] = next_rank;
          next_rank += static_cast<int>(blocks[static_cast<std::size_t>(b)].size());
        }
        keys.push_back(pack_ranks(rank_of, n));
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    const std::size_t existing = blocks.size();  // recursion grows the vector
    for (std::size_t b = 0; b < existing; ++b) {
      blocks[b].push_back(alt);
      place(alt + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({alt});
    place(alt + 1);
    blocks.pop_back();
  };
  place(1);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

// Visits every weak order on [n] exactly once, in ascending lexicographic
// order of the rank vector. Deterministic across runs and platforms.
inline void for_each_weak_order(int n, const std::function<void(const WeakOrder&)>& visit) {
  if (n < 1 || n > kEnumerationGuard)
    throw ResourceLimitError("for_each_weak_order: n must be in [1," +
                             std::to_string(kEnumerationGuard) + "], got " + std::to_string(n));
  for (std::uint64_t key : detail::ordered_partition_keys(n))
    visit(detail::WeakOrderAccess::from_ranks_unchecked(detail::unpack_ranks(key, n)));
}

inline std::vector<WeakOrder> all_weak_orders(int n) {
  std::vector<WeakOrder> out;
  for_each_weak_order(n, [&](const WeakOrder& w) { out.push_back(w); });
  return out;
}

// Shared, lazily built copy of the enumeration for scan-heavy callers.
inline const std::vector<WeakOrder>& weak_order_universe(int n) {
  if (n < 1 || n > kEnumerationGuard)
    throw ResourceLimitError("weak_order_universe: n must be in [1," +
                             std::to_string(kEnumerationGuard) + "], got " + std::to_string(n));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<WeakOrder>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<std::vector<WeakOrder>>(all_weak_orders(n));
  return *slot;
}

}  // namespace wopkit
