#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wopkit/errors.hpp"

namespace wopkit {

inline constexpr int kMaxAlternatives = 12;

constexpr int num_pairs(int n) { return n * (n - 1); }

// Canonical coordinate of the ordered pair (i,j), i != j, on [n]: row-major
// over i with the diagonal slot skipped. Every matrix, file and report in
// this library uses this layout.
inline int pair_index(int i, int j, int n) {
  if (n < 2 || n > kMaxAlternatives)
    throw ParameterError("pair_index: n must be in [2," + std::to_string(kMaxAlternatives) +
                         "], got " + std::to_string(n));
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw ParameterError("pair_index: invalid pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ") for n=" + std::to_string(n));
  return (i - 1) * (n - 1) + (j < i ? j - 1 : j - 2);
}

// Inverse of pair_index.
inline std::pair<int, int> pair_at(int index, int n) {
  if (n < 2 || n > kMaxAlternatives || index < 0 || index >= num_pairs(n))
    throw ParameterError("pair_at: index " + std::to_string(index) + " out of range for n=" +
                         std::to_string(n));
  const int i = index / (n - 1) + 1;
  const int r = index % (n - 1);
  const int j = r < i - 1 ? r + 1 : r + 2;
  return {i, j};
}

// Competition ranks: entry i is 1 + the number of alternatives strictly
// preferred to i.
struct Ranking {
  std::vector<int> values;

  int size() const { return static_cast<int>(values.size()); }
  int operator[](int alt) const { return values.at(static_cast<std::size_t>(alt - 1)); }
  bool operator==(const Ranking&) const = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(values[k]);
    }
    return s;
  }
};

// A rank multiset is realizable iff, after sorting, the smallest value is 1
// and a value v of multiplicity m is followed by v+m.
inline bool is_realizable(const Ranking& r) {
  const int n = r.size();
  if (n == 0) return false;
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int v : r.values) {
    if (v < 1 || v > n) return false;
    ++count[static_cast<std::size_t>(v)];
  }
  int expected = 1;
  for (int v = 1; v <= n; ++v) {
    if (count[static_cast<std::size_t>(v)] == 0) continue;
    if (v != expected) return false;
    expected = v + count[static_cast<std::size_t>(v)];
  }
  return expected == n + 1;
}

// Ordered list of disjoint nonempty buckets covering [n]. Alternatives in one
// bucket are tied; earlier buckets are strictly preferred to later ones.
class PreferencePartition {
 public:
  explicit PreferencePartition(std::vector<std::vector<int>> buckets)
      : buckets_(std::move(buckets)) {
    if (buckets_.empty()) throw InvariantError("partition: bucket list is empty");
    int total = 0;
    for (auto& b : buckets_) {
      if (b.empty()) throw InvariantError("partition: empty bucket");
      std::sort(b.begin(), b.end());
      total += static_cast<int>(b.size());
    }
    if (total > kMaxAlternatives)
      throw ParameterError("partition: more than " + std::to_string(kMaxAlternatives) +
                           " alternatives");
    n_ = total;
    bucket_of_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int k = 0; k < static_cast<int>(buckets_.size()); ++k) {
      for (int a : buckets_[static_cast<std::size_t>(k)]) {
        if (a < 1 || a > n_ || bucket_of_[static_cast<std::size_t>(a)] != 0)
          throw InvariantError("partition: buckets must partition [n]");
        bucket_of_[static_cast<std::size_t>(a)] = k + 1;
      }
    }
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(buckets_.size()); }

  // 1-based bucket access.
  const std::vector<int>& bucket(int k) const {
    if (k < 1 || k > size()) throw ParameterError("partition: bucket index out of range");
    return buckets_[static_cast<std::size_t>(k - 1)];
  }
  int bucket_of(int alt) const {
    if (alt < 1 || alt > n_) throw ParameterError("partition: alternative out of range");
    return bucket_of_[static_cast<std::size_t>(alt)];
  }
  const std::vector<std::vector<int>>& buckets() const { return buckets_; }

  bool operator==(const PreferencePartition& o) const { return buckets_ == o.buckets_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < buckets_.size(); ++k) {
      if (k) s += '|';
      s += '{';
      for (std::size_t m = 0; m < buckets_[k].size(); ++m) {
        if (m) s += ',';
        s += std::to_string(buckets_[k][m]);
      }
      s += '}';
    }
    return s;
  }

 private:
  std::vector<std::vector<int>> buckets_;
  std::vector<int> bucket_of_;
  int n_ = 0;
};

namespace detail {
class WeakOrderAccess;
}

// Bit vector over the n(n-1) ordered pairs, bit (i,j) set iff i is preferred
// to or tied with j. Total and transitive by construction or by validation.
class WeakOrder {
 public:
  int n() const { return n_; }

  bool bit(int i, int j) const {
    const int idx = pair_index(i, j, n_);
    return (words_[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1u;
  }

  std::vector<bool> bits() const {
    std::vector<bool> out(static_cast<std::size_t>(num_pairs(n_)));
    for (int idx = 0; idx < num_pairs(n_); ++idx)
      out[static_cast<std::size_t>(idx)] = (words_[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1u;
    return out;
  }

  // Validates totality and transitivity.
  static WeakOrder from_bits(int n, const std::vector<bool>& bits) {
    if (n < 1 || n > kMaxAlternatives) throw ParameterError("from_bits: n out of range");
    if (static_cast<int>(bits.size()) != num_pairs(n))
      throw InvariantError("from_bits: expected " + std::to_string(num_pairs(n)) + " bits");
    WeakOrder w(n);
    for (int idx = 0; idx < num_pairs(n); ++idx)
      if (bits[static_cast<std::size_t>(idx)]) w.set(idx);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!w.bit(i, j) && !w.bit(j, i))
          throw InvariantError("from_bits: totality violated at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        for (int k = 1; k <= n; ++k) {
          if (k == i || k == j) continue;
          if (w.bit(i, j) && w.bit(j, k) && !w.bit(i, k))
            throw InvariantError("from_bits: transitivity violated at (" + std::to_string(i) +
                                 "," + std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    return w;
  }

  static WeakOrder from_ranks(const Ranking& r) {
    if (r.size() < 1 || r.size() > kMaxAlternatives)
      throw ParameterError("from_ranks: size out of range");
    if (!is_realizable(r)) throw InvariantError("from_ranks: unrealizable rank vector");
    return from_ranks_unchecked(r);
  }

  bool operator==(const WeakOrder& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator<(const WeakOrder& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return words_ < o.words_;
  }

 private:
  friend class detail::WeakOrderAccess;

  explicit WeakOrder(int n) : n_(n) { words_.fill(0); }

  void set(int idx) { words_[static_cast<std::size_t>(idx >> 6)] |= std::uint64_t{1} << (idx & 63); }

  static WeakOrder from_ranks_unchecked(const Ranking& r) {
    const int n = r.size();
    WeakOrder w(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j && r[i] <= r[j]) w.set(pair_index(i, j, n));
    return w;
  }

  int n_;
  std::array<std::uint64_t, 3> words_;
};

namespace detail {
// Internal factory used where ranks are valid by construction.
class WeakOrderAccess {
 public:
  static WeakOrder from_ranks_unchecked(const Ranking& r) {
    return WeakOrder::from_ranks_unchecked(r);
  }
};
}  // namespace detail

inline WeakOrder to_characteristic(const PreferencePartition& p) {
  Ranking r;
  r.values.assign(static_cast<std::size_t>(p.n()), 0);
  int next = 1;
  for (int k = 1; k <= p.size(); ++k) {
    for (int a : p.bucket(k)) r.values[static_cast<std::size_t>(a - 1)] = next;
    next += static_cast<int>(p.bucket(k).size());
  }
  return detail::WeakOrderAccess::from_ranks_unchecked(r);
}

inline Ranking to_ranking(const WeakOrder& w) {
  const int n = w.n();
  Ranking r;
  r.values.assign(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int preferred = 0;
    for (int j = 1; j <= n; ++j)
      if (j != i && w.bit(i, j)) ++preferred;
    r.values[static_cast<std::size_t>(i - 1)] = n - preferred;
  }
  return r;
}

inline PreferencePartition from_ranking(const Ranking& r) {
  if (r.size() < 1) throw InvariantError("from_ranking: empty rank vector");
  if (!is_realizable(r)) throw InvariantError("from_ranking: unrealizable rank vector");
  const int n = r.size();
  std::vector<std::vector<int>> buckets;
  for (int v = 1; v <= n; ++v) {
    std::vector<int> b;
    for (int i = 1; i <= n; ++i)
      if (r[i] == v) b.push_back(i);
    if (!b.empty()) buckets.push_back(std::move(b));
  }
  return PreferencePartition(std::move(buckets));
}

inline PreferencePartition to_partition(const WeakOrder& w) { return from_ranking(to_ranking(w)); }

// Mirror image: every preference reversed, bucket list reversed.
inline WeakOrder transpose(const WeakOrder& w) {
  const int n = w.n();
  Ranking r = to_ranking(w);
  Ranking t;
  t.values.assign(static_cast<std::size_t>(n), 0);
  // Reversing a weak order maps rank v (group size m) to n + 2 - v - m.
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int v : r.values) ++count[static_cast<std::size_t>(v)];
  for (int i = 1; i <= n; ++i) {
    const int v = r[i];
    t.values[static_cast<std::size_t>(i - 1)] = n + 2 - v - count[static_cast<std::size_t>(v)];
  }
  return detail::WeakOrderAccess::from_ranks_unchecked(t);
}

}  // namespace wopkit
