#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "wopkit/errors.hpp"
#include "wopkit/weak_order.hpp"

namespace wopkit {

// Relocation of a tied set I by q = half_steps/2 steps. All of I must sit in
// one bucket k and -k < q < p-k+1 with q != 0. Integer q merges I into the
// bucket at original index k+q; half-integer q inserts I as a new bucket in
// the slot between original buckets floor(k+q) and floor(k+q)+1. An emptied
// source bucket is deleted and the list compacts.
struct MoveSpec {
  std::vector<int> elements;
  int half_steps = 0;
};

inline MoveSpec move_steps(std::vector<int> elements, int steps) {
  return MoveSpec{std::move(elements), 2 * steps};
}

inline PreferencePartition apply_move(const PreferencePartition& p, const MoveSpec& m) {
  if (m.elements.empty()) throw ParameterError("apply_move: empty alternative set");
  const int pcount = p.size();
  const int k = p.bucket_of(m.elements.front());
  for (int a : m.elements)
    if (p.bucket_of(a) != k)
      throw ParameterError("apply_move: alternatives span more than one bucket");
  const int t = m.half_steps;
  if (t == 0) throw ParameterError("apply_move: q must be nonzero");
  if (!(-2 * k < t && t < 2 * (pcount - k + 1)))
    throw ParameterError("apply_move: q out of range for bucket " + std::to_string(k));

  std::vector<int> moved = m.elements;
  std::sort(moved.begin(), moved.end());

  // Keyed slots: original bucket i sits at key 2i, a half-step insertion at
  // key 2*floor(k+q)+1. Target indices refer to the list before removal.
  std::vector<std::pair<int, std::vector<int>>> slots;
  for (int i = 1; i <= pcount; ++i) {
    std::vector<int> rest;
    for (int a : p.bucket(i))
      if (!std::binary_search(moved.begin(), moved.end(), a)) rest.push_back(a);
    if (i == k) {
      if (!rest.empty()) slots.emplace_back(2 * i, std::move(rest));
    } else {
      slots.emplace_back(2 * i, p.bucket(i));
    }
  }
  if (t % 2 == 0) {
    const int target = k + t / 2;  // never k since q != 0
    for (auto& [key, bucket] : slots)
      if (key == 2 * target) {
        bucket.insert(bucket.end(), moved.begin(), moved.end());
        break;
      }
  } else {
    const int floor_slot = k + (t - 1) / 2;
    slots.emplace_back(2 * floor_slot + 1, std::move(moved));
  }
  std::sort(slots.begin(), slots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<int>> buckets;
  buckets.reserve(slots.size());
  for (auto& [key, bucket] : slots) buckets.push_back(std::move(bucket));
  return PreferencePartition(std::move(buckets));
}

}  // namespace wopkit
