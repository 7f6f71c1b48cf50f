#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wopkit/errors.hpp"
#include "wopkit/inequality.hpp"
#include "wopkit/move.hpp"
#include "wopkit/weak_order.hpp"

namespace wopkit {

enum class RowTag { seed, merge, reverse, outer };

// Ordered list of characteristic vectors with per-row provenance.
struct VectorMatrix {
  int n = 0;
  std::vector<WeakOrder> rows;
  std::vector<RowTag> provenance;

  void append(const WeakOrder& w, RowTag tag) {
    rows.push_back(w);
    provenance.push_back(tag);
  }
  void append(const PreferencePartition& p, RowTag tag) { append(to_characteristic(p), tag); }
  int row_count() const { return static_cast<int>(rows.size()); }
};

// View handed to an outer step between outer iterations of the shell. The
// callback may move alternatives and may record rows; the non-optional
// merge/reverse recording is the shell's own.
struct MrStep {
  int j;                             // outer iteration, 1-based
  int p;                             // bucket count of the seed partition
  const std::vector<int>& seed_set;  // the I0 argument
  PreferencePartition& partition;
  VectorMatrix& matrix;
};

using OuterStep = std::function<void(MrStep&)>;

struct MrResult {
  VectorMatrix matrix;
  PreferencePartition final_partition;
  bool executed = false;  // false iff p_hat exceeded the bucket count
};

// Merge-and-reverse shell: for each outer j the working set is rebound to the
// first bucket, then repeatedly merged one step right and split back out half
// a step, recording both partitions each time; the outer step then runs.
inline MrResult merge_and_reverse(const PreferencePartition& p0, std::vector<int> seed_set,
                                  int p_hat, const OuterStep& outer = {}) {
  if (p_hat < 0) throw ParameterError("merge_and_reverse: p_hat must be nonnegative");
  MrResult result{VectorMatrix{p0.n(), {}, {}}, p0, false};
  const int p = p0.size();
  if (p_hat > p) return result;
  result.executed = true;
  PreferencePartition current = p0;
  for (int j = 1; j <= p_hat; ++j) {
    std::vector<int> working = current.bucket(1);
    for (int k = 1; k <= p - j; ++k) {
      current = apply_move(current, MoveSpec{working, 2});
      result.matrix.append(current, RowTag::merge);
      current = apply_move(current, MoveSpec{working, 1});
      result.matrix.append(current, RowTag::reverse);
    }
    if (outer) {
      MrStep step{j, p, seed_set, current, result.matrix};
      outer(step);
    }
  }
  result.final_partition = current;
  return result;
}

// Outer step that returns the seed set to the front bucket (a j-p step; a
// zero step is skipped). Records nothing.
inline OuterStep front_shift_outer_step(std::vector<int> seed_set) {
  return [seed = std::move(seed_set)](MrStep& st) {
    const int q = st.j - st.p;
    if (q != 0) st.partition = apply_move(st.partition, move_steps(seed, q));
  };
}

// Outer step used by the two-fixed-index procedures: i2 hops half past the
// next bucket, i1 returns to the front, and the result is recorded.
inline OuterStep two_fixed_outer_step(int i1, int i2) {
  return [i1, i2](MrStep& st) {
    st.partition = apply_move(st.partition, MoveSpec{{i2}, 3});
    const int q = st.j - st.p;
    if (q != 0) st.partition = apply_move(st.partition, move_steps({i1}, q));
    st.matrix.append(st.partition, RowTag::outer);
  };
}

namespace detail {

inline void require_rows(const VectorMatrix& m, int n, const char* who) {
  if (m.row_count() != num_pairs(n))
    throw InvariantError(std::string(who) + ": expected " + std::to_string(num_pairs(n)) +
                         " rows, got " + std::to_string(m.row_count()));
}

}  // namespace detail

// Emits n(n-1) rows tight for the T1 inequality fixed at i1.
inline VectorMatrix cpt1(int n, int i1) {
  if (n < 4) throw ParameterError("cpt1: n must be at least 4");
  if (n > kMaxAlternatives) throw ParameterError("cpt1: n exceeds supported maximum");
  if (i1 < 1 || i1 > n) throw ParameterError("cpt1: fixed index out of range");
  std::vector<int> js;
  for (int a = 1; a <= n; ++a)
    if (a != i1) js.push_back(a);

  std::vector<std::vector<int>> buckets;
  buckets.push_back({i1, js[0]});
  for (std::size_t k = 1; k < js.size(); ++k) buckets.push_back({js[k]});
  const PreferencePartition p0{std::move(buckets)};
  const int p = p0.size();

  MrResult mr = merge_and_reverse(p0, {i1}, p, front_shift_outer_step({i1}));
  VectorMatrix m = std::move(mr.matrix);
  PreferencePartition p1 = std::move(mr.final_partition);
  m.append(p1, RowTag::outer);
  for (int j = 1; j <= p - 1; ++j) {
    p1 = apply_move(p1, MoveSpec{p1.bucket(j), 3});
    m.append(p1, RowTag::outer);
  }
  for (int j = 1; j <= p - 1; ++j) {
    p1 = apply_move(p1, move_steps({i1}, -1));
    m.append(p1, RowTag::outer);
  }
  m.append(p0, RowTag::seed);
  detail::require_rows(m, n, "cpt1");
  return m;
}

namespace detail {

// Shared body of the two-fixed-index procedures. The t2_3 flag swaps in the
// alternative opening moves that avoid the structure where both fixed
// alternatives tie for first place.
inline VectorMatrix cpt2_base(int n, int i1, int i2, bool t2_3) {
  std::vector<int> js;
  for (int a = 1; a <= n; ++a)
    if (a != i1 && a != i2) js.push_back(a);

  // Seed buckets: i1, i2, j1, ..., j_{n-4}, then the last two js swapped.
  std::vector<std::vector<int>> buckets;
  buckets.push_back({i1});
  buckets.push_back({i2});
  for (std::size_t k = 0; k + 2 < js.size(); ++k) buckets.push_back({js[k]});
  buckets.push_back({js[js.size() - 1]});
  buckets.push_back({js[js.size() - 2]});
  PreferencePartition part{std::move(buckets)};

  VectorMatrix m{n, {}, {}};
  m.append(part, RowTag::seed);
  part = apply_move(part, MoveSpec{part.bucket(part.size()), -3});
  m.append(part, RowTag::outer);
  if (!t2_3) {
    part = apply_move(part, move_steps({i1}, 1));
    m.append(part, RowTag::outer);
    part = apply_move(part, move_steps(part.bucket(1), 1));
    part = apply_move(part, MoveSpec{{i2}, 1});
    m.append(part, RowTag::outer);
  } else {
    part = apply_move(part, move_steps({i2}, 1));
    m.append(part, RowTag::outer);
    part = apply_move(part, MoveSpec{{i2}, 1});
    part = apply_move(part, move_steps({i1}, 1));
    m.append(part, RowTag::outer);
  }
  const int p = part.size();  // n - 1

  MrResult mr = merge_and_reverse(part, {i1}, p - 2, two_fixed_outer_step(i1, i2));
  for (std::size_t r = 0; r < mr.matrix.rows.size(); ++r)
    m.append(mr.matrix.rows[r], mr.matrix.provenance[r]);
  PreferencePartition p1 = std::move(mr.final_partition);

  p1 = apply_move(p1, move_steps({i2}, -1));
  m.append(p1, RowTag::outer);
  p1 = apply_move(p1, MoveSpec{{i2}, 1});
  for (int j = 1; j <= p - 1; ++j) {
    p1 = apply_move(p1, MoveSpec{p1.bucket(j), 3});
    m.append(p1, RowTag::outer);
  }
  require_rows(m, n, "cpt2");
  return m;
}

inline VectorMatrix transpose_rows(const VectorMatrix& m) {
  VectorMatrix out{m.n, {}, {}};
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    out.append(transpose(m.rows[r]), m.provenance[r]);
  return out;
}

}  // namespace detail

// Emits n(n-1) rows tight for the requested two-fixed-index inequality at
// (i1, i2). The T2-2 and T2-4 matrices are row-wise transposes of the T2-1
// and T2-3 runs.
inline VectorMatrix cpt2(IneqClass variant, int n, int i1, int i2) {
  if (n < 4) throw ParameterError("cpt2: n must be at least 4");
  if (n > kMaxAlternatives) throw ParameterError("cpt2: n exceeds supported maximum");
  if (i1 < 1 || i1 > n || i2 < 1 || i2 > n || i1 == i2)
    throw ParameterError("cpt2: fixed indices must be distinct and in [1,n]");
  switch (variant) {
    case IneqClass::T2_1: return detail::cpt2_base(n, i1, i2, false);
    case IneqClass::T2_3: return detail::cpt2_base(n, i1, i2, true);
    case IneqClass::T2_2: return detail::transpose_rows(detail::cpt2_base(n, i1, i2, false));
    case IneqClass::T2_4: return detail::transpose_rows(detail::cpt2_base(n, i1, i2, true));
    default:
      throw ParameterError(std::string("cpt2: no construction for class ") + to_string(variant));
  }
}

}  // namespace wopkit
