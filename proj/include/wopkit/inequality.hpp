#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wopkit/enumerate.hpp"
#include "wopkit/errors.hpp"
#include "wopkit/weak_order.hpp"

namespace wopkit {

enum class IneqClass {
  AX1, AX2, AX3,
  T1, T2_0, T2_1, T2_2, T2_3, T2_4,
  T3_1, T3_2, T3_3, T3_4, T3_5, T3_6, T3_7, T3_8,
  WO1, WO2, WO3, WO4, WO5, WO6, WO7, WO8, WO9,
  LIFTED, CUSTOM,
};

inline const char* to_string(IneqClass c) {
  switch (c) {
    case IneqClass::AX1: return "AX1";
    case IneqClass::AX2: return "AX2";
    case IneqClass::AX3: return "AX3";
    case IneqClass::T1: return "T1";
    case IneqClass::T2_0: return "T2-0";
    case IneqClass::T2_1: return "T2-1";
    case IneqClass::T2_2: return "T2-2";
    case IneqClass::T2_3: return "T2-3";
    case IneqClass::T2_4: return "T2-4";
    case IneqClass::T3_1: return "T3-1";
    case IneqClass::T3_2: return "T3-2";
    case IneqClass::T3_3: return "T3-3";
    case IneqClass::T3_4: return "T3-4";
    case IneqClass::T3_5: return "T3-5";
    case IneqClass::T3_6: return "T3-6";
    case IneqClass::T3_7: return "T3-7";
    case IneqClass::T3_8: return "T3-8";
    case IneqClass::WO1: return "WO1";
    case IneqClass::WO2: return "WO2";
    case IneqClass::WO3: return "WO3";
    case IneqClass::WO4: return "WO4";
    case IneqClass::WO5: return "WO5";
    case IneqClass::WO6: return "WO6";
    case IneqClass::WO7: return "WO7";
    case IneqClass::WO8: return "WO8";
    case IneqClass::WO9: return "WO9";
    case IneqClass::LIFTED: return "LIFTED";
    case IneqClass::CUSTOM: return "CUSTOM";
  }
  return "CUSTOM";
}

inline IneqClass ineq_class_from_string(const std::string& s) {
  static const std::map<std::string, IneqClass> table = {
      {"AX1", IneqClass::AX1},   {"AX2", IneqClass::AX2},   {"AX3", IneqClass::AX3},
      {"T1", IneqClass::T1},     {"T2-0", IneqClass::T2_0}, {"T2-1", IneqClass::T2_1},
      {"T2-2", IneqClass::T2_2}, {"T2-3", IneqClass::T2_3}, {"T2-4", IneqClass::T2_4},
      {"T3-1", IneqClass::T3_1}, {"T3-2", IneqClass::T3_2}, {"T3-3", IneqClass::T3_3},
      {"T3-4", IneqClass::T3_4}, {"T3-5", IneqClass::T3_5}, {"T3-6", IneqClass::T3_6},
      {"T3-7", IneqClass::T3_7}, {"T3-8", IneqClass::T3_8}, {"WO1", IneqClass::WO1},
      {"WO2", IneqClass::WO2},   {"WO3", IneqClass::WO3},   {"WO4", IneqClass::WO4},
      {"WO5", IneqClass::WO5},   {"WO6", IneqClass::WO6},   {"WO7", IneqClass::WO7},
      {"WO8", IneqClass::WO8},   {"WO9", IneqClass::WO9},   {"LIFTED", IneqClass::LIFTED},
      {"CUSTOM", IneqClass::CUSTOM},
  };
  auto it = table.find(s);
  if (it == table.end()) throw ParameterError("unknown inequality class: " + s);
  return it->second;
}

inline bool is_t2_class(IneqClass c) {
  return c == IneqClass::T2_0 || c == IneqClass::T2_1 || c == IneqClass::T2_2 ||
         c == IneqClass::T2_3 || c == IneqClass::T2_4;
}

inline bool is_t3_class(IneqClass c) {
  return c >= IneqClass::T3_1 && c <= IneqClass::T3_8;
}

inline int fixed_arity(IneqClass c) {
  if (c == IneqClass::T1) return 1;
  if (is_t2_class(c)) return 2;
  if (is_t3_class(c)) return 3;
  return 0;
}

using PairKey = std::pair<int, int>;
using CoeffMap = std::map<PairKey, int>;

// Sparse integer row pi over the ordered pairs plus right-hand side pi0.
// Sense is pi.x <= rhs unless geq is set (used by the totality and
// transitivity rows, which are kept in their natural >= form).
struct Inequality {
  int n = 0;
  CoeffMap coeffs;
  int rhs = 0;
  bool geq = false;
  IneqClass tag = IneqClass::CUSTOM;
  std::vector<int> fixed;
  // Set by lift(): the class and dimension this row was padded from.
  IneqClass origin_tag = IneqClass::CUSTOM;
  int origin_n = 0;

  bool operator==(const Inequality&) const = default;
};

inline int evaluate(const Inequality& q, const WeakOrder& w) {
  if (q.n != w.n())
    throw ParameterError("evaluate: inequality is over n=" + std::to_string(q.n) +
                         " but point is over n=" + std::to_string(w.n()));
  int total = 0;
  for (const auto& [pair, c] : q.coeffs)
    if (w.bit(pair.first, pair.second)) total += c;
  return total;
}

// Coefficient transpose: pi'(a,b) = pi(b,a).
inline Inequality transpose(const Inequality& q) {
  Inequality out = q;
  out.coeffs.clear();
  for (const auto& [pair, c] : q.coeffs) out.coeffs[{pair.second, pair.first}] = c;
  return out;
}

namespace detail {

inline void check_pair(int a, int n, const char* who) {
  if (a < 1 || a > n) throw ParameterError(std::string(who) + ": index out of range");
}

inline std::vector<int> others(int n, const std::vector<int>& fixed) {
  std::vector<int> out;
  for (int j = 1; j <= n; ++j)
    if (std::find(fixed.begin(), fixed.end(), j) == fixed.end()) out.push_back(j);
  return out;
}

inline void require_fixed(const std::vector<int>& fixed, int arity, int n, const char* who) {
  if (static_cast<int>(fixed.size()) != arity)
    throw ParameterError(std::string(who) + ": expected " + std::to_string(arity) +
                         " fixed indices, got " + std::to_string(fixed.size()));
  for (std::size_t a = 0; a < fixed.size(); ++a) {
    check_pair(fixed[a], n, who);
    for (std::size_t b = a + 1; b < fixed.size(); ++b)
      if (fixed[a] == fixed[b])
        throw ParameterError(std::string(who) + ": fixed indices must be distinct");
  }
}

}  // namespace detail

// The x_ij <= 1 bounds (AX1), totality rows (AX2, >=) and transitivity rows
// (AX3, >=) on [n].
inline std::vector<Inequality> axiomatic_inequalities(int n) {
  if (n < 3) throw ParameterError("axiomatic_inequalities: n must be at least 3");
  std::vector<Inequality> rows;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      Inequality q;
      q.n = n;
      q.tag = IneqClass::AX1;
      q.coeffs[{i, j}] = 1;
      q.rhs = 1;
      q.fixed = {i, j};
      rows.push_back(std::move(q));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Inequality q;
      q.n = n;
      q.tag = IneqClass::AX2;
      q.geq = true;
      q.coeffs[{i, j}] = 1;
      q.coeffs[{j, i}] = 1;
      q.rhs = 1;
      q.fixed = {i, j};
      rows.push_back(std::move(q));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        Inequality q;
        q.n = n;
        q.tag = IneqClass::AX3;
        q.geq = true;
        q.coeffs[{i, j}] = 1;
        q.coeffs[{i, k}] = -1;
        q.coeffs[{k, j}] = -1;
        q.rhs = -1;
        q.fixed = {i, j, k};
        rows.push_back(std::move(q));
      }
    }
  return rows;
}

// The T1 and T2 families. Fixed indices are the caller's labels; the unfixed
// block is everything else. T2-2 and T2-4 are built as coefficient transposes
// of T2-1 and T2-3.
inline Inequality make_vi(IneqClass cls, int n, const std::vector<int>& fixed) {
  if (n < 4) throw ParameterError("make_vi: n must be at least 4");
  if (n > kMaxAlternatives) throw ParameterError("make_vi: n exceeds supported maximum");
  Inequality q;
  q.n = n;
  q.tag = cls;
  q.fixed = fixed;
  switch (cls) {
    case IneqClass::T1: {
      detail::require_fixed(fixed, 1, n, "make_vi(T1)");
      const int i1 = fixed[0];
      for (int j : detail::others(n, fixed)) {
        q.coeffs[{i1, j}] = 1;
        q.coeffs[{j, i1}] = 1;
      }
      for (int j : detail::others(n, fixed))
        for (int j2 : detail::others(n, fixed))
          if (j != j2) q.coeffs[{j, j2}] = -1;
      q.rhs = 2 - (n - 2) * (n - 3) / 2;
      return q;
    }
    case IneqClass::T2_0: {
      detail::require_fixed(fixed, 2, n, "make_vi(T2-0)");
      const int i1 = fixed[0], i2 = fixed[1];
      q.coeffs[{i2, i1}] = 1;
      q.coeffs[{i1, i2}] = -1;
      for (int j : detail::others(n, fixed)) {
        q.coeffs[{i1, j}] = 1;
        q.coeffs[{j, i2}] = 1;
      }
      for (int j : detail::others(n, fixed))
        for (int j2 : detail::others(n, fixed))
          if (j != j2) q.coeffs[{j, j2}] = -1;
      q.rhs = 2 - (n - 4) * (n - 5) / 2;
      return q;
    }
    case IneqClass::T2_1: {
      detail::require_fixed(fixed, 2, n, "make_vi(T2-1)");
      const int i1 = fixed[0], i2 = fixed[1];
      q.coeffs[{i1, i2}] = 1;
      for (int j : detail::others(n, fixed)) {
        q.coeffs[{i1, j}] = 1;
        q.coeffs[{j, i1}] = 1;
        q.coeffs[{j, i2}] = -1;
      }
      for (int j : detail::others(n, fixed))
        for (int j2 : detail::others(n, fixed))
          if (j != j2) q.coeffs[{j, j2}] = -1;
      q.rhs = 2 - (n - 3) * (n - 4) / 2;
      return q;
    }
    case IneqClass::T2_2: {
      Inequality base = make_vi(IneqClass::T2_1, n, fixed);
      q = transpose(base);
      q.tag = IneqClass::T2_2;
      return q;
    }
    case IneqClass::T2_3: {
      detail::require_fixed(fixed, 2, n, "make_vi(T2-3)");
      const int i1 = fixed[0], i2 = fixed[1];
      q.coeffs[{i2, i1}] = -1;
      for (int j : detail::others(n, fixed)) {
        q.coeffs[{i1, j}] = 1;
        q.coeffs[{j, i1}] = 1;
        q.coeffs[{i2, j}] = 1;
      }
      for (int j : detail::others(n, fixed))
        for (int j2 : detail::others(n, fixed))
          if (j != j2) q.coeffs[{j, j2}] = -1;
      q.rhs = 3 - (n - 4) * (n - 5) / 2;
      return q;
    }
    case IneqClass::T2_4: {
      Inequality base = make_vi(IneqClass::T2_3, n, fixed);
      q = transpose(base);
      q.tag = IneqClass::T2_4;
      return q;
    }
    default:
      throw ParameterError(std::string("make_vi: unsupported class ") + to_string(cls));
  }
}

// The eight conjectured three-fixed-index variants. Variants 1-4 carry
// rhs 4 - (n-5)(n-6)/2, variants 5-8 carry rhs 5 - (n-6)(n-7)/2.
inline Inequality make_t3_vi(int variant, int n, const std::vector<int>& fixed) {
  if (variant < 1 || variant > 8) throw ParameterError("make_t3_vi: variant must be in 1..8");
  if (n < 5) throw ParameterError("make_t3_vi: n must be at least 5");
  if (n > kMaxAlternatives) throw ParameterError("make_t3_vi: n exceeds supported maximum");
  detail::require_fixed(fixed, 3, n, "make_t3_vi");
  const int i1 = fixed[0], i2 = fixed[1], i3 = fixed[2];
  Inequality q;
  q.n = n;
  q.tag = static_cast<IneqClass>(static_cast<int>(IneqClass::T3_1) + variant - 1);
  q.fixed = fixed;
  const auto unfixed = detail::others(n, fixed);
  for (int j : unfixed)
    for (int j2 : unfixed)
      if (j != j2) q.coeffs[{j, j2}] = -1;
  auto both = [&](int a) {
    for (int j : unfixed) {
      q.coeffs[{a, j}] = 1;
      q.coeffs[{j, a}] = 1;
    }
  };
  auto into = [&](int a, int c) {  // arcs (j, a) for all unfixed j
    for (int j : unfixed) q.coeffs[{j, a}] = c;
  };
  auto outof = [&](int a, int c) {  // arcs (a, j) for all unfixed j
    for (int j : unfixed) q.coeffs[{a, j}] = c;
  };
  switch (variant) {
    case 1:
      q.coeffs[{i1, i2}] = 1;
      q.coeffs[{i3, i2}] = 1;
      q.coeffs[{i1, i3}] = -1;
      q.coeffs[{i3, i1}] = -1;
      both(i1);
      both(i3);
      into(i2, -1);
      break;
    case 2:
      q.coeffs[{i2, i1}] = 1;
      q.coeffs[{i2, i3}] = 1;
      q.coeffs[{i1, i3}] = -1;
      q.coeffs[{i3, i1}] = -1;
      both(i1);
      both(i3);
      outof(i2, -1);
      break;
    case 3:
      q.coeffs[{i1, i3}] = 1;
      q.coeffs[{i2, i3}] = 1;
      q.coeffs[{i1, i2}] = -1;
      q.coeffs[{i2, i1}] = -1;
      both(i1);
      both(i2);
      into(i3, -1);
      break;
    case 4:
      q.coeffs[{i3, i1}] = 1;
      q.coeffs[{i3, i2}] = 1;
      q.coeffs[{i1, i2}] = -1;
      q.coeffs[{i2, i1}] = -1;
      both(i1);
      both(i2);
      outof(i3, -1);
      break;
    case 5:
      q.coeffs[{i1, i2}] = -1;
      q.coeffs[{i1, i3}] = -1;
      q.coeffs[{i3, i1}] = -1;
      q.coeffs[{i3, i2}] = -1;
      both(i1);
      both(i3);
      into(i2, 1);
      break;
    case 6:
      q.coeffs[{i2, i1}] = -1;
      q.coeffs[{i1, i3}] = -1;
      q.coeffs[{i3, i1}] = -1;
      q.coeffs[{i2, i3}] = -1;
      both(i1);
      both(i3);
      outof(i2, 1);
      break;
    case 7:
      q.coeffs[{i1, i2}] = -1;
      q.coeffs[{i2, i1}] = -1;
      q.coeffs[{i1, i3}] = -1;
      q.coeffs[{i2, i3}] = -1;
      both(i1);
      both(i2);
      into(i3, 1);
      break;
    case 8:
      q.coeffs[{i1, i2}] = -1;
      q.coeffs[{i2, i1}] = -1;
      q.coeffs[{i3, i1}] = -1;
      q.coeffs[{i3, i2}] = -1;
      both(i1);
      both(i2);
      outof(i3, 1);
      break;
  }
  q.rhs = variant <= 4 ? 4 - (n - 5) * (n - 6) / 2 : 5 - (n - 6) * (n - 7) / 2;
  return q;
}

// Zero-padding: coefficients kept on the old pairs, zero on every pair that
// touches a new alternative, right-hand side unchanged.
inline Inequality lift(const Inequality& q, int n_target) {
  if (n_target <= q.n) throw ParameterError("lift: target dimension must exceed the source");
  if (n_target > kMaxAlternatives) throw ParameterError("lift: target exceeds supported maximum");
  Inequality out = q;
  out.n = n_target;
  out.tag = IneqClass::LIFTED;
  out.origin_tag = q.tag == IneqClass::LIFTED ? q.origin_tag : q.tag;
  out.origin_n = q.tag == IneqClass::LIFTED ? q.origin_n : q.n;
  return out;
}

// The nine known facet classes at n = 4, with labels j1..j4 = 1..4.
inline std::vector<Inequality> wo4_catalog() {
  std::vector<Inequality> rows;
  auto add = [&](IneqClass tag, std::initializer_list<std::pair<PairKey, int>> cs, int rhs) {
    Inequality q;
    q.n = 4;
    q.tag = tag;
    q.rhs = rhs;
    for (const auto& [key, c] : cs) q.coeffs[key] = c;
    rows.push_back(std::move(q));
  };
  add(IneqClass::WO1, {{{1, 2}, 1}}, 1);
  add(IneqClass::WO2, {{{1, 2}, -1}, {{2, 1}, -1}}, -1);
  add(IneqClass::WO3, {{{1, 2}, 1}, {{1, 3}, -1}, {{2, 3}, 1}}, 1);
  add(IneqClass::WO4,
      {{{1, 2}, 1}, {{2, 1}, 1}, {{1, 3}, 1}, {{3, 1}, 1}, {{1, 4}, 1}, {{4, 1}, 1},
       {{2, 3}, -1}, {{3, 2}, -1}, {{2, 4}, -1}, {{4, 2}, -1}, {{3, 4}, -1}, {{4, 3}, -1}},
      1);
  add(IneqClass::WO5,
      {{{1, 2}, -1}, {{2, 1}, 1}, {{1, 3}, 1}, {{1, 4}, 1}, {{3, 2}, 1}, {{4, 2}, 1},
       {{3, 4}, -1}, {{4, 3}, -1}},
      2);
  add(IneqClass::WO6,
      {{{1, 2}, 1}, {{1, 3}, 1}, {{3, 1}, 1}, {{1, 4}, 1}, {{4, 1}, 1}, {{3, 2}, -1},
       {{4, 2}, -1}, {{3, 4}, -1}, {{4, 3}, -1}},
      2);
  add(IneqClass::WO7,
      {{{2, 1}, 1}, {{1, 3}, 1}, {{3, 1}, 1}, {{1, 4}, 1}, {{4, 1}, 1}, {{2, 3}, -1},
       {{2, 4}, -1}, {{3, 4}, -1}, {{4, 3}, -1}},
      2);
  add(IneqClass::WO8,
      {{{1, 2}, -1}, {{1, 3}, 1}, {{3, 1}, 1}, {{1, 4}, 1}, {{4, 1}, 1}, {{3, 2}, 1},
       {{4, 2}, 1}, {{3, 4}, -1}, {{4, 3}, -1}},
      3);
  add(IneqClass::WO9,
      {{{2, 1}, -1}, {{1, 3}, 1}, {{3, 1}, 1}, {{1, 4}, 1}, {{4, 1}, 1}, {{2, 3}, 1},
       {{2, 4}, 1}, {{3, 4}, -1}, {{4, 3}, -1}},
      3);
  return rows;
}

namespace detail {

inline BigInt binomial_big(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int m = 1; m <= k; ++m) {
    r *= n - k + m;
    r /= m;
  }
  return r;
}

}  // namespace detail

// Counts of distinct class members on [n]: C(n,4) * |WO4 class| for the
// catalog classes, and, for the T classes with i fixed indices,
// sum over nhat of C(n,nhat) * C(nhat,i) * i! where nhat ranges over the
// dimensions the class is defined in.
inline BigInt class_cardinality(IneqClass cls, int n) {
  if (n < 4) throw ParameterError("class_cardinality: n must be at least 4");
  switch (cls) {
    case IneqClass::WO4: return detail::binomial_big(n, 4) * 4;
    case IneqClass::WO5:
    case IneqClass::WO6:
    case IneqClass::WO7:
    case IneqClass::WO8:
    case IneqClass::WO9: return detail::binomial_big(n, 4) * 12;
    default: break;
  }
  int arity = fixed_arity(cls);
  if (arity == 0)
    throw ParameterError(std::string("class_cardinality: unsupported class ") + to_string(cls));
  BigInt total = 0;
  BigInt arity_fact = 1;
  for (int m = 2; m <= arity; ++m) arity_fact *= m;
  const int lowest = std::max(4, arity + 2);
  for (int nhat = lowest; nhat <= n; ++nhat)
    total += detail::binomial_big(n, nhat) * detail::binomial_big(nhat, arity) * arity_fact;
  // Each three-fixed-index variant is invariant under swapping its two
  // interchangeable fixed indices, so ordered tuples double-count members.
  if (is_t3_class(cls)) total /= 2;
  return total;
}

}  // namespace wopkit
