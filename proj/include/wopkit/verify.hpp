#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wopkit/enumerate.hpp"
#include "wopkit/errors.hpp"
#include "wopkit/inequality.hpp"
#include "wopkit/rank.hpp"
#include "wopkit/weak_order.hpp"

namespace wopkit {

using Fraction = boost::multiprecision::cpp_rational;

// A ranking-structure match: class, structure number within its table, and
// the witness bindings.
struct StructureId {
  IneqClass cls = IneqClass::CUSTOM;
  int number = 0;
  int k = 0;
  int j1 = 0;
  int j2 = 0;
  int j3 = 0;

  bool operator==(const StructureId&) const = default;

  std::string label() const { return std::string(to_string(cls)) + "#" + std::to_string(number); }
};

inline bool has_ranking_structures(IneqClass cls) {
  return cls == IneqClass::T1 || is_t2_class(cls);
}

namespace detail {

struct StructureContext {
  int n;
  Ranking r;
  std::vector<int> unfixed;

  std::vector<int> unfixed_at(int rank_value) const {
    std::vector<int> out;
    for (int j : unfixed)
      if (r[j] == rank_value) out.push_back(j);
    return out;
  }

  // The unfixed alternatives outside `used` must be pairwise untied and avoid
  // the banned rank values.
  bool rest_strict(const std::vector<int>& used, const std::vector<int>& banned) const {
    std::vector<int> seen;
    for (int j : unfixed) {
      if (std::find(used.begin(), used.end(), j) != used.end()) continue;
      const int v = r[j];
      if (std::find(banned.begin(), banned.end(), v) != banned.end()) return false;
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) return false;
      seen.push_back(v);
    }
    return true;
  }
};

inline StructureContext structure_context(const WeakOrder& w, const std::vector<int>& fixed) {
  StructureContext ctx{w.n(), to_ranking(w), {}};
  for (int j = 1; j <= w.n(); ++j)
    if (std::find(fixed.begin(), fixed.end(), j) == fixed.end()) ctx.unfixed.push_back(j);
  return ctx;
}

inline std::vector<StructureId> classify_t1(const StructureContext& ctx, int i1) {
  std::vector<StructureId> out;
  const int k = ctx.r[i1];
  const auto tied = ctx.unfixed_at(k);
  if (tied.size() == 1 && ctx.rest_strict(tied, {k, k + 1}))
    out.push_back({IneqClass::T1, 1, k, tied[0], 0, 0});
  if (tied.size() == 2 && ctx.rest_strict(tied, {k, k + 1, k + 2}))
    out.push_back({IneqClass::T1, 2, k, tied[0], tied[1], 0});
  return out;
}

inline std::vector<StructureId> classify_t2_0(const StructureContext& ctx, int i1, int i2) {
  std::vector<StructureId> out;
  const int n = ctx.n;
  if (ctx.r[i1] != 1) return out;
  const auto top = ctx.unfixed_at(1);
  if (ctx.r[i2] == n) {
    if (top.empty() && ctx.rest_strict({}, {1, n}))
      out.push_back({IneqClass::T2_0, 1, 0, 0, 0, 0});
    if (top.size() == 1 && ctx.rest_strict(top, {1, 2, n}))
      out.push_back({IneqClass::T2_0, 2, 0, top[0], 0, 0});
  }
  if (ctx.r[i2] == n - 1) {
    const auto bottom = ctx.unfixed_at(n - 1);
    if (top.empty() && bottom.size() == 1 && ctx.rest_strict(bottom, {1, n - 1, n}))
      out.push_back({IneqClass::T2_0, 3, 0, 0, bottom[0], 0});
    if (top.size() == 1 && bottom.size() == 1 &&
        ctx.rest_strict({top[0], bottom[0]}, {1, 2, n - 1, n}))
      out.push_back({IneqClass::T2_0, 4, 0, top[0], bottom[0], 0});
  }
  return out;
}

inline std::vector<StructureId> classify_t2_1(const StructureContext& ctx, int i1, int i2) {
  std::vector<StructureId> out;
  const auto top = ctx.unfixed_at(1);
  if (ctx.r[i1] == 1 && ctx.r[i2] == 2 && top.empty() && ctx.rest_strict({}, {1, 2}))
    out.push_back({IneqClass::T2_1, 1, 0, 0, 0, 0});
  if (ctx.r[i1] == 1 && ctx.r[i2] == 1 && top.empty() && ctx.rest_strict({}, {1, 2}))
    out.push_back({IneqClass::T2_1, 2, 0, 0, 0, 0});
  if (ctx.r[i1] == 1 && ctx.r[i2] == 3 && top.size() == 1 && ctx.rest_strict(top, {1, 2, 3}))
    out.push_back({IneqClass::T2_1, 3, 0, top[0], 0, 0});
  if (ctx.r[i1] == 1 && ctx.r[i2] == 1 && top.size() == 1 && ctx.rest_strict(top, {1, 2, 3}))
    out.push_back({IneqClass::T2_1, 4, 0, top[0], 0, 0});
  if (ctx.r[i2] == 1 && ctx.r[i1] != 1) {
    const int k = ctx.r[i1];
    const auto tied = ctx.unfixed_at(k);
    if (tied.size() == 1 && ctx.rest_strict(tied, {1, k, k + 1}))
      out.push_back({IneqClass::T2_1, 5, k, tied[0], 0, 0});
    if (tied.size() == 2 && ctx.rest_strict(tied, {1, k, k + 1, k + 2}))
      out.push_back({IneqClass::T2_1, 6, k, tied[0], tied[1], 0});
  }
  return out;
}

inline std::vector<StructureId> classify_t2_3(const StructureContext& ctx, int i1, int i2) {
  std::vector<StructureId> out;
  const auto top = ctx.unfixed_at(1);
  if (ctx.r[i1] == 1 && ctx.r[i2] == 2 && top.empty()) {
    const auto second = ctx.unfixed_at(2);
    if (second.empty() && ctx.rest_strict({}, {1, 2}))
      out.push_back({IneqClass::T2_3, 1, 0, 0, 0, 0});
    if (second.size() == 1 && ctx.rest_strict(second, {1, 2, 3}))
      out.push_back({IneqClass::T2_3, 2, 0, second[0], 0, 0});
  }
  if (ctx.r[i1] == 1 && ctx.r[i2] == 3 && top.size() == 1) {
    const auto third = ctx.unfixed_at(3);
    if (third.empty() && ctx.rest_strict(top, {1, 2, 3}))
      out.push_back({IneqClass::T2_3, 3, 0, top[0], 0, 0});
    if (third.size() == 1 && ctx.rest_strict({top[0], third[0]}, {1, 2, 3, 4}))
      out.push_back({IneqClass::T2_3, 4, 0, top[0], third[0], 0});
  }
  if (ctx.r[i1] == 1 && ctx.r[i2] == 1) {
    if (top.size() == 1 && ctx.rest_strict(top, {1, 2, 3}))
      out.push_back({IneqClass::T2_3, 5, 0, top[0], 0, 0});
    if (top.size() == 2 && ctx.rest_strict(top, {1, 2, 3, 4}))
      out.push_back({IneqClass::T2_3, 6, 0, top[0], top[1], 0});
  }
  if (ctx.r[i2] == 1 && ctx.r[i1] != 1) {
    const int k = ctx.r[i1];
    const auto tied = ctx.unfixed_at(k);
    if (top.empty()) {
      if (tied.size() == 1 && ctx.rest_strict(tied, {1, k, k + 1}))
        out.push_back({IneqClass::T2_3, 7, k, tied[0], 0, 0});
      if (tied.size() == 2 && ctx.rest_strict(tied, {1, k, k + 1, k + 2}))
        out.push_back({IneqClass::T2_3, 9, k, tied[0], tied[1], 0});
    }
    if (top.size() == 1 && k != 2) {
      if (tied.size() == 1 && ctx.rest_strict({tied[0], top[0]}, {1, 2, k, k + 1}))
        out.push_back({IneqClass::T2_3, 8, k, tied[0], top[0], 0});
      if (tied.size() == 2 &&
          ctx.rest_strict({tied[0], tied[1], top[0]}, {1, 2, k, k + 1, k + 2}))
        out.push_back({IneqClass::T2_3, 10, k, tied[0], tied[1], top[0]});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const StructureId& a, const StructureId& b) { return a.number < b.number; });
  return out;
}

}  // namespace detail

// All ranking structures the point matches for the given class; table order.
// T2-2 and T2-4 points classify against the T2-1 and T2-3 structures after
// transposition (the mirrored structures).
inline std::vector<StructureId> classify_structures_all(IneqClass cls,
                                                        const std::vector<int>& fixed,
                                                        const WeakOrder& w) {
  if (!has_ranking_structures(cls))
    throw ParameterError(std::string("classify_structure: no ranking structures for class ") +
                         to_string(cls));
  detail::require_fixed(fixed, fixed_arity(cls), w.n(), "classify_structure");
  if (cls == IneqClass::T2_2 || cls == IneqClass::T2_4) {
    const IneqClass base = cls == IneqClass::T2_2 ? IneqClass::T2_1 : IneqClass::T2_3;
    auto matches = classify_structures_all(base, fixed, transpose(w));
    for (auto& m : matches) m.cls = cls;
    return matches;
  }
  const auto ctx = detail::structure_context(w, fixed);
  switch (cls) {
    case IneqClass::T1: return detail::classify_t1(ctx, fixed[0]);
    case IneqClass::T2_0: return detail::classify_t2_0(ctx, fixed[0], fixed[1]);
    case IneqClass::T2_1: return detail::classify_t2_1(ctx, fixed[0], fixed[1]);
    case IneqClass::T2_3: return detail::classify_t2_3(ctx, fixed[0], fixed[1]);
    default: return {};
  }
}

// First matching structure in table order, or nothing.
inline std::optional<StructureId> classify_structure(IneqClass cls, const std::vector<int>& fixed,
                                                     const WeakOrder& w) {
  auto all = classify_structures_all(cls, fixed, w);
  if (all.empty()) return std::nullopt;
  return all.front();
}

struct ValidityScan {
  int extreme = 0;  // max of the lhs for <=-sense rows, min for >=-sense rows
  std::vector<WeakOrder> arg_extreme;
  bool valid = false;
};

namespace detail {

inline void check_guard(int n, int guard, const char* who) {
  const int cap = std::min(guard, kEnumerationGuard);
  if (n > cap)
    throw ResourceLimitError(std::string(who) + ": n=" + std::to_string(n) +
                             " exceeds the scan guard " + std::to_string(cap));
}

}  // namespace detail

// Exhaustive scan of the full enumeration for the binding extreme of the row.
inline ValidityScan check_validity(const Inequality& q, int guard = kDefaultScanGuard) {
  detail::check_guard(q.n, guard, "check_validity");
  ValidityScan scan;
  bool first = true;
  for (const WeakOrder& w : weak_order_universe(q.n)) {
    const int value = evaluate(q, w);
    const bool better = first || (q.geq ? value < scan.extreme : value > scan.extreme);
    if (better) {
      scan.extreme = value;
      scan.arg_extreme.clear();
    }
    if (value == scan.extreme) scan.arg_extreme.push_back(w);
    first = false;
  }
  scan.valid = q.geq ? scan.extreme >= q.rhs : scan.extreme <= q.rhs;
  return scan;
}

inline std::vector<WeakOrder> tight_set(const Inequality& q, int guard = kDefaultScanGuard) {
  detail::check_guard(q.n, guard, "tight_set");
  std::vector<WeakOrder> tight;
  for (const WeakOrder& w : weak_order_universe(q.n))
    if (evaluate(q, w) == q.rhs) tight.push_back(w);
  return tight;
}

struct FacetReport {
  IneqClass tag = IneqClass::CUSTOM;
  int n = 0;
  std::vector<int> fixed;
  bool geq = false;
  int rhs = 0;
  long long enumeration_size = 0;
  bool valid = false;
  int max_lhs = 0;  // binding extreme in the row's own sense
  long long tight_count = 0;
  int affine_rank = 0;
  bool is_facet = false;
  std::map<std::string, long long> structure_census;
  long long unclassified = 0;
};

// One full pass over the enumeration: validity, tight set, exact affine rank
// of the tight set, facet flag, and (for the classes with ranking-structure
// tables) the per-structure census.
inline FacetReport facet_report(const Inequality& q, int guard = kDefaultScanGuard,
                                bool with_census = true) {
  detail::check_guard(q.n, guard, "facet_report");
  FacetReport rep;
  rep.tag = q.tag;
  rep.n = q.n;
  rep.fixed = q.fixed;
  rep.geq = q.geq;
  rep.rhs = q.rhs;
  const IneqClass census_cls = q.tag == IneqClass::LIFTED ? q.origin_tag : q.tag;
  const bool census = with_census && has_ranking_structures(census_cls) &&
                      q.tag != IneqClass::LIFTED &&
                      static_cast<int>(q.fixed.size()) == fixed_arity(census_cls);
  std::vector<WeakOrder> tight;
  bool first = true;
  for (const WeakOrder& w : weak_order_universe(q.n)) {
    ++rep.enumeration_size;
    const int value = evaluate(q, w);
    if (first || (q.geq ? value < rep.max_lhs : value > rep.max_lhs)) rep.max_lhs = value;
    first = false;
    if (value == q.rhs) {
      tight.push_back(w);
      if (census) {
        auto s = classify_structure(census_cls, q.fixed, w);
        if (s)
          ++rep.structure_census[s->label()];
        else
          ++rep.unclassified;
      }
    }
  }
  rep.valid = q.geq ? rep.max_lhs >= q.rhs : rep.max_lhs <= q.rhs;
  rep.tight_count = static_cast<long long>(tight.size());
  rep.affine_rank = tight.empty() ? 0 : affine_rank(tight);
  rep.is_facet = rep.valid && rep.affine_rank == num_pairs(q.n);
  return rep;
}

struct SeparationResult {
  Inequality cut;
  Fraction violation;
};

namespace detail {

inline Fraction fractional_lhs(const Inequality& q, const std::vector<Fraction>& point) {
  Fraction total = 0;
  for (const auto& [pair, c] : q.coeffs)
    total += Fraction(c) * point[static_cast<std::size_t>(pair_index(pair.first, pair.second, q.n))];
  return total;
}

}  // namespace detail

// Scans the axiomatic rows plus every (class, fixed) instantiation of the
// requested T families and returns the most violated row, if any. Ties go to
// the earliest class tag, then to the lexicographically smallest fixed tuple.
inline std::optional<SeparationResult> separate(const std::vector<Fraction>& point, int n,
                                                const std::vector<IneqClass>& families) {
  if (n < 3 || n > kMaxAlternatives) throw ParameterError("separate: n out of range");
  if (static_cast<int>(point.size()) != num_pairs(n))
    throw ParameterError("separate: point has wrong dimension");
  for (const Fraction& v : point)
    if (v < 0 || v > 1) throw ParameterError("separate: point entries must lie in [0,1]");

  std::optional<SeparationResult> best;
  auto consider = [&](const Inequality& q) {
    const Fraction lhs = detail::fractional_lhs(q, point);
    const Fraction violation = q.geq ? Fraction(q.rhs) - lhs : lhs - Fraction(q.rhs);
    if (violation <= 0) return;
    if (!best || violation > best->violation) best = SeparationResult{q, violation};
  };

  for (const auto& q : axiomatic_inequalities(n)) consider(q);

  std::vector<IneqClass> wanted = families;
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  for (IneqClass cls : wanted) {
    const int arity = fixed_arity(cls);
    if (arity == 0)
      throw ParameterError(std::string("separate: unsupported family ") + to_string(cls));
    if (cls == IneqClass::T1) {
      if (n < 4) continue;
      for (int i1 = 1; i1 <= n; ++i1) consider(make_vi(cls, n, {i1}));
    } else if (is_t2_class(cls)) {
      if (n < 4) continue;
      for (int i1 = 1; i1 <= n; ++i1)
        for (int i2 = 1; i2 <= n; ++i2)
          if (i1 != i2) consider(make_vi(cls, n, {i1, i2}));
    } else {
      if (n < 5) continue;
      const int variant = static_cast<int>(cls) - static_cast<int>(IneqClass::T3_1) + 1;
      for (int i1 = 1; i1 <= n; ++i1)
        for (int i2 = 1; i2 <= n; ++i2)
          for (int i3 = 1; i3 <= n; ++i3)
            if (i1 != i2 && i1 != i3 && i2 != i3)
              consider(make_t3_vi(variant, n, {i1, i2, i3}));
    }
  }
  return best;
}

}  // namespace wopkit
