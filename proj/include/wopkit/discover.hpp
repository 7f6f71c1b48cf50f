#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wopkit/enumerate.hpp"
#include "wopkit/errors.hpp"
#include "wopkit/inequality.hpp"
#include "wopkit/rank.hpp"
#include "wopkit/verify.hpp"
#include "wopkit/weak_order.hpp"

namespace wopkit {

// Coefficients a group symbol places on the two orientations of its arcs:
// `out` on (fixed, other), `in` on (other, fixed).
struct GroupSymbol {
  int out = 0;
  int in = 0;
  bool operator==(const GroupSymbol&) const = default;
};

// The seven uniform format-and-orientation choices for a fixed-to-unfixed
// arc group.
inline constexpr std::array<GroupSymbol, 7> kFixedGroupSymbols = {{
    {0, 0}, {1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1},
}};

// The seven choices for the arcs joining two fixed alternatives. Same-format
// bidirectional pairs are dropped in favour of the two mixed-format ones,
// which the featured two-fixed-index classes require.
inline constexpr std::array<GroupSymbol, 7> kPairSymbols = {{
    {0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, -1}, {-1, 1},
}};

inline std::string symbol_name(GroupSymbol s) {
  if (s == GroupSymbol{0, 0}) return "none";
  if (s == GroupSymbol{1, 0}) return "+out";
  if (s == GroupSymbol{0, 1}) return "+in";
  if (s == GroupSymbol{1, 1}) return "+both";
  if (s == GroupSymbol{-1, 0}) return "-out";
  if (s == GroupSymbol{0, -1}) return "-in";
  if (s == GroupSymbol{-1, -1}) return "-both";
  if (s == GroupSymbol{1, -1}) return "+out-in";
  if (s == GroupSymbol{-1, 1}) return "-out+in";
  return "?";
}

// Arc-group assignment for a candidate left-hand side. `fixed_group[t]` is
// the A^{i_t, j} group, `pair[s]` the slot for the fixed pairs in the order
// (i1,i2), (i1,i3), (i2,i3). The unfixed block is dashed-bidirectional in
// every enumerated template; a hand-built template may clear it.
struct Template {
  int num_fixed = 1;
  std::array<GroupSymbol, 3> fixed_group{};
  std::array<GroupSymbol, 3> pair{};
  GroupSymbol unfixed{-1, -1};

  bool operator==(const Template&) const = default;
};

inline std::vector<Template> enumerate_templates(int num_fixed) {
  std::vector<Template> out;
  if (num_fixed == 1) {
    for (GroupSymbol g : kFixedGroupSymbols) {
      Template t;
      t.num_fixed = 1;
      t.fixed_group[0] = g;
      out.push_back(t);
    }
  } else if (num_fixed == 2) {
    for (GroupSymbol g1 : kFixedGroupSymbols)
      for (GroupSymbol g2 : kFixedGroupSymbols)
        for (GroupSymbol pr : kPairSymbols) {
          Template t;
          t.num_fixed = 2;
          t.fixed_group[0] = g1;
          t.fixed_group[1] = g2;
          t.pair[0] = pr;
          out.push_back(t);
        }
  } else {
    throw ParameterError("enumerate_templates: num_fixed must be 1 or 2");
  }
  return out;
}

inline CoeffMap template_lhs(const Template& t, int n, const std::vector<int>& fixed) {
  if (t.num_fixed < 1 || t.num_fixed > 3)
    throw ParameterError("template_lhs: num_fixed must be in 1..3");
  if (n < t.num_fixed + 2) throw ParameterError("template_lhs: n too small for this template");
  if (n > kMaxAlternatives) throw ParameterError("template_lhs: n exceeds supported maximum");
  detail::require_fixed(fixed, t.num_fixed, n, "template_lhs");
  if (t.unfixed.out != t.unfixed.in)
    throw ParameterError("template_lhs: the unfixed block is orientation-symmetric");
  CoeffMap coeffs;
  const auto unfixed = detail::others(n, fixed);
  auto put = [&](int a, int b, int c) {
    if (c != 0) coeffs[{a, b}] = c;
  };
  for (int tix = 0; tix < t.num_fixed; ++tix)
    for (int j : unfixed) {
      put(fixed[static_cast<std::size_t>(tix)], j, t.fixed_group[static_cast<std::size_t>(tix)].out);
      put(j, fixed[static_cast<std::size_t>(tix)], t.fixed_group[static_cast<std::size_t>(tix)].in);
    }
  static constexpr std::array<std::pair<int, int>, 3> kSlots = {{{0, 1}, {0, 2}, {1, 2}}};
  const int slot_count = t.num_fixed == 2 ? 1 : (t.num_fixed == 3 ? 3 : 0);
  for (int s = 0; s < slot_count; ++s) {
    const int a = fixed[static_cast<std::size_t>(kSlots[static_cast<std::size_t>(s)].first)];
    const int b = fixed[static_cast<std::size_t>(kSlots[static_cast<std::size_t>(s)].second)];
    put(a, b, t.pair[static_cast<std::size_t>(s)].out);
    put(b, a, t.pair[static_cast<std::size_t>(s)].in);
  }
  for (int j : unfixed)
    for (int j2 : unfixed)
      if (j != j2) put(j, j2, t.unfixed.out);
  return coeffs;
}

// Inverse of template_lhs: reads the group symbols back out of a coefficient
// map, or nothing when the map does not decompose into uniform groups.
inline std::optional<Template> template_from_coefficients(const CoeffMap& coeffs, int n,
                                                          const std::vector<int>& fixed) {
  const int arity = static_cast<int>(fixed.size());
  if (arity < 1 || arity > 3 || n < arity + 2) return std::nullopt;
  Template t;
  t.num_fixed = arity;
  const auto unfixed = detail::others(n, fixed);
  auto at = [&](int a, int b) {
    auto it = coeffs.find({a, b});
    return it == coeffs.end() ? 0 : it->second;
  };
  for (int tix = 0; tix < arity; ++tix) {
    const int f = fixed[static_cast<std::size_t>(tix)];
    GroupSymbol g{at(f, unfixed.front()), at(unfixed.front(), f)};
    for (int j : unfixed)
      if (at(f, j) != g.out || at(j, f) != g.in) return std::nullopt;
    t.fixed_group[static_cast<std::size_t>(tix)] = g;
  }
  static constexpr std::array<std::pair<int, int>, 3> kSlots = {{{0, 1}, {0, 2}, {1, 2}}};
  const int slot_count = arity == 2 ? 1 : (arity == 3 ? 3 : 0);
  for (int s = 0; s < slot_count; ++s) {
    const int a = fixed[static_cast<std::size_t>(kSlots[static_cast<std::size_t>(s)].first)];
    const int b = fixed[static_cast<std::size_t>(kSlots[static_cast<std::size_t>(s)].second)];
    t.pair[static_cast<std::size_t>(s)] = GroupSymbol{at(a, b), at(b, a)};
  }
  const int u = at(unfixed.front(), unfixed[1]);
  for (int j : unfixed)
    for (int j2 : unfixed)
      if (j != j2 && at(j, j2) != u) return std::nullopt;
  t.unfixed = GroupSymbol{u, u};
  if (template_lhs(t, n, fixed) != coeffs) return std::nullopt;
  return t;
}

struct MaxResult {
  int value = 0;
  std::vector<WeakOrder> arg_max;
};

// Exact maximum of the candidate objective over every weak order; the
// enumeration is the feasible set, so no integer program is needed.
inline MaxResult max_over_weak_orders(const CoeffMap& coeffs, int n,
                                      int guard = kDefaultScanGuard) {
  if (n < 2) throw ParameterError("max_over_weak_orders: n must be at least 2");
  detail::check_guard(n, guard, "max_over_weak_orders");
  for (const auto& [pair, c] : coeffs) pair_index(pair.first, pair.second, n);
  MaxResult result;
  bool first = true;
  for (const WeakOrder& w : weak_order_universe(n)) {
    int value = 0;
    for (const auto& [pair, c] : coeffs)
      if (w.bit(pair.first, pair.second)) value += c;
    if (first || value > result.value) {
      result.value = value;
      result.arg_max.clear();
      first = false;
    }
    if (value == result.value) result.arg_max.push_back(w);
  }
  return result;
}

inline std::vector<int> canonical_fixed(int num_fixed) {
  std::vector<int> fixed(static_cast<std::size_t>(num_fixed));
  for (int i = 0; i < num_fixed; ++i) fixed[static_cast<std::size_t>(i)] = i + 1;
  return fixed;
}

// Exact quadratic right-hand-side law rhs(n) = a + b n + c n^2 with the
// fit/holdout verdict attached.
struct RhsLaw {
  Fraction a, b, c;
  std::vector<int> fit_ns;
  std::vector<int> fit_values;
  std::vector<int> holdout_ns;
  std::vector<int> holdout_values;
  bool confirmed = false;
};

inline Fraction rhs_law_value(const RhsLaw& law, int n) {
  return law.a + law.b * n + law.c * n * n;
}

// Interpolates the observed maxima on at least three consecutive dimensions
// and re-solves the holdouts. A sequence that is not quadratic, or a failed
// holdout, yields confirmed = false rather than an error.
inline RhsLaw infer_rhs(const Template& t, const std::vector<int>& fit_ns,
                        const std::vector<int>& holdout_ns, int guard = kDefaultScanGuard) {
  if (fit_ns.size() < 3) throw ParameterError("infer_rhs: need at least 3 fit dimensions");
  for (std::size_t i = 1; i < fit_ns.size(); ++i)
    if (fit_ns[i] != fit_ns[i - 1] + 1)
      throw ParameterError("infer_rhs: fit dimensions must be consecutive");
  RhsLaw law;
  law.fit_ns = fit_ns;
  law.holdout_ns = holdout_ns;
  const auto fixed = canonical_fixed(t.num_fixed);
  for (int n : fit_ns)
    law.fit_values.push_back(max_over_weak_orders(template_lhs(t, n, fixed), n, guard).value);
  const int n0 = fit_ns[0];
  const int y0 = law.fit_values[0], y1 = law.fit_values[1], y2 = law.fit_values[2];
  law.c = Fraction(y0 - 2 * y1 + y2) / 2;
  law.b = Fraction(y1 - y0) - law.c * (2 * n0 + 1);
  law.a = Fraction(y0) - law.b * n0 - law.c * n0 * n0;
  law.confirmed = true;
  for (std::size_t i = 0; i < fit_ns.size(); ++i)
    if (rhs_law_value(law, fit_ns[i]) != law.fit_values[i]) law.confirmed = false;
  for (int n : holdout_ns) {
    const int observed = max_over_weak_orders(template_lhs(t, n, fixed), n, guard).value;
    law.holdout_values.push_back(observed);
    if (rhs_law_value(law, n) != observed) law.confirmed = false;
  }
  return law;
}

struct TemplateReport {
  int index = 0;
  Template tmpl;
  int max_value = 0;
  long long tight_count = 0;
  int affine_rank = 0;
  bool is_facet = false;
  // Equivalence annotations: enumeration indices of the coefficient-transpose
  // image and of the fixed-index-swapped image (-1 when outside the list).
  int transpose_partner = -1;
  int swap_partner = -1;
};

namespace detail {

inline Template transpose_template(const Template& t) {
  Template out = t;
  for (auto& g : out.fixed_group) std::swap(g.out, g.in);
  for (auto& p : out.pair) std::swap(p.out, p.in);
  return out;
}

inline Template swap_fixed_template(const Template& t) {
  Template out = t;
  if (t.num_fixed == 2) {
    std::swap(out.fixed_group[0], out.fixed_group[1]);
    std::swap(out.pair[0].out, out.pair[0].in);
  }
  return out;
}

inline int template_lookup(const std::vector<Template>& all, const Template& t) {
  auto it = std::find(all.begin(), all.end(), t);
  return it == all.end() ? -1 : static_cast<int>(it - all.begin());
}

}  // namespace detail

// Instantiates every template at the canonical fixed tuple, maximizes over
// the enumeration, and rank-checks the tight set. Work is split across
// `jobs` threads; results land by template index, so the report is
// deterministic regardless of thread count.
inline std::vector<TemplateReport> facet_scan(int num_fixed, int n,
                                              int guard = kDefaultScanGuard, int jobs = 1) {
  const auto templates = enumerate_templates(num_fixed);
  const auto fixed = canonical_fixed(num_fixed);
  if (n < num_fixed + 2) throw ParameterError("facet_scan: n too small");
  detail::check_guard(n, guard, "facet_scan");
  weak_order_universe(n);  // build once before fanning out
  std::vector<TemplateReport> reports(templates.size());
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      TemplateReport rep;
      rep.index = static_cast<int>(i);
      rep.tmpl = templates[i];
      const CoeffMap coeffs = template_lhs(templates[i], n, fixed);
      MaxResult mr = max_over_weak_orders(coeffs, n, guard);
      rep.max_value = mr.value;
      rep.tight_count = static_cast<long long>(mr.arg_max.size());
      rep.affine_rank = affine_rank(mr.arg_max);
      rep.is_facet = rep.affine_rank == num_pairs(n);
      rep.transpose_partner = detail::template_lookup(templates, detail::transpose_template(templates[i]));
      rep.swap_partner = detail::template_lookup(templates, detail::swap_fixed_template(templates[i]));
      reports[i] = std::move(rep);
    }
  };
  const int workers = std::max(1, jobs);
  if (workers == 1 || templates.size() < 2) {
    run_range(0, templates.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (templates.size() + static_cast<std::size_t>(workers) - 1) /
                              static_cast<std::size_t>(workers);
    for (std::size_t begin = 0; begin < templates.size(); begin += chunk)
      pool.emplace_back(run_range, begin, std::min(begin + chunk, templates.size()));
    for (auto& th : pool) th.join();
  }
  return reports;
}

}  // namespace wopkit
