#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wopkit/enumerate.hpp"
#include "wopkit/inequality.hpp"
#include "wopkit/verify.hpp"

using namespace wopkit;

namespace {

CoeffMap coeffs_of(std::initializer_list<std::pair<PairKey, int>> cs) {
  CoeffMap m;
  for (const auto& [key, c] : cs) m[key] = c;
  return m;
}

// Relabels both coordinates of every coefficient.
Inequality relabel(const Inequality& q, const std::map<int, int>& perm) {
  Inequality out = q;
  out.coeffs.clear();
  for (const auto& [pair, c] : q.coeffs) out.coeffs[{perm.at(pair.first), perm.at(pair.second)}] = c;
  out.fixed.clear();
  for (int f : q.fixed) out.fixed.push_back(perm.at(f));
  return out;
}

bool satisfies(const Inequality& q, const WeakOrder& w) {
  const int v = evaluate(q, w);
  return q.geq ? v >= q.rhs : v <= q.rhs;
}

}  // namespace

TEST_CASE("axiomatic row counts and shapes") {
  const auto rows = axiomatic_inequalities(3);
  int ax1 = 0, ax2 = 0, ax3 = 0;
  for (const auto& q : rows) {
    if (q.tag == IneqClass::AX1) ++ax1;
    if (q.tag == IneqClass::AX2) ++ax2;
    if (q.tag == IneqClass::AX3) ++ax3;
  }
  CHECK(ax1 == 6);
  CHECK(ax2 == 3);
  CHECK(ax3 == 6);
  CHECK(rows.size() == 15u);
  CHECK_THROWS_AS(axiomatic_inequalities(2), ParameterError);

  bool found = false;
  for (const auto& q : axiomatic_inequalities(4))
    if (q.tag == IneqClass::AX3 && q.fixed == std::vector<int>{1, 2, 3}) {
      found = true;
      CHECK(q.geq);
      CHECK(q.rhs == -1);
      CHECK(q.coeffs == coeffs_of({{{1, 2}, 1}, {{1, 3}, -1}, {{3, 2}, -1}}));
    }
  CHECK(found);
}

TEST_CASE("every weak order satisfies every axiomatic row") {
  for (int n : {3, 4}) {
    const auto rows = axiomatic_inequalities(n);
    for (const WeakOrder& w : all_weak_orders(n))
      for (const auto& q : rows) CHECK(satisfies(q, w));
  }
}

TEST_CASE("T1 at its smallest dimension") {
  const Inequality q = make_vi(IneqClass::T1, 4, {1});
  CHECK(q.rhs == 1);
  CHECK(q.coeffs == coeffs_of({{{1, 2}, 1}, {{2, 1}, 1}, {{1, 3}, 1}, {{3, 1}, 1},
                               {{1, 4}, 1}, {{4, 1}, 1}, {{2, 3}, -1}, {{3, 2}, -1},
                               {{2, 4}, -1}, {{4, 2}, -1}, {{3, 4}, -1}, {{4, 3}, -1}}));
}

TEST_CASE("T1 at n=5 is the 20-term row with rhs -1") {
  const Inequality q = make_vi(IneqClass::T1, 5, {1});
  CHECK(q.rhs == -1);
  CHECK(q.coeffs.size() == 20u);
  CoeffMap expected;
  for (int j = 2; j <= 5; ++j) {
    expected[{1, j}] = 1;
    expected[{j, 1}] = 1;
  }
  for (int j = 2; j <= 5; ++j)
    for (int j2 = 2; j2 <= 5; ++j2)
      if (j != j2) expected[{j, j2}] = -1;
  CHECK(q.coeffs == expected);
}

TEST_CASE("make_vi parameter checks") {
  CHECK_THROWS_AS(make_vi(IneqClass::T1, 3, {1}), ParameterError);
  CHECK_THROWS_AS(make_vi(IneqClass::T1, 4, {1, 2}), ParameterError);
  CHECK_THROWS_AS(make_vi(IneqClass::T2_1, 4, {1}), ParameterError);
  CHECK_THROWS_AS(make_vi(IneqClass::T2_1, 4, {2, 2}), ParameterError);
  CHECK_THROWS_AS(make_vi(IneqClass::T2_1, 4, {0, 3}), ParameterError);
  CHECK_THROWS_AS(make_vi(IneqClass::AX1, 4, {1}), ParameterError);
}

TEST_CASE("relabeling commutes with construction") {
  const std::map<int, int> perm = {{1, 3}, {2, 5}, {3, 1}, {4, 2}, {5, 4}};
  for (IneqClass cls : {IneqClass::T1, IneqClass::T2_0, IneqClass::T2_1, IneqClass::T2_2,
                        IneqClass::T2_3, IneqClass::T2_4}) {
    std::vector<int> fixed = fixed_arity(cls) == 1 ? std::vector<int>{1} : std::vector<int>{1, 2};
    std::vector<int> mapped;
    for (int f : fixed) mapped.push_back(perm.at(f));
    CHECK(relabel(make_vi(cls, 5, fixed), perm).coeffs == make_vi(cls, 5, mapped).coeffs);
  }
}

TEST_CASE("the n=4 catalog rows") {
  const auto catalog = wo4_catalog();
  REQUIRE(catalog.size() == 9u);
  CHECK(catalog[1].coeffs == coeffs_of({{{1, 2}, -1}, {{2, 1}, -1}}));
  CHECK(catalog[1].rhs == -1);
  CHECK(catalog[4].rhs == 2);
  CHECK(catalog[4].coeffs.size() == 8u);
  // Catalog rows are valid and tight somewhere.
  for (const auto& q : catalog) {
    int best = -100;
    for (const WeakOrder& w : all_weak_orders(4)) best = std::max(best, evaluate(q, w));
    CHECK(best == q.rhs);
  }
}

TEST_CASE("catalog symmetries: rows 6/7 and 8/9 are coefficient transposes") {
  const auto catalog = wo4_catalog();
  CHECK(transpose(catalog[5]).coeffs == catalog[6].coeffs);
  CHECK(transpose(catalog[7]).coeffs == catalog[8].coeffs);
}

TEST_CASE("fixing n=4 turns the families into the catalog rows") {
  const auto catalog = wo4_catalog();
  CHECK(make_vi(IneqClass::T1, 4, {1}).coeffs == catalog[3].coeffs);
  CHECK(make_vi(IneqClass::T1, 4, {1}).rhs == catalog[3].rhs);
  CHECK(make_vi(IneqClass::T2_0, 4, {1, 2}).coeffs == catalog[4].coeffs);
  CHECK(make_vi(IneqClass::T2_0, 4, {1, 2}).rhs == catalog[4].rhs);
  CHECK(make_vi(IneqClass::T2_1, 4, {1, 2}).coeffs == catalog[5].coeffs);
  CHECK(make_vi(IneqClass::T2_1, 4, {1, 2}).rhs == catalog[5].rhs);
  CHECK(make_vi(IneqClass::T2_2, 4, {1, 2}).coeffs == catalog[6].coeffs);
  CHECK(make_vi(IneqClass::T2_2, 4, {1, 2}).rhs == catalog[6].rhs);
  CHECK(make_vi(IneqClass::T2_3, 4, {1, 2}).coeffs == catalog[8].coeffs);
  CHECK(make_vi(IneqClass::T2_3, 4, {1, 2}).rhs == catalog[8].rhs);
  CHECK(make_vi(IneqClass::T2_4, 4, {1, 2}).coeffs == catalog[7].coeffs);
  CHECK(make_vi(IneqClass::T2_4, 4, {1, 2}).rhs == catalog[7].rhs);
}

TEST_CASE("T2-2 and T2-4 equal their literal expressions") {
  for (int n : {4, 5, 6}) {
    const std::vector<int> fixed = {2, 5 <= n ? 5 : 4};
    const int i1 = fixed[0], i2 = fixed[1];
    CoeffMap eq6, eq8;
    eq6[{i2, i1}] = 1;
    eq8[{i1, i2}] = -1;
    for (int j = 1; j <= n; ++j) {
      if (j == i1 || j == i2) continue;
      eq6[{i1, j}] = 1;
      eq6[{j, i1}] = 1;
      eq6[{i2, j}] = -1;
      eq8[{i1, j}] = 1;
      eq8[{j, i1}] = 1;
      eq8[{j, i2}] = 1;
    }
    for (int j = 1; j <= n; ++j)
      for (int j2 = 1; j2 <= n; ++j2) {
        if (j == j2 || j == i1 || j == i2 || j2 == i1 || j2 == i2) continue;
        eq6[{j, j2}] = -1;
        eq8[{j, j2}] = -1;
      }
    CHECK(make_vi(IneqClass::T2_2, n, fixed).coeffs == eq6);
    CHECK(make_vi(IneqClass::T2_2, n, fixed).rhs == 2 - (n - 3) * (n - 4) / 2);
    CHECK(make_vi(IneqClass::T2_4, n, fixed).coeffs == eq8);
    CHECK(make_vi(IneqClass::T2_4, n, fixed).rhs == 3 - (n - 4) * (n - 5) / 2);
  }
}

TEST_CASE("every unordered pair carries a coefficient in the T families") {
  for (int n : {4, 5, 6}) {
    std::vector<Inequality> instances;
    instances.push_back(make_vi(IneqClass::T1, n, {2}));
    for (IneqClass cls : {IneqClass::T2_0, IneqClass::T2_1, IneqClass::T2_2, IneqClass::T2_3,
                          IneqClass::T2_4})
      instances.push_back(make_vi(cls, n, {1, n}));
    if (n >= 5)
      for (int v = 1; v <= 8; ++v) instances.push_back(make_t3_vi(v, n, {1, 2, 3}));
    for (const auto& q : instances)
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          CHECK(q.coeffs.count({a, b}) + q.coeffs.count({b, a}) >= 1);
  }
}

TEST_CASE("three-fixed-index variants: right-hand sides and validity") {
  CHECK(make_t3_vi(1, 5, {1, 2, 3}).rhs == 4);
  CHECK(make_t3_vi(5, 6, {1, 2, 3}).rhs == 5);
  CHECK_THROWS_AS(make_t3_vi(0, 5, {1, 2, 3}), ParameterError);
  CHECK_THROWS_AS(make_t3_vi(9, 5, {1, 2, 3}), ParameterError);
  CHECK_THROWS_AS(make_t3_vi(1, 4, {1, 2, 3}), ParameterError);
  CHECK_THROWS_AS(make_t3_vi(1, 5, {1, 2}), ParameterError);

  const Inequality q = make_t3_vi(1, 5, {1, 2, 3});
  int best = -100;
  long long scanned = 0;
  for (const WeakOrder& w : all_weak_orders(5)) {
    best = std::max(best, evaluate(q, w));
    ++scanned;
  }
  CHECK(scanned == 541);
  CHECK(best == 4);
}

TEST_CASE("lifting pads with zeros and keeps the right-hand side") {
  const Inequality base = wo4_catalog()[3];  // the T1 instance at n=4
  const Inequality lifted = lift(base, 5);
  CHECK(lifted.n == 5);
  CHECK(lifted.rhs == base.rhs);
  CHECK(lifted.tag == IneqClass::LIFTED);
  CHECK(lifted.origin_tag == IneqClass::WO4);
  CHECK(lifted.origin_n == 4);
  CHECK(lifted.coeffs == base.coeffs);
  int best = -100;
  for (const WeakOrder& w : all_weak_orders(5)) best = std::max(best, evaluate(lifted, w));
  CHECK(best == 1);

  CHECK(lift(lift(base, 5), 6) == lift(base, 6));
  CHECK_THROWS_AS(lift(base, 4), ParameterError);
  CHECK_THROWS_AS(lift(base, 3), ParameterError);
}

TEST_CASE("non-dominance across dimensions for T1") {
  // The higher-dimensional instance has both +1 and -1 coefficients on pairs
  // absent below, so no positive multiple of one row dominates the other.
  const Inequality low = make_vi(IneqClass::T1, 4, {1});
  const Inequality high = make_vi(IneqClass::T1, 5, {1});
  bool has_pos_new = false, has_neg_new = false;
  for (const auto& [pair, c] : high.coeffs) {
    if (low.coeffs.count(pair)) {
      CHECK(low.coeffs.at(pair) == c);
      continue;
    }
    has_pos_new = has_pos_new || c > 0;
    has_neg_new = has_neg_new || c < 0;
  }
  CHECK(has_pos_new);
  CHECK(has_neg_new);
  CHECK(high.rhs < low.rhs);
}

TEST_CASE("class cardinalities: closed forms") {
  CHECK(class_cardinality(IneqClass::WO4, 4) == 4);
  CHECK(class_cardinality(IneqClass::WO5, 4) == 12);
  CHECK(class_cardinality(IneqClass::WO4, 5) == 20);
  CHECK(class_cardinality(IneqClass::WO5, 5) == 60);
  CHECK(class_cardinality(IneqClass::T1, 4) == 4);
  CHECK(class_cardinality(IneqClass::T1, 5) == 25);
  CHECK(class_cardinality(IneqClass::T1, 6) == 96);
  CHECK(class_cardinality(IneqClass::T2_1, 4) == 12);
  CHECK(class_cardinality(IneqClass::T2_1, 5) == 80);
  CHECK_THROWS_AS(class_cardinality(IneqClass::WO1, 4), ParameterError);
  CHECK_THROWS_AS(class_cardinality(IneqClass::AX1, 4), ParameterError);
}

TEST_CASE("class cardinalities agree with instantiation enumeration") {
  // Distinct (coefficients, rhs) pairs over all sub-dimension placements.
  auto count_instances = [](IneqClass cls, int n) {
    std::set<std::pair<CoeffMap, int>> seen;
    const int arity = fixed_arity(cls);
    std::vector<int> members(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) members[static_cast<std::size_t>(i)] = i + 1;
    const int lowest = std::max(4, arity + 2);
    for (int nhat = lowest; nhat <= n; ++nhat) {
      std::vector<char> pick(static_cast<std::size_t>(n), 0);
      std::fill(pick.begin(), pick.begin() + nhat, 1);
      std::sort(pick.begin(), pick.end());
      do {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
          if (pick[static_cast<std::size_t>(i)]) subset.push_back(members[static_cast<std::size_t>(i)]);
        // Every ordered fixed tuple from the subset; the unfixed assignment
        // is symmetric, so duplicates collapse in the set.
        std::vector<int> arrangement = subset;
        do {
          std::vector<int> canon_fixed;
          for (int i = 0; i < arity; ++i) canon_fixed.push_back(i + 1);
          Inequality base = is_t3_class(cls)
                                ? make_t3_vi(static_cast<int>(cls) - static_cast<int>(IneqClass::T3_1) + 1,
                                             nhat, canon_fixed)
                                : make_vi(cls, nhat, canon_fixed);
          std::map<int, int> assign;
          for (int i = 0; i < nhat; ++i) assign[i + 1] = arrangement[static_cast<std::size_t>(i)];
          seen.insert({relabel(base, assign).coeffs, base.rhs});
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return seen.size();
  };
  for (int n : {4, 5, 6}) {
    CHECK(class_cardinality(IneqClass::T1, n) == count_instances(IneqClass::T1, n));
    CHECK(class_cardinality(IneqClass::T2_1, n) == count_instances(IneqClass::T2_1, n));
    CHECK(class_cardinality(IneqClass::T2_3, n) == count_instances(IneqClass::T2_3, n));
  }
  CHECK(class_cardinality(IneqClass::T3_1, 6) == count_instances(IneqClass::T3_1, 6));
}

TEST_CASE("class tags round-trip through strings") {
  for (IneqClass cls : {IneqClass::AX1, IneqClass::T1, IneqClass::T2_0, IneqClass::T2_4,
                        IneqClass::T3_8, IneqClass::WO9, IneqClass::LIFTED, IneqClass::CUSTOM})
    CHECK(ineq_class_from_string(to_string(cls)) == cls);
  CHECK_THROWS_AS(ineq_class_from_string("T4"), ParameterError);
}

TEST_CASE("evaluate checks dimensions") {
  const Inequality q = make_vi(IneqClass::T1, 4, {1});
  CHECK_THROWS_AS(evaluate(q, to_characteristic(PreferencePartition({{1, 2, 3, 4, 5}}))),
                  ParameterError);
}
