#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "qpart/oracle.hpp"
#include "qpart/search.hpp"
#include "qpart/serialize.hpp"

using namespace qpart;

namespace {

const std::vector<std::int64_t> kFields{2, 3, 5, 6, 7, 13, 17, 21};

std::set<std::string> rendered(const std::vector<QElement>& v, const FieldId& f) {
  std::set<std::string> s;
  for (const QElement& e : v) s.insert(render(e, f));
  return s;
}

json unit_rows() {
  std::ifstream in(QPART_FIXTURES);
  const json doc = json::parse(in);
  for (const json& fx : doc.at("fixtures"))
    if (fx.at("kind") == "unit_table") return fx.at("rows");
  return json::array();
}

}  // namespace

TEST(FindKmax, Examples) {
  PartitionGrid g2(build_context(FieldId(2)));
  EXPECT_EQ(find_kmax(g2, 11), 6);
  EXPECT_EQ(find_kmax(g2, 10), 5);
  EXPECT_EQ(find_kmax(g2, 1), 1);
  PartitionGrid g7(build_context(FieldId(7)));
  const std::int64_t k = find_kmax(g7, 4);
  EXPECT_GE(g7.at(k, 0), 4);
  EXPECT_LT(g7.at(k - 1, 0), 4);
  EXPECT_EQ(k, 4);  // p_K(3) = 3, p_K(4) = 5 for D = 7
  EXPECT_THROW(find_kmax(g7, 0), InvalidArgument);
}

TEST(FindYmax, MatchesReferenceChoices) {
  for (const json& row : unit_rows()) {
    const FieldId f(row.at("D").get<std::int64_t>());
    PartitionGrid grid(build_context(f));
    const std::int64_t y = find_ymax(grid, 11);
    EXPECT_EQ(y, row.at("y_max").get<std::int64_t>()) << "D=" << f.D();
    EXPECT_GE(y, to_i64(floor_ratio_eps(grid.context())));
    EXPECT_EQ(grid.value(ky_element(0, make_int(y), f)), integer_from_json(row.at("corner")));
    if (y > to_i64(floor_ratio_eps(grid.context()))) {
      EXPECT_LT(grid.value(ky_element(0, make_int(y - 1), f)), 11);
    }
  }
}

TEST(FundamentalDomain, BoundaryIsInclusive) {
  const FieldContext c2 = build_context(FieldId(2));
  EXPECT_TRUE(in_fundamental_domain({6, 3}, c2));  // ε₊·α' = α
  EXPECT_FALSE(in_fundamental_domain({6, -3}, c2));
  EXPECT_FALSE(in_fundamental_domain({0, 0}, c2));
  const FieldContext c7 = build_context(FieldId(7));
  EXPECT_TRUE(in_fundamental_domain({6, 2}, c7));
}

TEST(FundamentalDomain, CanonicalRepresentative) {
  for (std::int64_t D : kFields) {
    const FieldId f(D);
    PartitionGrid g(f, 30);
    const FieldContext& ctx = g.context();
    for (std::int64_t x = 1; x <= 30; ++x) {
      const Window w = g.window(x);
      for (std::int64_t y = w.lo; y <= w.hi; ++y) {
        const QElement a{make_int(x), make_int(y)};
        const QElement c = canonical_representative(a, ctx);
        EXPECT_TRUE(in_fundamental_domain(c, ctx));
        EXPECT_EQ(norm(c, f), norm(a, f));
        EXPECT_EQ(canonical_representative(mul(ctx.eps_plus, a, f), ctx), canonical_representative(c, ctx));
        if (g.covers(c)) { EXPECT_EQ(g.at(c), g.at(a)); }
      }
    }
  }
}

TEST(SearchM, Examples) {
  const FieldId f3(3);
  const SearchReport r3 = search_m(f3, 11);
  EXPECT_EQ(rendered(r3.representatives.at(6), f3), (std::set<std::string>{"4"}));
  EXPECT_TRUE(r3.representatives.at(11).empty());

  const FieldId f13(13);
  const SearchReport r13 = search_m(f13, 11);
  EXPECT_EQ(rendered(r13.representatives.at(3), f13), (std::set<std::string>{"3", "5+√13", "(13+3√13)/2"}));

  const FieldId f5(5);
  EXPECT_TRUE(search_m(f5, 3).representatives.at(3).empty());

  const FieldId f17(17);
  EXPECT_EQ(rendered(search_m(f17, 11).representatives.at(11), f17), (std::set<std::string>{"14+3√17"}));
  EXPECT_THROW(search_m(f17, 0), InvalidArgument);
}

TEST(SearchM, LexOrderAndDomain) {
  for (std::int64_t D : kFields) {
    const SearchReport rep = search_m(FieldId(D), 11);
    const FieldContext ctx = build_context(FieldId(D));
    for (const auto& [m, reps] : rep.representatives) {
      for (std::size_t i = 0; i < reps.size(); ++i) {
        EXPECT_TRUE(in_fundamental_domain(reps[i], ctx));
        if (i) { EXPECT_TRUE(lex_lt(reps[i - 1], reps[i])); }
      }
    }
  }
}

TEST(SearchM, SmallCountsAlwaysPresent) {
  for (std::int64_t D : squarefree_range(2, 40)) {
    const FieldId f(D);
    const SearchReport rep = search_m(f, 2);
    EXPECT_FALSE(rep.representatives.at(2).empty()) << D;
    const FieldContext ctx = build_context(f);
    std::set<std::string> want;
    for (const QElement& e : ctx.indecomposables) want.insert(render(canonical_representative(e, ctx), f));
    EXPECT_EQ(rendered(rep.representatives.at(1), f), want) << D;
  }
}

// Slice facts: bounds on y, the two order facts relating ≺ with (k, y),
// and strict growth of p_K along ≺.
TEST(SearchM, SliceFacts) {
  for (std::int64_t D : kFields) {
    const FieldId f(D);
    const SearchReport rep = search_m(f, 11);
    const FieldContext ctx = build_context(f);
    const QElement w = xi_plus_omega(f);
    // y < ((k+1)·ε₊ - k)/(ξ+ω) for every representative
    for (const auto& [m, reps] : rep.representatives)
      for (const QElement& a : reps) {
        const Integer y = a.b;
        const Integer k = a.a - ceil_xi_mult(y, f);
        const QElement rhs = (k + 1) * ctx.eps_plus - QElement::rational(k);
        EXPECT_GT(sign_of(rhs - y * w, f), 0) << render(a, f) << " D=" << D;
        EXPECT_LE(k, rep.k_max);
        EXPECT_LE(y, rep.y_max);
      }
    std::vector<std::tuple<std::int64_t, std::int64_t, QElement>> cells;
    for (std::int64_t y = 0; y <= rep.y_max; ++y)
      for (std::int64_t k = 0; k <= rep.k_max; ++k) cells.emplace_back(k, y, ky_element(make_int(k), make_int(y), f));
    for (const auto& [k1, y1, a1] : cells)
      for (const auto& [k2, y2, a2] : cells) {
        // raising k at no larger y moves up in ≺
        if (y1 <= y2 && k1 < k2) { EXPECT_TRUE(succ_gt(a2, a1, f)) << D; }
        // ≺ never lowers k
        if (succ_ge(a2, a1, f)) { EXPECT_LE(k1, k2) << D; }
        if (!a1.is_zero() && succ_gt(a2, a1, f)) {
          EXPECT_LT(rep.slice[static_cast<std::size_t>(y1)][static_cast<std::size_t>(k1)],
                    rep.slice[static_cast<std::size_t>(y2)][static_cast<std::size_t>(k2)]);
        }
      }
  }
}

TEST(EnFn, Examples) {
  EXPECT_EQ(en_fn_bounds(6), std::make_pair(std::int64_t{9}, std::int64_t{25}));
  EXPECT_EQ(en_fn_bounds(1), std::make_pair(std::int64_t{0}, std::int64_t{1}));
  EXPECT_EQ(en_fn_bounds(2), std::make_pair(std::int64_t{1}, std::int64_t{1}));
  EXPECT_EQ(en_fn_bounds(4), std::make_pair(std::int64_t{4}, std::int64_t{9}));
  EXPECT_THROW(en_fn_bounds(0), InvalidArgument);
}

TEST(Thresholds, Examples) {
  const auto r4 = verify_thresholds(4, {2, 7});
  EXPECT_EQ(r4[0].p_K, 6);
  EXPECT_EQ(r4[0].p, 5);
  EXPECT_EQ(r4[1].p_K, 5);
  const auto r5 = verify_thresholds(5, {21});
  EXPECT_GT(r5[0].p_K, 7);
  EXPECT_EQ(r5[0].p_K, 8);
}

TEST(Thresholds, OptimalUpToTwelve) {
  const auto Ds = squarefree_range(2, 50);
  for (std::int64_t n = 1; n <= 12; ++n) { EXPECT_NO_THROW(verify_thresholds(n, Ds)) << "n=" << n; }
}

TEST(DmScan, Examples) {
  const auto m11 = dm_scan(11, squarefree_range(2, 25), 4);
  EXPECT_EQ(m11.members, (std::vector<std::int64_t>{2, 3, 5, 6, 7, 13, 21}));
  EXPECT_TRUE(m11.exhaustive);
  const auto m1 = dm_scan(1, squarefree_range(2, 30), 2);
  EXPECT_TRUE(m1.members.empty());
  EXPECT_EQ(dm_scan(7, squarefree_range(2, 25), 4).members, (std::vector<std::int64_t>{2, 5}));
  const auto m5 = dm_scan(5, squarefree_range(2, 30));
  EXPECT_EQ(m5.members, (std::vector<std::int64_t>{2, 3, 5}));
}

TEST(DmScan, CompletenessFlags) {
  EXPECT_FALSE(dm_scan(11, squarefree_range(2, 10)).exhaustive);
  const auto m4 = dm_scan(4, squarefree_range(2, 10));
  EXPECT_FALSE(m4.exhaustive);
  EXPECT_FALSE(m4.threshold.has_value());
  EXPECT_TRUE(m4.members.empty());
}

TEST(DmScan, ShortcutAgreesWithFullSearch) {
  for (std::int64_t m : {3, 5, 7, 11}) {
    for (std::int64_t D : squarefree_range(2, 30)) {
      const DmEntry e = dm_probe(m, D);
      const SearchReport rep = search_m(FieldId(D), m);
      EXPECT_EQ(e.member, rep.representatives.at(m).empty()) << "m=" << m << " D=" << D;
    }
  }
}

TEST(Witness, Examples) {
  auto m4 = [](std::int64_t D) {
    PartitionGrid g(build_context(FieldId(D)));
    return witness_m4(g);
  };
  EXPECT_EQ(render(m4(3).alpha, FieldId(3)), "4+√3");
  EXPECT_EQ(m4(5).alpha, (QElement{3, 1}));
  EXPECT_EQ(render(m4(21).alpha, FieldId(21)), "(9+√21)/2");
  EXPECT_EQ(m4(21).count, 4);

  auto m6 = [](std::int64_t D, bool d5 = false) {
    PartitionGrid g(build_context(FieldId(D)));
    return witness_m6(g, d5);
  };
  EXPECT_EQ(render(m6(6).alpha, FieldId(6)), "7+2√6");
  EXPECT_EQ(m6(6).count, 6);
  EXPECT_EQ(render(m6(7).alpha, FieldId(7)), "8+2√7");
  EXPECT_EQ(m6(7).count, 9);
  EXPECT_THROW(m6(5), InvalidArgument);
  EXPECT_EQ(m6(5, true).count, 10);
  EXPECT_EQ(m6(5, true).alpha, (QElement{4, 2}));
}

TEST(Witness, BranchTestAgainstFloat) {
  for (std::int64_t D : squarefree_range(2, 200)) {
    const FieldId f(D);
    const long double xi = f.one_mod_four() ? (std::sqrt(static_cast<long double>(D)) - 1) / 2
                                            : std::sqrt(static_cast<long double>(D));
    EXPECT_EQ(ceil_gap_exceeds_half(f), std::ceil(xi) - xi > 0.5L) << D;
  }
}

TEST(Witness, OracleConfirmsSmallFields) {
  for (std::int64_t D : {2, 3, 6, 7, 11, 13}) {
    const FieldId f(D);
    PartitionGrid g(build_context(f));
    const Witness w4 = witness_m4(g);
    EXPECT_EQ(count_partitions(w4.alpha, f), 4);
    const Witness w6 = witness_m6(g);
    EXPECT_EQ(count_partitions(w6.alpha, f), w6.expected);
  }
}

TEST(Witness, AllFieldsUpToTwoHundred) {
  for (std::int64_t D : squarefree_range(2, 200)) {
    PartitionGrid g(build_context(FieldId(D)));
    EXPECT_NO_THROW(witness_m4(g)) << D;
    if (D != 5) { EXPECT_NO_THROW(witness_m6(g)) << D; }
  }
}
