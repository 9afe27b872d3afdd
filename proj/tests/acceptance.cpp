// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "qpart/qpart.hpp"

using namespace qpart;

namespace {

const std::vector<std::int64_t> kFields{2, 3, 5, 6, 7, 13, 17, 21};

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Check {
  Outcome& out;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (out.ok) out.detail = what;
    out.ok = false;
  }
};

json fixtures() {
  std::ifstream in(QPART_FIXTURES);
  if (!in) throw std::runtime_error(std::string("cannot open ") + QPART_FIXTURES);
  return json::parse(in);
}

json fixtures_of_kind(const json& doc, const std::string& kind) {
  json out = json::array();
  for (const json& fx : doc.at("fixtures"))
    if (fx.at("kind") == kind) out.push_back(fx);
  return out;
}

unsigned hw_threads() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

Outcome xy_grid_d2(const json& doc) {
  Outcome o;
  Check c{o};
  const auto t0 = std::chrono::steady_clock::now();
  VerifyResult r;
  json sub{{"fixtures", fixtures_of_kind(doc, "xy_grid")}};
  r = verify_fixtures(sub);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(r.fixtures == 1 && r.cells == 88, "expected one 88-cell table, got " + std::to_string(r.cells) + " cells");
  c.expect(r.ok(), r.ok() ? "" : r.mismatches.front());
  c.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = "88/88 cells, " + std::to_string(secs) + " s";
  return o;
}

Outcome ky_tables(const json& doc) {
  Outcome o;
  Check c{o};
  const auto t0 = std::chrono::steady_clock::now();
  const json sub{{"fixtures", fixtures_of_kind(doc, "ky_grid")}};
  const VerifyResult r = verify_fixtures(sub);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(r.fixtures == 8, "expected 8 tables");
  c.expect(r.ok(), r.ok() ? "" : r.mismatches.front());
  Integer largest = 0;
  for (const json& fx : sub.at("fixtures"))
    for (const json& row : fx.at("rows"))
      for (const json& v : row) largest = std::max(largest, integer_from_json(v));
  c.expect(largest == 26201, "largest entry " + largest.get_str());
  c.expect(secs < 60.0, "took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = std::to_string(r.cells) + " cells in 8 tables, max 26201, " + std::to_string(secs) + " s";
  return o;
}

Outcome unit_table(const json& doc) {
  Outcome o;
  Check c{o};
  const json sub{{"fixtures", fixtures_of_kind(doc, "unit_table")}};
  const VerifyResult r = verify_fixtures(sub);
  c.expect(r.ok(), r.ok() ? "" : r.mismatches.front());
  c.expect(r.cells == 8 * 4, "expected 32 checks, got " + std::to_string(r.cells));
  if (o.ok) o.detail = "eps+, floor ratio and corner for 8 fields";
  return o;
}

Outcome representatives(const json& doc) {
  Outcome o;
  Check c{o};
  const json sub{{"fixtures", fixtures_of_kind(doc, "representatives")}};
  const VerifyResult r = verify_fixtures(sub);
  c.expect(r.ok(), r.ok() ? "" : r.mismatches.front());
  c.expect(r.cells == 8 * 11, "expected 88 (D, m) sets, got " + std::to_string(r.cells));
  if (o.ok) o.detail = "88 (D, m) sets";
  return o;
}

Outcome dm_sets() {
  Outcome o;
  Check c{o};
  const std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> want{
      {1, {}}, {2, {}}, {3, {5}}, {5, {2, 3, 5}}, {7, {2, 5}}, {11, {2, 3, 5, 6, 7, 13, 21}}};
  std::string summary;
  for (const auto& [m, members] : want) {
    const std::int64_t hi = std::max<std::int64_t>(*dm_completeness_threshold(m), 30);
    const DmScan scan = dm_scan(m, squarefree_range(2, hi), hw_threads());
    c.expect(scan.exhaustive, "scan for m = " + std::to_string(m) + " not exhaustive");
    std::ostringstream got;
    for (auto d : scan.members) got << d << " ";
    c.expect(scan.members == members, "D(" + std::to_string(m) + ") = { " + got.str() + "}");
  }
  if (o.ok) o.detail = "D(1), D(2), D(3), D(5), D(7), D(11) exact";
  return o;
}

Outcome witnesses() {
  Outcome o;
  Check c{o};
  int n4 = 0, n6 = 0, n9 = 0;
  for (std::int64_t D : squarefree_range(2, 200)) {
    PartitionGrid g(build_context(FieldId(D)));
    try {
      witness_m4(g);
      ++n4;
      if (D == 5) {
        c.expect(witness_m6(g, true).count == 10, "D = 5 remark value");
      } else {
        (witness_m6(g).expected == 6 ? n6 : n9)++;
      }
    } catch (const AssertionFailure& e) {
      c.expect(false, e.what());
    }
  }
  const FieldId f14(14);
  const auto parts = enumerate_partitions({16, 4}, f14);
  std::set<std::multiset<std::string>> got;
  for (const Partition& p : parts) {
    std::multiset<std::string> s;
    for (const QElement& e : p) s.insert(render(e, f14));
    got.insert(s);
  }
  const std::set<std::multiset<std::string>> want{
      {"16+4√14"}, {"15+4√14", "1"}, {"12+3√14", "4+√14"}, {"8+2√14", "8+2√14"},
      {"8+2√14", "4+√14", "4+√14"}, {"4+√14", "4+√14", "4+√14", "4+√14"}};
  c.expect(parts.size() == 6 && got == want, "D = 14 example: " + std::to_string(parts.size()) + " partitions");
  if (o.ok)
    o.detail = std::to_string(n4) + " fields with 4, " + std::to_string(n6) + " with 6, " + std::to_string(n9) +
               " with 9, D=5 gives 10, D=14 example exact";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Check c{o};
  // Every cell with x ≤ 6 is required; x = 7, 8 are added so the suite exceeds 300 cells.
  std::size_t cells = 0, required = 0;
  for (std::int64_t D : kFields) {
    const FieldId f(D);
    PartitionGrid g(f, 8);
    for (std::int64_t x = 1; x <= 8; ++x) {
      const Window w = g.window(x);
      for (std::int64_t y = w.lo; y <= w.hi; ++y, ++cells) {
        if (x <= 6) ++required;
        const Integer brute = count_partitions({make_int(x), make_int(y)}, f);
        c.expect(brute == g.at(x, y), "D=" + std::to_string(D) + " (" + std::to_string(x) + "," + std::to_string(y) +
                                          "): oracle " + brute.get_str() + ", recurrence " + g.at(x, y).get_str());
      }
    }
  }
  c.expect(cells >= 300, "only " + std::to_string(cells) + " cells");
  if (o.ok) o.detail = std::to_string(cells) + " cells with x <= 8 agree, " + std::to_string(required) + " of them with x <= 6";
  return o;
}

Outcome invariants() {
  Outcome o;
  Check c{o};
  std::size_t checks = 0;
  for (std::int64_t D : kFields) {
    const FieldId f(D);
    const std::string tag = "D=" + std::to_string(D) + ": ";
    // Building the grid runs the two-coordinate cross-check on every cell.
    PartitionGrid g(f, 40);
    const QElement eps = g.context().eps_plus;
    std::vector<QElement> small;
    for (std::int64_t x = 1; x <= 40; ++x) {
      const Window w = g.window(x);
      for (std::int64_t y = w.lo; y <= w.hi; ++y) {
        const QElement a{make_int(x), make_int(y)};
        if (x <= 8) small.push_back(a);
        const QElement conj = conjugate(a, f);
        if (g.covers(conj)) {
          ++checks;
          c.expect(g.at(conj) == g.at(x, y), tag + "conjugation symmetry");
        }
        const QElement img = mul(eps, a, f);
        if (g.covers(img)) {
          ++checks;
          c.expect(g.at(img) == g.at(x, y), tag + "unit invariance");
        }
      }
    }
    for (const QElement& a : small)
      for (const QElement& b : small)
        if (succ_gt(a, b, f)) {
          ++checks;
          c.expect(g.at(b) < g.at(a), tag + "strict monotonicity");
        }
    // Slice facts: the y bound for representatives, and how ≺ relates to (k, y).
    const SearchReport rep = search_m(g, 11);
    const QElement w = xi_plus_omega(f);
    for (const auto& [m, reps] : rep.representatives)
      for (const QElement& a : reps) {
        const Integer k = a.a - ceil_xi_mult(a.b, f);
        ++checks;
        c.expect(sign_of((k + 1) * eps - QElement::rational(k) - a.b * w, f) > 0, tag + "y bound");
      }
    for (std::int64_t y1 = 0; y1 <= rep.y_max; ++y1)
      for (std::int64_t k1 = 0; k1 <= rep.k_max; ++k1)
        for (std::int64_t y2 = 0; y2 <= rep.y_max; ++y2)
          for (std::int64_t k2 = 0; k2 <= rep.k_max; ++k2) {
            const QElement a1 = ky_element(make_int(k1), make_int(y1), f);
            const QElement a2 = ky_element(make_int(k2), make_int(y2), f);
            if (y1 <= y2 && k1 < k2) c.expect(succ_gt(a2, a1, f), tag + "k step dominates");
            if (succ_ge(a2, a1, f)) c.expect(k1 <= k2, tag + "order keeps k");
            checks += 2;
          }
  }
  for (std::int64_t D : squarefree_range(2, 100)) {
    if (D % 4 == 1) continue;
    for (std::int64_t n = 1; n <= 200; ++n, ++checks)
      c.expect(mpz_odd_p(count_trace(FieldId(D), n).get_mpz_t()) != 0, "a_n even for D=" + std::to_string(D));
  }
  for (std::int64_t D : {2, 3, 6, 7}) {
    PartitionGrid g(FieldId(D), 40);
    try {
      parity_check(cumulative_P(FieldId(D), 40), g);
      checks += 41;
    } catch (const AssertionFailure& e) {
      c.expect(false, e.what());
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " checks";
  return o;
}

Outcome thresholds() {
  Outcome o;
  Check c{o};
  std::size_t rows = 0;
  const auto Ds = squarefree_range(2, 50);
  for (std::int64_t n = 1; n <= 12; ++n) {
    try {
      rows += verify_thresholds(n, Ds).size();
    } catch (const AssertionFailure& e) {
      c.expect(false, e.what());
    }
  }
  if (o.ok) o.detail = std::to_string(rows) + " (n, D) pairs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome(const json&)>>> criteria{
      {"x/y grid for D=2", xy_grid_d2},
      {"(k, y) tables for eight fields", ky_tables},
      {"units, floor ratios and corner counts", unit_table},
      {"representative sets per (D, m)", representatives},
      {"D(m) for m in {1,2,3,5,7,11}", [](const json&) { return dm_sets(); }},
      {"witnesses for 4, 6/9 and the D=14 example", [](const json&) { return witnesses(); }},
      {"oracle equivalence for x <= 6", [](const json&) { return oracle_equivalence(); }},
      {"invariant suites", [](const json&) { return invariants(); }},
      {"threshold optimality for n <= 12, D <= 50", [](const json&) { return thresholds(); }},
  };
  json doc;
  try {
    doc = fixtures();
  } catch (const std::exception& e) {
    std::cout << "cannot load fixtures: " << e.what() << "\n";
    return 1;
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second(doc);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << " -- " << o.detail << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
