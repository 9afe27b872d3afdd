// qpart: partitions of totally positive integers in real quadratic fields.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "embedded_fixtures.hpp"
#include "qpart/qpart.hpp"

namespace {

using namespace qpart;

enum class Format { pretty, csv, json, tex };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// Display width counting UTF-8 code points, so "√" occupies one column.
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80;
  return w;
}

void print_table(std::ostream& os, const Table& t, Format fmt) {
  if (fmt == Format::csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
      os << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return;
  }
  if (fmt == Format::tex) {
    os << "\\begin{tabular}{" << std::string(t.header.size(), 'r') << "}\n\\hline\n";
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? " & " : "") << cells[i];
      os << " \\\\\n";
    };
    line(t.header);
    os << "\\hline\n";
    for (const auto& r : t.rows) line(r);
    os << "\\hline\n\\end{tabular}\n";
    return;
  }
  std::vector<std::size_t> w(t.header.size(), 0);
  auto grow = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < w.size(); ++i) w[i] = std::max(w[i], width(cells[i]));
  };
  grow(t.header);
  for (const auto& r : t.rows) grow(r);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << "  ";
      os << std::string(w[i] - width(cells[i]), ' ') << cells[i];
    }
    os << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

std::string tex_math(const std::string& s) { return "$" + s + "$"; }

std::string show(const QElement& e, const FieldId& f, Format fmt) {
  return fmt == Format::tex ? tex_math(render(e, f, SurdStyle::tex)) : render(e, f);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// Exit codes.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;
constexpr int kInternal = 3;

struct Common {
  Format format = Format::pretty;
  unsigned threads = 1;
};

void add_common(CLI::App* sub, Common& c) {
  const std::map<std::string, Format> formats{
      {"pretty", Format::pretty}, {"csv", Format::csv}, {"json", Format::json}, {"tex", Format::tex}};
  sub->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("pretty|csv|json|tex");
  sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 256u));
}

// grid ----------------------------------------------------------------------

struct GridArgs {
  std::int64_t D = 2;
  std::int64_t max_x = 10;
  std::string view = "xy";
  std::int64_t kmax = 6;
  std::int64_t ymax = 10;
  bool negative = false;
};

int cmd_grid(const GridArgs& a, const Common& c) {
  PartitionGrid grid(build_context(FieldId(a.D)), c.threads);
  Table t;
  Matrix m;
  std::int64_t y0 = 0;
  if (a.view == "ky") {
    m = ky_matrix(grid, a.kmax, a.ymax);
    t.header.push_back("y\\k");
    for (std::int64_t k = 0; k <= a.kmax; ++k) t.header.push_back(std::to_string(k));
  } else {
    grid.extend(a.max_x);
    const std::int64_t hi = std::max<std::int64_t>(0, grid.window(a.max_x).hi);
    y0 = a.negative ? std::min<std::int64_t>(0, grid.window(a.max_x).lo) : 0;
    m = xy_matrix(grid, a.max_x, hi, y0);
    t.header.push_back("y\\x");
    for (std::int64_t x = 0; x <= a.max_x; ++x) t.header.push_back(std::to_string(x));
  }
  if (c.format == Format::json) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      json vals = json::array();
      for (const Integer& v : m[i]) vals.push_back(integer_to_json(v));
      rows.push_back(json{{"y", y0 + static_cast<std::int64_t>(i)}, {"values", std::move(vals)}});
    }
    json out{{"D", a.D}, {"view", a.view}};
    if (a.view == "ky") {
      out["k_max"] = a.kmax;
      out["y_max"] = a.ymax;
    } else {
      out["max_x"] = a.max_x;
    }
    out["rows"] = std::move(rows);
    emit_json(out);
    return kOk;
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::string> row{std::to_string(y0 + static_cast<std::int64_t>(i))};
    for (const Integer& v : m[i]) row.push_back(v.get_str());
    t.rows.push_back(std::move(row));
  }
  print_table(std::cout, t, c.format);
  return kOk;
}

// indecomposables / units -----------------------------------------------------

int cmd_indecomposables(std::int64_t D, const Common& c) {
  const FieldId f(D);
  const FieldContext ctx = build_context(f);
  if (c.format == Format::json) {
    json period = json::array(), conv = json::array(), ind = json::array();
    for (const Integer& u : ctx.period) period.push_back(integer_to_json(u));
    for (long i = -1; i <= static_cast<long>(ctx.eps_plus_shift()) - 1; ++i)
      conv.push_back(json{{"i", i},
                          {"p", integer_to_json(ctx.convergent(i).p)},
                          {"q", integer_to_json(ctx.convergent(i).q)},
                          {"alpha", element_to_json(ctx.alpha(i), f)}});
    for (const QElement& e : ctx.indecomposables) ind.push_back(element_to_json(e, f));
    emit_json(json{{"D", D}, {"period", period}, {"convergents", conv}, {"indecomposables", ind},
                   {"eps", element_to_json(ctx.eps, f)}, {"eps_plus", element_to_json(ctx.eps_plus, f)}});
    return kOk;
  }
  std::vector<std::string> period;
  for (const Integer& u : ctx.period) period.push_back(u.get_str());
  if (c.format == Format::pretty) {
    std::cout << "D = " << D << "\nperiod of sigma_D: (" << join(period, ", ") << ")\n"
              << "eps  = " << render(ctx.eps, f) << "\neps+ = " << render(ctx.eps_plus, f) << "\n\n";
  }
  Table t{{"i", "p_i", "q_i", "alpha_i", "indecomposables alpha_{i,r}"}, {}};
  std::size_t next = 0;
  for (long i = -1; i <= static_cast<long>(ctx.eps_plus_shift()) - 1; ++i) {
    std::vector<std::string> row{std::to_string(i), ctx.convergent(i).p.get_str(), ctx.convergent(i).q.get_str(),
                                 show(ctx.alpha(i), f, c.format)};
    std::vector<std::string> ind;
    if (i % 2 != 0 && i + 2 <= static_cast<long>(ctx.eps_plus_shift()) - 1) {
      for (Integer r = 0; r < ctx.u(i + 2) && next < ctx.indecomposables.size(); ++r)
        ind.push_back(show(ctx.indecomposables[next++], f, c.format));
    }
    row.push_back(join(ind, c.format == Format::tex ? ", " : " "));
    t.rows.push_back(std::move(row));
  }
  print_table(std::cout, t, c.format);
  return kOk;
}

int cmd_units(std::int64_t D, const Common& c) {
  const FieldId f(D);
  const FieldContext ctx = build_context(f);
  const Integer ratio = floor_ratio_eps(ctx);
  if (c.format == Format::json) {
    emit_json(json{{"D", D},
                   {"period_length", ctx.period_length()},
                   {"eps", element_to_json(ctx.eps, f)},
                   {"norm_eps", integer_to_json(norm(ctx.eps, f))},
                   {"eps_plus", element_to_json(ctx.eps_plus, f)},
                   {"floor_ratio", integer_to_json(ratio)}});
    return kOk;
  }
  Table t{{"D", "s", "eps", "Nm(eps)", "eps+", "floor(eps+/(xi+omega))"},
          {{std::to_string(D), std::to_string(ctx.period_length()), show(ctx.eps, f, c.format),
            norm(ctx.eps, f).get_str(), show(ctx.eps_plus, f, c.format), ratio.get_str()}}};
  print_table(std::cout, t, c.format);
  return kOk;
}

// search ----------------------------------------------------------------------

struct SearchArgs {
  std::int64_t D = 2;
  std::int64_t m = 11;
  bool explain = false;
  std::int64_t explain_norm = 100;
};

std::string partition_text(const Partition& p, const FieldId& f) {
  std::vector<std::string> parts;
  for (const QElement& e : p) {
    std::string s = render(e, f);
    parts.push_back(sgn(e.b) != 0 && s.front() != '(' ? "(" + s + ")" : s);
  }
  return join(parts, " + ");
}

int cmd_search(const SearchArgs& a, const Common& c) {
  const FieldId f(a.D);
  const SearchReport rep = search_m(f, a.m);
  auto explained = [&](const QElement& e) { return a.explain && norm(e, f) <= a.explain_norm; };
  if (c.format == Format::json) {
    json out = report_to_json(rep);
    if (a.explain) {
      json ex = json::array();
      for (const auto& [m, reps] : rep.representatives)
        for (const QElement& e : reps)
          if (explained(e)) {
            json parts = json::array();
            for (const Partition& p : enumerate_partitions(e, f)) parts.push_back(partition_text(p, f));
            ex.push_back(json{{"alpha", element_to_json(e, f)}, {"partitions", parts}});
          }
      out["explain"] = std::move(ex);
    }
    emit_json(out);
    return kOk;
  }
  if (c.format == Format::pretty)
    std::cout << "D = " << a.D << ", m <= " << a.m << ", k_max = " << rep.k_max << ", y_max = " << rep.y_max << "\n";
  Table t{{"m", "representatives"}, {}};
  if (c.format == Format::csv) t.header = {"m", "a", "b", "alpha"};
  for (const auto& [m, reps] : rep.representatives) {
    if (c.format == Format::csv) {
      for (const QElement& e : reps) t.rows.push_back({std::to_string(m), e.a.get_str(), e.b.get_str(), render(e, f)});
      continue;
    }
    std::vector<std::string> shown;
    for (const QElement& e : reps) shown.push_back(show(e, f, c.format));
    t.rows.push_back({std::to_string(m), join(shown, ", ")});
  }
  print_table(std::cout, t, c.format);
  if (a.explain && c.format == Format::pretty) {
    for (const auto& [m, reps] : rep.representatives)
      for (const QElement& e : reps) {
        if (!explained(e)) continue;
        std::cout << "\n" << render(e, f) << " (" << m << " partitions):\n";
        for (const Partition& p : enumerate_partitions(e, f)) std::cout << "  " << partition_text(p, f) << "\n";
      }
  }
  return kOk;
}

// dm --------------------------------------------------------------------------

struct DmArgs {
  std::int64_t m = 11;
  std::int64_t Dmin = 2;
  std::optional<std::int64_t> Dmax;
};

int cmd_dm(const DmArgs& a, const Common& c) {
  if (a.m < 1) throw InvalidArgument("m must be positive");
  const std::int64_t hi = a.Dmax.value_or(dm_completeness_threshold(a.m).value_or(50));
  const DmScan scan = dm_scan(a.m, squarefree_range(a.Dmin, hi), c.threads);
  std::vector<std::string> members;
  for (std::int64_t d : scan.members) members.push_back(std::to_string(d));
  const std::string note = scan.exhaustive ? "complete: every D beyond " + std::to_string(*scan.threshold) +
                                                 " has p_K(n) = p(n) = " + std::to_string(a.m) + " for some n"
                           : scan.threshold ? "not exhaustive: scan stops below D = " + std::to_string(*scan.threshold)
                                            : "not exhaustive: no threshold is known for m = " + std::to_string(a.m);
  if (c.format == Format::json) {
    json entries = json::array();
    for (const DmEntry& e : scan.entries)
      entries.push_back(json{{"D", e.D}, {"member", e.member}, {"decided_by", e.decided_by}});
    emit_json(json{{"m", a.m}, {"D_min", a.Dmin}, {"D_max", hi}, {"members", scan.members},
                   {"exhaustive", scan.exhaustive}, {"entries", entries}});
    return kOk;
  }
  if (c.format == Format::pretty) {
    std::cout << "D(" << a.m << ") within [" << a.Dmin << ", " << hi << "] = {" << join(members, ", ") << "}\n"
              << note << "\n";
    return kOk;
  }
  Table t{{"D", "member", "decided_by"}, {}};
  for (const DmEntry& e : scan.entries) t.rows.push_back({std::to_string(e.D), e.member ? "1" : "0", e.decided_by});
  print_table(std::cout, t, c.format);
  if (c.format == Format::tex) std::cout << "% " << note << "\n";
  return kOk;
}

// parity ----------------------------------------------------------------------

int cmd_parity(std::int64_t D, std::int64_t N, const Common& c) {
  const FieldId f(D);
  if (N < 0) throw InvalidArgument("N must be non-negative");
  PartitionGrid grid(build_context(f), c.threads);
  const ParityProfile prof = cumulative_P(f, N);
  const ParityReport rep = parity_check(prof, grid);
  if (c.format == Format::json) {
    json rows = json::array();
    for (std::int64_t n = 0; n <= N; ++n) {
      const auto i = static_cast<std::size_t>(n);
      rows.push_back(json{{"n", n},
                          {"a_n", n ? integer_to_json(prof.a[i]) : json(nullptr)},
                          {"P_K", integer_to_json(rep.P_used[i])},
                          {"p_K", integer_to_json(rep.p_diag[i])},
                          {"parity", rep.p_bits[i]}});
    }
    emit_json(json{{"D", D}, {"N", N}, {"parity_claims", rep.parity_claims},
                   {"recurrence_matches_definition", rep.recurrence_matches_definition},
                   {"odd", rep.odd_count}, {"even", rep.even_count}, {"rows", rows}});
    return kOk;
  }
  Table t{{"n", "a_n", "P_K(n)", "p_K(n)", "parity"}, {}};
  for (std::int64_t n = 0; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    t.rows.push_back({std::to_string(n), n ? prof.a[i].get_str() : "-", rep.P_used[i].get_str(), rep.p_diag[i].get_str(),
                      std::to_string(rep.p_bits[i])});
  }
  print_table(std::cout, t, c.format);
  if (c.format == Format::pretty) {
    std::cout << "odd: " << rep.odd_count << ", even: " << rep.even_count << " (1 <= n <= " << N << ")\n";
    if (!rep.parity_claims)
      std::cout << "D = 1 mod 4: P_K taken from its definition; prefab recurrence "
                << (rep.recurrence_matches_definition ? "agrees" : "disagrees") << "\n";
  }
  return kOk;
}

// witness ---------------------------------------------------------------------

struct WitnessArgs {
  std::optional<std::int64_t> D;
  std::int64_t Dmax = 0;
  std::string which = "both";
  bool remark = false;
};

int cmd_witness(const WitnessArgs& a, const Common& c) {
  std::vector<std::int64_t> Ds;
  if (a.D) {
    Ds.push_back(*a.D);
  } else if (a.Dmax >= 2) {
    Ds = squarefree_range(2, a.Dmax);
  } else {
    throw InvalidArgument("give --D or --Dmax");
  }
  if (a.D && *a.D == 5 && a.which == "6" && !a.remark) throw InvalidArgument("D = 5 is excluded for m = 6; pass --remark");
  struct Row {
    std::int64_t D;
    std::string which;
    Witness w;
  };
  std::vector<Row> rows;
  for (std::int64_t D : Ds) {
    PartitionGrid grid(build_context(FieldId(D)), c.threads);
    if (a.which != "6") rows.push_back({D, "4", witness_m4(grid)});
    if (a.which != "4" && (D != 5 || a.remark)) rows.push_back({D, "6", witness_m6(grid, a.remark)});
  }
  if (c.format == Format::json) {
    json out = json::array();
    for (const Row& r : rows)
      out.push_back(json{{"D", r.D}, {"theorem", r.which}, {"alpha", element_to_json(r.w.alpha, FieldId(r.D))},
                         {"count", integer_to_json(r.w.count)}, {"expected", r.w.expected}, {"branch", r.w.branch}});
    emit_json(out);
    return kOk;
  }
  Table t{{"D", "theorem", "alpha", "p_K(alpha)", "branch"}, {}};
  for (const Row& r : rows)
    t.rows.push_back({std::to_string(r.D), r.which, show(r.w.alpha, FieldId(r.D), c.format), r.w.count.get_str(), r.w.branch});
  print_table(std::cout, t, c.format);
  return kOk;
}

// estimate --------------------------------------------------------------------

struct EstimateArgs {
  std::int64_t D = 2;
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t series = 0;
};

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

double log_integer(const Integer& n) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

int cmd_estimate(const EstimateArgs& a, const Common& c) {
  const FieldId f(a.D);
  PartitionGrid grid(build_context(f), c.threads);
  std::vector<QElement> elems;
  if (a.series > 0) {
    for (std::int64_t n = 1; n <= a.series; ++n) elems.push_back(QElement::rational(make_int(n)));
  } else {
    elems.push_back({make_int(a.a), make_int(a.b)});
  }
  Table t{{"alpha", "Nm", "log p_K", "estimate", "ratio"}, {}};
  json out = json::array();
  for (const QElement& e : elems) {
    if (!is_totally_positive(e, f)) throw InvalidArgument(render(e, f) + " is not totally positive");
    const double est = asymptotic_estimate(e, grid.context());
    const double lp = log_integer(grid.value(e));
    const std::string ratio = lp > 0 ? fixed(est / lp) : "-";
    t.rows.push_back({show(e, f, c.format), norm(e, f).get_str(), fixed(lp), fixed(est), ratio});
    out.push_back(json{{"alpha", element_to_json(e, f)}, {"norm", integer_to_json(norm(e, f))},
                       {"log_p", lp}, {"estimate", est}, {"ratio", lp > 0 ? json(est / lp) : json(nullptr)}});
  }
  if (c.format == Format::json) {
    emit_json(json{{"D", a.D}, {"rows", out}});
  } else {
    print_table(std::cout, t, c.format);
  }
  return kOk;
}

// verify ----------------------------------------------------------------------

int cmd_verify(const std::string& path, const std::string& dump, const Common& c) {
  if (!dump.empty()) {
    std::ofstream os(dump);
    if (!os) throw InvalidArgument("cannot write " + dump);
    os << kEmbeddedFixtures;
    return kOk;
  }
  json doc;
  try {
    if (path.empty()) {
      doc = json::parse(kEmbeddedFixtures);
    } else {
      std::ifstream in(path);
      if (!in) throw InvalidArgument("cannot open fixture file " + path);
      doc = json::parse(in);
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed fixture document: ") + e.what());
  }
  VerifyResult res;
  try {
    res = verify_fixtures(doc);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed fixture document: ") + e.what());
  }
  if (c.format == Format::json) {
    emit_json(json{{"ok", res.ok()}, {"fixtures", res.fixtures}, {"values", res.cells}, {"mismatches", res.mismatches}});
  } else {
    for (const std::string& m : res.mismatches) std::cout << m << "\n";
    if (res.ok()) {
      std::cout << "PASS, " << res.fixtures << " fixtures (" << res.cells << " values)\n";
    } else {
      std::cout << "FAIL, " << res.mismatches.size() << " mismatches in " << res.fixtures << " fixtures\n";
    }
  }
  return res.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partitions of totally positive integers in real quadratic fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qpart 1.0");

  Common common;
  const auto field_check = CLI::Range(std::int64_t{2}, std::int64_t{1} << 40);

  GridArgs grid;
  auto* g = app.add_subcommand("grid", "Table of p_K(x + y*omega)");
  g->add_option("--D", grid.D, "Squarefree D >= 2")->required();
  g->add_option("--max-x", grid.max_x, "Largest x (xy view)")->check(CLI::Range(std::int64_t{0}, std::int64_t{5000}));
  g->add_option("--view", grid.view, "xy or ky")->check(CLI::IsMember({"xy", "ky"}));
  g->add_option("--kmax", grid.kmax, "Largest k (ky view)")->check(CLI::Range(std::int64_t{0}, std::int64_t{5000}));
  g->add_option("--ymax", grid.ymax, "Largest y (ky view)")->check(CLI::Range(std::int64_t{0}, std::int64_t{5000}));
  g->add_flag("--negative", grid.negative, "Include rows with y < 0 (xy view)");
  add_common(g, common);

  std::int64_t ind_D = 2, units_D = 2;
  auto* ind = app.add_subcommand("indecomposables", "Continued fraction, convergents and indecomposables");
  ind->add_option("--D", ind_D, "Squarefree D >= 2")->required();
  add_common(ind, common);
  auto* units = app.add_subcommand("units", "Fundamental and totally positive units");
  units->add_option("--D", units_D, "Squarefree D >= 2")->required();
  add_common(units, common);

  SearchArgs search;
  auto* s = app.add_subcommand("search", "All alpha with at most m partitions, up to conjugation and units");
  s->add_option("--D", search.D, "Squarefree D >= 2")->required();
  s->add_option("--m", search.m, "Largest partition count")->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000}));
  s->add_flag("--explain", search.explain, "List the partitions of small representatives");
  s->add_option("--explain-norm", search.explain_norm, "Norm bound for --explain");
  add_common(s, common);

  DmArgs dm;
  auto* d = app.add_subcommand("dm", "Squarefree D with no element having exactly m partitions");
  d->add_option("--m", dm.m, "Partition count")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000}));
  d->add_option("--Dmin", dm.Dmin, "Smallest D")->check(field_check);
  d->add_option("--Dmax", dm.Dmax, "Largest D (default: the completeness threshold)")->check(field_check);
  add_common(d, common);

  std::int64_t par_D = 2, par_N = 10;
  auto* p = app.add_subcommand("parity", "P_K(n) against p_K(n) modulo 2");
  p->add_option("--D", par_D, "Squarefree D >= 2")->required();
  p->add_option("--N", par_N, "Largest n")->check(CLI::Range(std::int64_t{0}, std::int64_t{2000}));
  add_common(p, common);

  WitnessArgs wit;
  auto* w = app.add_subcommand("witness", "Elements with 4 and with 6 or 9 partitions");
  auto* wD = w->add_option("--D", wit.D, "Squarefree D >= 2");
  w->add_option("--Dmax", wit.Dmax, "Check every squarefree D up to this bound")->excludes(wD);
  w->add_option("--m", wit.which, "4, 6 or both")->check(CLI::IsMember({"4", "6", "both"}));
  w->add_flag("--remark", wit.remark, "Evaluate the m = 6 element for D = 5 as well");
  add_common(w, common);

  EstimateArgs est;
  auto* e = app.add_subcommand("estimate", "Leading-order estimate of log p_K against the exact value");
  e->add_option("--D", est.D, "Squarefree D >= 2")->required();
  e->add_option("--a", est.a, "Coefficient of 1");
  e->add_option("--b", est.b, "Coefficient of omega");
  e->add_option("--series", est.series, "Evaluate alpha = 1..N instead")->check(CLI::Range(std::int64_t{0}, std::int64_t{2000}));
  add_common(e, common);

  std::string fixtures, dump;
  auto* v = app.add_subcommand("verify", "Recompute the reference tables and diff them");
  v->add_option("--fixtures", fixtures, "Fixture document (default: built in)");
  v->add_option("--dump", dump, "Write the built-in fixture document to FILE and exit");
  add_common(v, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return cmd_grid(grid, common);
    if (*ind) return cmd_indecomposables(ind_D, common);
    if (*units) return cmd_units(units_D, common);
    if (*s) return cmd_search(search, common);
    if (*d) return cmd_dm(dm, common);
    if (*p) return cmd_parity(par_D, par_N, common);
    if (*w) return cmd_witness(wit, common);
    if (*e) return cmd_estimate(est, common);
    if (*v) return cmd_verify(fixtures, dump, common);
  } catch (const InvalidField& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const AssertionFailure& err) {
    std::cerr << "verification failed: " << err.what() << "\n";
    return kVerifyFailed;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
