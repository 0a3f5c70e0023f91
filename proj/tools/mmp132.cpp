// mmp132: distribution polynomials of quadrant marked mesh patterns on S_n(132).
//
// Exit codes: 0 ok, 1 verification mismatch or data unavailable, 2 usage/parse/cap
// error, 3 pattern shape not supported by the requested route.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "mmp132/errors.hpp"
#include "mmp132/suites.hpp"

using namespace mmp132;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kUnsupported = 3 };

struct Globals {
  std::string format;  // empty: per-command default
  std::size_t order = kDefaultOrder;
  std::string cache_dir;
  bool offline = false;
  int cap = kDefaultEnumerationCap;

  std::optional<std::filesystem::path> cache() const {
    if (!cache_dir.empty()) return std::filesystem::path(cache_dir);
    return cache_dir_from_env();
  }
  std::string fmt(const char* fallback) const { return format.empty() ? fallback : format; }
};

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> coeff_strings(const XPoly& p, std::size_t width) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < width; ++r) out.push_back(p.coeff(r).str());
  return out;
}

int cmd_count(const std::string& perm, const std::string& pattern) {
  std::cout << mmp_count(Permutation::parse(perm), PatternSpec::parse(pattern)) << "\n";
  return kOk;
}

int cmd_table(const Globals& g, const std::string& pattern, int n_max, const std::string& route) {
  if (n_max < 0) throw InvalidInput("n must be non-negative");
  const PatternSpec p = PatternSpec::parse(pattern);
  const bool want_gf = route != "oracle";
  const bool want_oracle = route != "gf";
  if (want_gf) classify(p);  // throws UnsupportedPattern before any work

  std::vector<XPoly> oracle_rows, gf_rows;
  if (want_oracle) {
    TableCache cache(g.cache(), g.cap);
    for (int n = 0; n <= n_max; ++n) oracle_rows.push_back(cache.row(p, n));
  }
  if (want_gf) {
    const TSeries s = default_engine().dispatch(p, static_cast<std::size_t>(n_max));
    for (int n = 0; n <= n_max; ++n) gf_rows.push_back(s[static_cast<std::size_t>(n)]);
  }
  const auto& rows = want_oracle ? oracle_rows : gf_rows;

  int status = kOk;
  std::vector<bool> agree;
  if (want_oracle && want_gf)
    for (int n = 0; n <= n_max; ++n) {
      agree.push_back(oracle_rows[n] == gf_rows[n]);
      if (!agree.back()) status = kMismatch;
    }

  // Rows that differ from a printed expansion are reported; only uncatalogued ones fail.
  std::vector<PrintedCheck> printed;
  if (const PrintedSeries* ps = find_printed(p)) {
    for (int n = 0; n <= n_max && n < static_cast<int>(ps->rows.size()); ++n) {
      PrintedCheck c = check_printed_row(*ps, n, rows[n]);
      if (c.status == PrintedStatus::Match) continue;
      std::cerr << "printed expansion differs at n=" << n << " (" << to_string(c.status) << "): " << c.detail << "\n";
      if (c.status == PrintedStatus::Mismatch) status = kMismatch;
      printed.push_back(std::move(c));
    }
  }

  if (g.fmt("csv") == "json") {
    json out = {{"pattern", p.to_string()}, {"route", route}, {"rows", json::object()}};
    for (int n = 0; n <= n_max; ++n) out["rows"][std::to_string(n)] = to_json(rows[n]);
    if (!agree.empty()) {
      out["agree"] = json::object();
      for (int n = 0; n <= n_max; ++n) out["agree"][std::to_string(n)] = static_cast<bool>(agree[n]);
    }
    if (!printed.empty()) {
      out["printed"] = json::array();
      for (const auto& c : printed) out["printed"].push_back(to_json(c));
    }
    std::cout << canonical(out);
    return status;
  }

  std::size_t width = 1;
  for (const auto& r : rows) width = std::max(width, static_cast<std::size_t>(r.degree() + 1));
  std::vector<std::string> header{"n"};
  for (std::size_t r = 0; r < width; ++r) header.push_back("c" + std::to_string(r));
  if (!agree.empty()) header.push_back("agree");
  std::cout << join(header) << "\n";
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::string> cells{std::to_string(n)};
    for (auto& c : coeff_strings(rows[n], width)) cells.push_back(std::move(c));
    if (!agree.empty()) cells.push_back(agree[n] ? "true" : "false");
    std::cout << join(cells) << "\n";
  }
  return status;
}

int cmd_gf(const Globals& g, const std::string& pattern, std::size_t order, bool x0) {
  const TSeries s = default_engine().dispatch(PatternSpec::parse(pattern), order);
  if (!x0) {
    if (g.fmt("json") == "json") {
      std::cout << canonical(to_json(s));
    } else {
      std::cout << "n,coefficient\n";
      for (std::size_t n = 0; n <= order; ++n) std::cout << n << ",\"" << s[n].to_string() << "\"\n";
    }
    return kOk;
  }
  std::vector<std::string> terms;
  for (const auto& v : s.x0_sequence()) terms.push_back(v.str());
  if (g.fmt("csv") == "json")
    std::cout << canonical(json(terms));
  else
    std::cout << join(terms) << "\n";
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& suite, bool deep, int param_max) {
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw InvalidInput("unknown suite '" + suite + "'; expected one of " + join(suite_names(), ", ") + " or all");
  TableCache oracle(g.cache(), g.cap);
  RecursionEngine rec;
  OeisOptions oo;
  oo.cache_dir = g.cache();
  oo.offline = g.offline;
  const OeisClient oeis(oo);
  SuiteContext ctx{default_engine(), oracle, rec, oeis, deep ? 10 : 8, param_max, g.order};

  const std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool pass = true;
  json out = {{"suites", json::object()}};
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, ctx);
    pass = pass && r.pass;
    if (g.fmt("text") == "json") {
      out["suites"][name] = {{"pass", r.pass}, {"summary", r.summary}, {"report", r.report}};
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.summary << "\n";
      for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    }
  }
  if (g.fmt("text") == "json") {
    out["pass"] = pass;
    std::cout << canonical(out);
  }
  return pass ? kOk : kMismatch;
}

int cmd_oeis(const Globals& g, const std::string& id, const std::string& pattern, std::size_t power,
             std::size_t from) {
  OeisOptions oo;
  oo.cache_dir = g.cache();
  oo.offline = g.offline;
  const OeisSequence seq = OeisClient(oo).fetch(id);
  std::optional<AlignmentReport> rep;
  if (!pattern.empty()) {
    const OeisClaim claim{seq.id, PatternSpec::parse(pattern), power, from, {}};
    rep = compare(claim_sequence(claim, g.order, default_engine()), seq);
  }
  if (g.fmt("json") == "json") {
    json out = to_json(seq);
    if (rep)
      out["alignment"] = {{"shift", rep->shift}, {"overlap", rep->overlap}, {"agreeing", rep->agreeing}, {"match", rep->match}};
    std::cout << canonical(out);
  } else {
    std::cout << "n,a(n)\n";
    for (std::size_t i = 0; i < seq.terms.size(); ++i)
      std::cout << seq.offset + static_cast<long long>(i) << "," << seq.terms[i].str() << "\n";
    if (rep)
      std::cerr << "shift " << rep->shift << ", " << rep->agreeing << "/" << rep->overlap << " terms agree"
                << (rep->match ? ", match" : ", no match") << "\n";
  }
  return rep && !rep->match ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distribution of quadrant marked mesh patterns over 132-avoiding permutations"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--order", g.order, "Series order for gf, verify and oeis")->check(CLI::NonNegativeNumber);
  app.add_option("--cache-dir", g.cache_dir, "Cache directory (default: $MMP132_CACHE_DIR)");
  app.add_flag("--offline", g.offline, "Never touch the network; use cache and bundled fixtures");
  app.add_option("--cap", g.cap, "Largest n the oracle will enumerate")->check(CLI::NonNegativeNumber);

  std::string perm, pattern, route = "both", suite, id;
  int n = 0;
  std::size_t order = 0, power = 0, from = 0;
  bool x0 = false, deep = false;
  int param_max = 3;

  auto* count = app.add_subcommand("count", "mmp count of one permutation");
  count->add_option("perm", perm, "Permutation, e.g. 471569283")->required();
  count->add_option("pattern", pattern, "Pattern a,b,c,d; e for an empty quadrant")->required();

  auto* table = app.add_subcommand("table", "Q_n(x) for n = 0..N");
  table->add_option("pattern", pattern)->required();
  table->add_option("n", n, "Largest n")->required()->check(CLI::NonNegativeNumber);
  table->add_option("route", route, "oracle, gf or both")->check(CLI::IsMember({"oracle", "gf", "both"}));

  auto* gf = app.add_subcommand("gf", "Series Q(t,x) from the generating function");
  gf->add_option("pattern", pattern)->required();
  gf->add_option("order", order, "Truncation order (default --order)")->check(CLI::NonNegativeNumber);
  gf->add_flag("--x0", x0, "Only the x = 0 sequence");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "oracle-gf, closed-forms, catalog, identities, oeis, fixtures or all")->required();
  verify->add_flag("--deep", deep, "Raise n to 10");
  verify->add_option("--param-max", param_max, "Largest k and l")->check(CLI::Range(1, 6));

  auto* oeis = app.add_subcommand("oeis", "Fetch an OEIS sequence, optionally comparing it with a pattern");
  oeis->add_option("id", id, "A-number, e.g. A000129")->required();
  oeis->add_option("--pattern", pattern, "Compare against this pattern's coefficients");
  oeis->add_option("--power", power, "Coefficient of x^power (default 0)");
  oeis->add_option("--from", from, "First n of the computed sequence (default 0)");

  for (auto* sub : {count, table, gf, verify, oeis}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return cmd_count(perm, pattern);
    if (*table) return cmd_table(g, pattern, n, route);
    if (*gf) return cmd_gf(g, pattern, gf->count("order") ? order : g.order, x0);
    if (*verify) return cmd_verify(g, suite, deep, param_max);
    if (*oeis) return cmd_oeis(g, id, pattern, power, from);
  } catch (const UnsupportedPattern& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
