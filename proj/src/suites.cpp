#include "mmp132/suites.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <set>

#include "mmp132/errors.hpp"

namespace mmp132 {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"oracle-gf", "closed-forms", "catalog", "identities", "oeis", "fixtures"};
  return names;
}

SuiteResult run_suite(const std::string& name, SuiteContext& ctx) {
  if (name == "oracle-gf") return suite_oracle_gf(ctx);
  if (name == "closed-forms") return suite_closed_forms(ctx);
  if (name == "catalog") return suite_catalog(ctx);
  if (name == "identities") return suite_identities(ctx);
  if (name == "oeis") return suite_oeis(ctx);
  if (name == "fixtures") return suite_fixtures(ctx);
  throw InvalidInput("unknown suite '" + name + "'");
}

std::vector<PatternSpec> supported_patterns(int param_max) {
  std::set<PatternSpec> out;
  out.insert({0, 0, 0, 0});
  for (int k = 1; k <= param_max; ++k) {
    out.insert({k, 0, 0, 0});
    out.insert({0, k, 0, 0});
    out.insert({0, 0, k, 0});
    out.insert({0, 0, 0, k});
    for (int l = 1; l <= param_max; ++l) {
      out.insert({k, 0, l, 0});
      out.insert({k, 0, 0, l});
      out.insert({k, l, 0, 0});
      out.insert({0, k, l, 0});
      out.insert({0, 0, l, k});
      out.insert({0, k, 0, l});
    }
  }
  return {out.begin(), out.end()};
}

namespace {

json route_json(const std::optional<RouteValue>& r) {
  if (!r) return nullptr;
  return {{"route", r->route}, {"value", to_json(r->value)}};
}

std::string pat(const PatternSpec& p) { return "(" + p.to_string() + ")"; }

}  // namespace

json to_json(const RecursionReport& r) {
  json mismatch = nullptr;
  if (r.mismatch_n) mismatch = {{"n", *r.mismatch_n}, {"route_a", route_json(r.route_a)}, {"route_b", route_json(r.route_b)}};
  return {{"pattern", r.pattern.to_string()}, {"n_max", r.n_max}, {"agree", r.agree}, {"first_mismatch", mismatch}};
}

json to_json(const FormulaCheck& c) {
  json predicted = nullptr;
  if (c.predicted) predicted = {{"exponent", c.predicted->exponent}, {"value", c.predicted->value.str()}};
  json j = {{"formula_id", c.formula_id},
            {"pattern", c.pattern.to_string()},
            {"n", c.n},
            {"predicted", predicted},
            {"observed", c.observed ? json(c.observed->str()) : json(nullptr)},
            {"status", to_string(c.status)}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

json to_json(const CatalogResult& r) {
  json j = {{"pattern", r.entry.pattern.to_string()},
            {"printed", to_json(r.entry.printed)},
            {"status", to_string(r.status)},
            {"first_difference", r.first_difference ? json(*r.first_difference) : json(nullptr)}};
  if (r.entry.corrected) j["corrected"] = to_json(*r.entry.corrected);
  if (r.entry.oeis_id) j["oeis_id"] = *r.entry.oeis_id;
  if (!r.entry.note.empty()) j["note"] = r.entry.note;
  return j;
}

json to_json(const IdentityResult& r) { return {{"name", r.name}, {"holds", r.holds}, {"detail", r.detail}}; }

json to_json(const ClaimResult& r) {
  json j = {{"id", r.claim.id},
            {"pattern", r.claim.pattern.to_string()},
            {"power", r.claim.power},
            {"n_start", r.claim.n_start},
            {"source", r.sequence ? json(r.sequence->source) : json(nullptr)},
            {"shift", r.report.shift},
            {"overlap", r.report.overlap},
            {"agreeing", r.report.agreeing},
            {"match", r.pass}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

json to_json(const PrintedCheck& c) {
  json j = {{"pattern", c.pattern.to_string()},
            {"n", c.n},
            {"printed", to_json(c.printed)},
            {"computed", to_json(c.computed)},
            {"status", to_string(c.status)}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

SuiteResult suite_oracle_gf(SuiteContext& ctx) {
  SuiteResult res{"oracle-gf", true, json::array(), {}, {}};
  const auto patterns = supported_patterns(ctx.param_max);
  std::vector<std::future<RecursionReport>> jobs;
  jobs.reserve(patterns.size());
  for (const auto& p : patterns)
    jobs.push_back(std::async(std::launch::async, [&ctx, p] { return recursion_check(p, ctx.n_max, ctx.gf, ctx.oracle, ctx.rec); }));
  for (auto& j : jobs) {
    const RecursionReport r = j.get();
    res.report.push_back(to_json(r));
    if (!r.agree) {
      res.pass = false;
      res.failures.push_back(pat(r.pattern) + " routes disagree at n=" + std::to_string(r.mismatch_n.value_or(-1)));
    }
  }
  res.summary = std::to_string(patterns.size()) + " patterns, n <= " + std::to_string(ctx.n_max) + ", " +
                std::to_string(res.failures.size()) + " disagreeing";
  return res;
}

SuiteResult suite_closed_forms(SuiteContext& ctx) {
  SuiteResult res{"closed-forms", true, json::array(), {}, {}};
  std::size_t matched = 0, below = 0;
  for (const auto& c : verify_formulas(ctx.n_max, ctx.oracle)) {
    res.report.push_back(to_json(c));
    if (c.status == CheckStatus::Match) ++matched;
    if (c.status == CheckStatus::BelowThreshold) ++below;
    if (c.status == CheckStatus::Mismatch) {
      res.pass = false;
      res.failures.push_back(c.formula_id + " " + pat(c.pattern) + " n=" + std::to_string(c.n) + " " + c.detail);
    }
  }
  res.summary = std::to_string(matched) + " match, " + std::to_string(res.failures.size()) + " mismatch, " +
                std::to_string(below) + " below threshold (n <= " + std::to_string(ctx.n_max) + ")";
  return res;
}

SuiteResult suite_catalog(SuiteContext& ctx) {
  SuiteResult res{"catalog", true, json::array(), {}, {}};
  std::size_t errata = 0;
  const auto rows = verify_catalog(ctx.order, ctx.gf);
  for (const auto& r : rows) {
    res.report.push_back(to_json(r));
    if (r.status == CatalogStatus::Erratum) ++errata;
    if (r.status == CatalogStatus::Mismatch) {
      res.pass = false;
      res.failures.push_back(pat(r.entry.pattern) + " differs from the series route at t^" +
                             std::to_string(r.first_difference.value_or(0)));
    }
  }
  res.summary = std::to_string(rows.size()) + " entries to order " + std::to_string(ctx.order) + ", " +
                std::to_string(errata) + " errata, " + std::to_string(res.failures.size()) + " mismatch";
  return res;
}

namespace {

IdentityResult avoider_count_check(int n_max) {
  // Small n: filter all of S_n. Larger n: the generator's output must be 132-avoiding and distinct.
  IdentityResult r{"|S_n(132)| = C_n for n <= " + std::to_string(n_max), true, {}};
  for (int n = 0; n <= n_max && r.holds; ++n) {
    std::uint64_t count = 0;
    if (n <= 9) {
      std::vector<int> v(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
      do {
        if (is_132_avoiding(Permutation(v))) ++count;
      } while (std::next_permutation(v.begin(), v.end()));
    } else {
      std::set<std::uint64_t> seen;
      bool ok = true;
      for_each_avoider(n, [&](const Permutation& s) {
        std::uint64_t key = 0;
        for (int x : s.values()) key = key * 16 + static_cast<std::uint64_t>(x);
        ok = ok && is_132_avoiding(s) && seen.insert(key).second;
      }, n_max);
      count = ok ? seen.size() : 0;
    }
    if (BigInt(count) != catalan(static_cast<std::size_t>(n))) {
      r.holds = false;
      r.detail = "n=" + std::to_string(n) + ": " + std::to_string(count);
    }
  }
  return r;
}

IdentityResult row_sum_check(SuiteContext& ctx) {
  IdentityResult r{"Q_n(1) = C_n on both routes", true, {}};
  for (const auto& p : supported_patterns(ctx.param_max)) {
    const TSeries s = ctx.gf.dispatch(p, ctx.order);
    for (std::size_t n = 0; n <= ctx.order && r.holds; ++n)
      if (s[n].sum() != catalan(n)) {
        r.holds = false;
        r.detail = "series " + pat(p) + " n=" + std::to_string(n);
      }
    for (int n = 0; n <= ctx.n_max && r.holds; ++n)
      if (ctx.oracle.row(p, n).sum() != catalan(static_cast<std::size_t>(n))) {
        r.holds = false;
        r.detail = "oracle " + pat(p) + " n=" + std::to_string(n);
      }
  }
  return r;
}

}  // namespace

SuiteResult suite_identities(SuiteContext& ctx) {
  SuiteResult res{"identities", true, json::array(), {}, {}};
  std::vector<IdentityResult> rows = identity_checks(ctx.n_max, ctx.order, ctx.gf, ctx.oracle);
  rows.push_back(avoider_count_check(12));
  rows.push_back(row_sum_check(ctx));
  for (const auto& r : rows) {
    res.report.push_back(to_json(r));
    if (!r.holds) {
      res.pass = false;
      res.failures.push_back(r.name + ": " + r.detail);
    }
  }
  res.summary = std::to_string(rows.size() - res.failures.size()) + " of " + std::to_string(rows.size()) + " hold";
  return res;
}

SuiteResult suite_oeis(SuiteContext& ctx) {
  SuiteResult res{"oeis", true, json::array(), {}, {}};
  const auto rows = verify_claims(ctx.oeis, ctx.gf, ctx.order);
  for (const auto& r : rows) {
    res.report.push_back(to_json(r));
    if (!r.pass) {
      res.pass = false;
      res.failures.push_back(r.claim.id + " vs " + pat(r.claim.pattern) + ": " + r.detail);
    }
  }
  res.summary = std::to_string(rows.size() - res.failures.size()) + " of " + std::to_string(rows.size()) +
                " identifications confirmed";
  return res;
}

SuiteResult suite_fixtures(SuiteContext& ctx) {
  SuiteResult res{"fixtures", true, json::array(), {}, {}};
  std::size_t rows = 0, errata = 0;
  for (const auto& c : verify_printed(ctx.gf, ctx.oracle)) {
    ++rows;
    if (c.status == PrintedStatus::Match) continue;
    res.report.push_back(to_json(c));
    if (c.status == PrintedStatus::Erratum) {
      ++errata;
    } else {
      res.pass = false;
      res.failures.push_back(pat(c.pattern) + " n=" + std::to_string(c.n) + ": " + c.detail);
    }
  }
  res.summary = std::to_string(rows) + " printed rows, " + std::to_string(errata) + " errata, " +
                std::to_string(res.failures.size()) + " mismatch";
  return res;
}

}  // namespace mmp132
