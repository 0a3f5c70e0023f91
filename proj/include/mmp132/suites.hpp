#pragma once

// Verification suites shared by the CLI and the acceptance runner. Reports are JSON and
// do not depend on thread scheduling.

#include <string>
#include <vector>

#include "mmp132/closed_forms.hpp"
#include "mmp132/json_io.hpp"
#include "mmp132/oeis.hpp"
#include "mmp132/recursions.hpp"
#include "mmp132/reference.hpp"

namespace mmp132 {

struct SuiteContext {
  GfEngine& gf;
  TableCache& oracle;
  RecursionEngine& rec;
  const OeisClient& oeis;
  int n_max = 8;
  int param_max = 3;
  std::size_t order = kDefaultOrder;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  json report;
  std::string summary;
  std::vector<std::string> failures;
};

/// oracle-gf, closed-forms, catalog, identities, oeis, fixtures.
const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown name.
SuiteResult run_suite(const std::string& name, SuiteContext& ctx);

/// Every pattern of a supported shape with parameters in 1..param_max, plus the base
/// shapes, sorted.
std::vector<PatternSpec> supported_patterns(int param_max);

json to_json(const RecursionReport& r);
json to_json(const FormulaCheck& c);
json to_json(const CatalogResult& r);
json to_json(const IdentityResult& r);
json to_json(const ClaimResult& r);
json to_json(const PrintedCheck& c);

SuiteResult suite_oracle_gf(SuiteContext& ctx);
SuiteResult suite_closed_forms(SuiteContext& ctx);
SuiteResult suite_catalog(SuiteContext& ctx);
/// Identity checks plus |S_n(132)| = C_n for n <= 12 and Q_n(1) = C_n.
SuiteResult suite_identities(SuiteContext& ctx);
SuiteResult suite_oeis(SuiteContext& ctx);
SuiteResult suite_fixtures(SuiteContext& ctx);

}  // namespace mmp132
