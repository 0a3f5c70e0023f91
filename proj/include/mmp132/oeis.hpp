#pragma once

// OEIS b-file client with a disk cache and bundled offline fixtures, plus the
// alignment used to compare computed sequences against an entry.

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmp132/bigint.hpp"
#include "mmp132/gf.hpp"
#include "mmp132/json_io.hpp"

namespace mmp132 {

struct OeisSequence {
  std::string id;
  long long offset = 0;
  std::vector<BigInt> terms;
  std::string source;  // "network" or "fixture"
  std::string fetched_at;  // ISO-8601 UTC
};

/// Throws InvalidInput unless id is "A" followed by six digits.
void validate_oeis_id(std::string_view id);

/// Parses the "n a(n)" lines of a b-file, skipping blank lines and '#' comments. Keeps at
/// most max_terms terms. Throws InvalidInput on malformed or non-consecutive lines.
OeisSequence parse_bfile(std::string_view id, std::string_view text, std::size_t max_terms = 500);

json to_json(const OeisSequence& s);
/// Accepts the fixture form {"id","offset","terms"}; source and fetched_at are optional.
OeisSequence oeis_from_json(const json& j);

struct OeisOptions {
  /// Fetched sequences are cached under <cache_dir>/oeis/. No caching when empty.
  std::optional<std::filesystem::path> cache_dir;
  std::filesystem::path fixture_dir = default_fixture_dir();
  bool offline = false;
  /// Scheme and host, e.g. "https://oeis.org". The OEIS_BASE_URL environment variable
  /// overrides the default.
  std::string base_url = default_base_url();
  std::chrono::seconds ttl = std::chrono::hours(24 * 7);
  std::chrono::seconds timeout = std::chrono::seconds(10);
  std::size_t max_terms = 500;

  static std::filesystem::path default_fixture_dir();
  static std::string default_base_url();
};

/// Lookup order: fresh cache entry, network (unless offline), bundled fixture.
/// Throws InvalidInput for a malformed id and Unavailable when every source fails.
class OeisClient {
 public:
  explicit OeisClient(OeisOptions opts = {});

  OeisSequence fetch(std::string_view id) const;

  /// Only the network, no cache or fixture. Throws Unavailable on failure.
  OeisSequence fetch_network(std::string_view id) const;
  std::optional<OeisSequence> fetch_fixture(std::string_view id) const;
  std::optional<OeisSequence> fetch_cached(std::string_view id) const;

  std::optional<std::filesystem::path> cache_file(std::string_view id) const;
  const OeisOptions& options() const { return opts_; }

 private:
  OeisOptions opts_;
};

/// computed[i] is paired with terms[i + shift].
struct AlignmentReport {
  long shift = 0;
  std::size_t overlap = 0;
  /// Length of the agreeing run from the start of the overlap.
  std::size_t agreeing = 0;
  bool match = false;
};

/// Tries every shift in [-window, window]. A shift matches when all overlapping terms
/// agree and there are at least min_overlap of them. Reports the matching shift with the
/// longest overlap (ties to the smaller |shift|, then the negative one); without a match,
/// the shift with the longest agreeing run.
AlignmentReport compare_terms(const std::vector<BigInt>& computed, const std::vector<BigInt>& terms, long window = 3,
                              std::size_t min_overlap = 6);
AlignmentReport compare(const std::vector<BigInt>& computed, const OeisSequence& seq, long window = 3,
                        std::size_t min_overlap = 6);

/// A published identification: the x^power coefficients of Q_n for n >= n_start form
/// the sequence `id`.
struct OeisClaim {
  std::string id;
  PatternSpec pattern;
  std::size_t power = 0;
  std::size_t n_start = 0;
  std::string description;
};

const std::vector<OeisClaim>& oeis_claims();

/// Coefficients of x^power in Q_n for n = n_start..order via the series route.
std::vector<BigInt> claim_sequence(const OeisClaim& c, std::size_t order, GfEngine& gf);

struct ClaimResult {
  OeisClaim claim;
  std::optional<OeisSequence> sequence;
  AlignmentReport report;
  bool pass = false;
  std::string detail;
};

std::vector<ClaimResult> verify_claims(const OeisClient& client, GfEngine& gf, std::size_t order = kDefaultOrder,
                                       std::size_t min_overlap = 8);

}  // namespace mmp132
