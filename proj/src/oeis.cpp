#include "mmp132/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "httplib.h"

#include "mmp132/errors.hpp"

#ifndef MMP132_DATA_DIR
#define MMP132_DATA_DIR "data"
#endif

namespace mmp132 {

void validate_oeis_id(std::string_view id) {
  const bool ok = id.size() == 7 && id[0] == 'A' &&
                  std::all_of(id.begin() + 1, id.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
  if (!ok) throw InvalidInput("malformed OEIS id '" + std::string(id) + "' (expected A followed by 6 digits)");
}

namespace {

std::string now_iso() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

BigInt parse_term(const std::string& s) {
  const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
  if (start == s.size() || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                        [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw InvalidInput("not an integer: '" + s + "'");
  return BigInt(s);
}

}  // namespace

OeisSequence parse_bfile(std::string_view id, std::string_view text, std::size_t max_terms) {
  validate_oeis_id(id);
  OeisSequence s;
  s.id = std::string(id);
  std::istringstream in{std::string(text)};
  std::string line;
  long long expect = 0;
  while (std::getline(in, line) && s.terms.size() < max_terms) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string idx, val;
    if (!(ls >> idx >> val)) throw InvalidInput("malformed b-file line: '" + line + "'");
    const long long n = std::stoll(idx);
    if (s.terms.empty()) {
      s.offset = n;
    } else if (n != expect) {
      throw InvalidInput("b-file index " + std::to_string(n) + " where " + std::to_string(expect) + " was expected");
    }
    expect = n + 1;
    s.terms.push_back(parse_term(val));
  }
  if (s.terms.empty()) throw InvalidInput("b-file for " + s.id + " has no terms");
  return s;
}

json to_json(const OeisSequence& s) {
  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back(t.str());
  json j = {{"id", s.id}, {"offset", s.offset}, {"terms", terms}};
  if (!s.source.empty()) j["source"] = s.source;
  if (!s.fetched_at.empty()) j["fetched_at"] = s.fetched_at;
  return j;
}

OeisSequence oeis_from_json(const json& j) {
  try {
    OeisSequence s;
    s.id = j.at("id").get<std::string>();
    validate_oeis_id(s.id);
    s.offset = j.at("offset").get<long long>();
    for (const auto& t : j.at("terms")) s.terms.push_back(parse_term(t.get<std::string>()));
    if (s.terms.empty()) throw InvalidInput("sequence " + s.id + " has no terms");
    s.source = j.value("source", "");
    s.fetched_at = j.value("fetched_at", "");
    return s;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad OEIS sequence document: ") + e.what());
  }
}

std::filesystem::path OeisOptions::default_fixture_dir() {
  if (const char* v = std::getenv("MMP132_DATA_DIR"); v != nullptr && *v != '\0')
    return std::filesystem::path(v) / "oeis";
  return std::filesystem::path(MMP132_DATA_DIR) / "oeis";
}

std::string OeisOptions::default_base_url() {
  if (const char* v = std::getenv("OEIS_BASE_URL"); v != nullptr && *v != '\0') return v;
  return "https://oeis.org";
}

OeisClient::OeisClient(OeisOptions opts) : opts_(std::move(opts)) {}

std::optional<std::filesystem::path> OeisClient::cache_file(std::string_view id) const {
  if (!opts_.cache_dir) return std::nullopt;
  return *opts_.cache_dir / "oeis" / (std::string(id) + ".json");
}

std::optional<OeisSequence> OeisClient::fetch_cached(std::string_view id) const {
  const auto file = cache_file(id);
  if (!file) return std::nullopt;
  std::error_code ec;
  const auto mtime = std::filesystem::last_write_time(*file, ec);
  if (ec) return std::nullopt;
  if (std::filesystem::file_time_type::clock::now() - mtime > opts_.ttl) return std::nullopt;
  try {
    std::ifstream in(*file);
    OeisSequence s = oeis_from_json(json::parse(in));
    if (s.id != id) return std::nullopt;
    return s;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are refetched
  }
}

std::optional<OeisSequence> OeisClient::fetch_fixture(std::string_view id) const {
  const auto file = opts_.fixture_dir / (std::string(id) + ".json");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("bad fixture " + file.string() + ": " + e.what());
  }
  OeisSequence s = oeis_from_json(j);
  s.source = "fixture";
  if (s.fetched_at.empty()) s.fetched_at = now_iso();
  return s;
}

OeisSequence OeisClient::fetch_network(std::string_view id) const {
  validate_oeis_id(id);
  const std::string digits(id.substr(1));
  const std::string path = "/" + std::string(id) + "/b" + digits + ".txt";
  httplib::Result res;
  try {
    httplib::Client cli(opts_.base_url);
    cli.set_connection_timeout(opts_.timeout);
    cli.set_read_timeout(opts_.timeout);
    cli.set_follow_location(true);
    res = cli.Get(path);
  } catch (const std::exception& e) {
    throw Unavailable("fetching " + std::string(id) + ": " + e.what());
  }
  if (!res) throw Unavailable("fetching " + std::string(id) + ": " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw Unavailable("fetching " + std::string(id) + ": HTTP " + std::to_string(res->status));
  OeisSequence s;
  try {
    s = parse_bfile(id, res->body, opts_.max_terms);
  } catch (const InvalidInput& e) {
    throw Unavailable("fetching " + std::string(id) + ": " + e.what());
  }
  s.source = "network";
  s.fetched_at = now_iso();
  return s;
}

OeisSequence OeisClient::fetch(std::string_view id) const {
  validate_oeis_id(id);
  if (auto c = fetch_cached(id)) return *c;
  std::string why = "offline";
  if (!opts_.offline) {
    try {
      OeisSequence s = fetch_network(id);
      if (auto file = cache_file(id)) {
        std::filesystem::create_directories(file->parent_path());
        write_file_atomic(*file, canonical(to_json(s)));
      }
      return s;
    } catch (const Unavailable& e) {
      why = e.what();
    }
  }
  if (auto f = fetch_fixture(id)) return *f;
  throw Unavailable(std::string(id) + " has no bundled fixture and the network failed (" + why + ")");
}

AlignmentReport compare_terms(const std::vector<BigInt>& computed, const std::vector<BigInt>& terms, long window,
                              std::size_t min_overlap) {
  std::optional<AlignmentReport> best_match;
  AlignmentReport best_partial;
  bool have_partial = false;
  const auto closer = [](long a, long b) { return std::abs(a) < std::abs(b) || (std::abs(a) == std::abs(b) && a < b); };
  for (long shift = -window; shift <= window; ++shift) {
    AlignmentReport r;
    r.shift = shift;
    bool run = true;
    for (std::size_t i = 0; i < computed.size(); ++i) {
      const long j = static_cast<long>(i) + shift;
      if (j < 0 || j >= static_cast<long>(terms.size())) continue;
      ++r.overlap;
      if (run && computed[i] == terms[static_cast<std::size_t>(j)]) {
        ++r.agreeing;
      } else {
        run = false;
      }
    }
    r.match = r.overlap >= min_overlap && r.agreeing == r.overlap;
    if (r.match) {
      if (!best_match || r.overlap > best_match->overlap ||
          (r.overlap == best_match->overlap && closer(r.shift, best_match->shift)))
        best_match = r;
    } else if (!have_partial || r.agreeing > best_partial.agreeing ||
               (r.agreeing == best_partial.agreeing && closer(r.shift, best_partial.shift))) {
      best_partial = r;
      have_partial = true;
    }
  }
  return best_match ? *best_match : best_partial;
}

AlignmentReport compare(const std::vector<BigInt>& computed, const OeisSequence& seq, long window,
                        std::size_t min_overlap) {
  return compare_terms(computed, seq.terms, window, min_overlap);
}

const std::vector<OeisClaim>& oeis_claims() {
  static const std::vector<OeisClaim> claims = {
      {"A000129", {1, 0, 2, 0}, 0, 1, "Pell numbers"},
      {"A052963", {2, 0, 2, 0}, 0, 1, "a(n) = 3a(n-1) - a(n-3)"},
      {"A077938", {1, 0, 3, 0}, 0, 1, "expansion of 1/(1-2t-t^2-2t^3)"},
      {"A000337", {1, 0, 1, 0}, 1, 3, "x^1 coefficients, (n-3)2^(n-2)+1"},
      {"A083329", {2, 0, 0, 1}, 0, 1, "1,2,5,11,23,47,..."},
      {"A116731", {0, 2, 0, 1}, 0, 1, "x^0 coefficients"},
  };
  return claims;
}

std::vector<BigInt> claim_sequence(const OeisClaim& c, std::size_t order, GfEngine& gf) {
  const TSeries s = gf.dispatch(c.pattern, order);
  std::vector<BigInt> out;
  for (std::size_t n = c.n_start; n <= order; ++n) out.push_back(s.coeff(n, c.power));
  return out;
}

std::vector<ClaimResult> verify_claims(const OeisClient& client, GfEngine& gf, std::size_t order,
                                       std::size_t min_overlap) {
  std::vector<ClaimResult> out;
  for (const auto& c : oeis_claims()) {
    ClaimResult r{c, std::nullopt, {}, false, {}};
    try {
      r.sequence = client.fetch(c.id);
      r.report = compare(claim_sequence(c, order, gf), *r.sequence, 3, min_overlap);
      r.pass = r.report.match;
      if (!r.pass)
        r.detail = "best shift " + std::to_string(r.report.shift) + " agrees on " + std::to_string(r.report.agreeing) +
                   " of " + std::to_string(r.report.overlap) + " overlapping terms";
    } catch (const Unavailable& e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace mmp132
