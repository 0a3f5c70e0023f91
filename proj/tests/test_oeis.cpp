#include <atomic>
#include <filesystem>
#include <thread>

#include <unistd.h>

#include "doctest.h"
#include "httplib.h"

#include "mmp132/errors.hpp"
#include "mmp132/oeis.hpp"

using namespace mmp132;
namespace fs = std::filesystem;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

fs::path fresh_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("mmp132_oeis_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

// Serves /A000129/b000129.txt and counts requests.
struct LocalOeis {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<int> hits{0};

  LocalOeis() {
    server.Get("/A000129/b000129.txt", [this](const httplib::Request&, httplib::Response& res) {
      ++hits;
      std::string body = "# Pell numbers\n# comment\n\n";
      long long a = 0, b = 1;
      for (int n = 0; n < 30; ++n) {
        body += std::to_string(n) + " " + std::to_string(a) + "\n";
        const long long c = 2 * b + a;
        a = b;
        b = c;
      }
      res.set_content(body, "text/plain");
    });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~LocalOeis() {
    server.stop();
    thread.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port); }
};

}  // namespace

TEST_CASE("id validation") {
  CHECK_NOTHROW(validate_oeis_id("A000129"));
  CHECK_THROWS_AS(validate_oeis_id("A00012"), InvalidInput);
  CHECK_THROWS_AS(validate_oeis_id("B000129"), InvalidInput);
  CHECK_THROWS_AS(validate_oeis_id("A00012x"), InvalidInput);
  OeisOptions o;
  o.offline = true;
  CHECK_THROWS_AS(OeisClient(o).fetch("A00012"), InvalidInput);
}

TEST_CASE("b-file parsing") {
  const auto s = parse_bfile("A000337", "# header\n0 0\n1 1\n\n2 5\n3 17\n");
  CHECK(s.offset == 0);
  CHECK(s.terms == ints({0, 1, 5, 17}));
  CHECK(parse_bfile("A000001", "5 1\n6 2\n7 3\n", 2).terms.size() == 2);
  CHECK(parse_bfile("A000001", "1 -4\n").terms == ints({-4}));
  CHECK_THROWS_AS(parse_bfile("A000001", "0 1\n2 3\n"), InvalidInput);
  CHECK_THROWS_AS(parse_bfile("A000001", "# nothing\n"), InvalidInput);
  CHECK_THROWS_AS(parse_bfile("A000001", "0 abc\n"), InvalidInput);
  CHECK(parse_bfile("A000001", "0 123456789012345678901234567890\n").terms[0] == BigInt("123456789012345678901234567890"));
}

TEST_CASE("alignment") {
  const auto pell = ints({0, 1, 2, 5, 12, 29, 70, 169, 408, 985});
  const auto shifted = ints({1, 2, 5, 12, 29, 70, 169, 408});
  const AlignmentReport r = compare_terms(shifted, pell);
  CHECK(r.match);
  CHECK(r.shift == 1);
  CHECK(r.overlap == 8);

  const AlignmentReport back = compare_terms(pell, shifted);
  CHECK(back.match);
  CHECK(back.shift == -r.shift);
  CHECK(back.overlap == r.overlap);

  // too short to count
  CHECK_FALSE(compare_terms(ints({1, 2, 5}), pell).match);
  // a wrong term breaks the match but the agreeing run is reported
  auto bad = shifted;
  bad[5] = 71;
  const AlignmentReport b = compare_terms(bad, pell);
  CHECK_FALSE(b.match);
  CHECK(b.shift == 1);
  CHECK(b.agreeing == 5);
  // outside the window
  CHECK_FALSE(compare_terms(ints({70, 169, 408, 985, 2378, 5741}), pell, 3).match);
  CHECK(compare_terms(ints({70, 169, 408, 985}), pell, 6, 4).match);
}

TEST_CASE("offline fetch falls back to fixtures") {
  OeisOptions o;
  o.offline = true;
  const OeisClient c(o);
  const OeisSequence s = c.fetch("A052963");
  CHECK(s.source == "fixture");
  CHECK(s.terms.size() >= 20);
  CHECK(std::vector<BigInt>(s.terms.begin(), s.terms.begin() + 6) == ints({1, 2, 5, 14, 40, 115}));
  CHECK_THROWS_AS(c.fetch("A999999"), Unavailable);
}

TEST_CASE("fixtures carry enough terms and satisfy their recurrences") {
  OeisOptions o;
  o.offline = true;
  const OeisClient c(o);
  for (const auto& claim : oeis_claims()) {
    const auto f = c.fetch_fixture(claim.id);
    REQUIRE(f.has_value());
    CHECK(f->terms.size() >= 20);
  }
  const auto pell = c.fetch("A000129").terms;
  for (std::size_t n = 2; n < pell.size(); ++n) CHECK(pell[n] == 2 * pell[n - 1] + pell[n - 2]);
  const auto a337 = c.fetch("A000337").terms;
  for (std::size_t n = 0; n < a337.size(); ++n) CHECK(a337[n] == (BigInt(n) - 1) * (BigInt(1) << n) + 1);
}

TEST_CASE("network fetch, cache and TTL") {
  const auto dir = fresh_dir("net");
  std::vector<BigInt> first;
  {
    LocalOeis srv;
    OeisOptions o;
    o.base_url = srv.url();
    o.cache_dir = dir;
    o.timeout = std::chrono::seconds(5);
    const OeisClient c(o);
    const OeisSequence s = c.fetch("A000129");
    CHECK(s.source == "network");
    CHECK(s.terms.size() == 30);
    CHECK(s.terms[6] == 70);
    CHECK(srv.hits == 1);
    REQUIRE(c.cache_file("A000129").has_value());
    CHECK(fs::exists(*c.cache_file("A000129")));
    first = s.terms;

    // within TTL the cache answers
    CHECK(c.fetch("A000129").terms == first);
    CHECK(srv.hits == 1);

    // a zero TTL goes back to the server
    OeisOptions stale = o;
    stale.ttl = std::chrono::seconds(-1);
    CHECK(OeisClient(stale).fetch("A000129").terms == first);
    CHECK(srv.hits == 2);

    // unknown on the server, and no fixture
    CHECK_THROWS_AS(c.fetch_network("A999999"), Unavailable);
    CHECK_THROWS_AS(c.fetch("A999999"), Unavailable);
  }
  // server gone: the cache still answers
  OeisOptions o;
  o.base_url = "http://127.0.0.1:1";
  o.cache_dir = dir;
  o.timeout = std::chrono::seconds(1);
  const OeisSequence cached = OeisClient(o).fetch("A000129");
  CHECK(cached.terms == first);
  CHECK(cached.source == "network");
  // and without a cache the fixture does
  o.cache_dir.reset();
  CHECK(OeisClient(o).fetch("A000129").source == "fixture");
  fs::remove_all(dir);
}

TEST_CASE("identifications hold offline") {
  OeisOptions o;
  o.offline = true;
  GfEngine gf;
  for (const auto& r : verify_claims(OeisClient(o), gf, 20, 8)) {
    CAPTURE(r.claim.id);
    CAPTURE(r.detail);
    CHECK(r.pass);
    CHECK(r.report.overlap >= 8);
  }
  const OeisClaim a337 = oeis_claims()[3];
  CHECK(a337.id == "A000337");
  const auto seq = claim_sequence(a337, 8, gf);
  CHECK(seq == ints({1, 5, 17, 49, 129, 321}));
}
