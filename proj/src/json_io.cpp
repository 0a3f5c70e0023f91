#include "mmp132/json_io.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "mmp132/errors.hpp"

namespace mmp132 {

namespace {

json bigint_array(std::span<const BigInt> cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(c.str());
  return a;
}

std::vector<BigInt> bigints_from(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of decimal strings");
  std::vector<BigInt> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw InvalidInput("coefficients must be decimal strings");
    try {
      out.push_back(parse_bigint(e.get<std::string>()));
    } catch (const std::invalid_argument& ex) {
      throw InvalidInput(ex.what());
    }
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const XPoly& p) { return bigint_array(p.coeffs()); }

XPoly xpoly_from_json(const json& j) { return XPoly(bigints_from(j)); }

json to_json(const TSeries& s) {
  json rows = json::array();
  for (const auto& p : s.coeffs()) rows.push_back(to_json(p));
  return json{{"order", s.order()}, {"coeffs", std::move(rows)}};
}

TSeries series_from_json(const json& j) {
  const json& order = field(j, "order");
  if (!order.is_number_unsigned()) throw InvalidInput("series order must be a non-negative integer");
  const auto n = order.get<std::size_t>();
  const json& rows = field(j, "coeffs");
  if (!rows.is_array() || rows.size() != n + 1) throw InvalidInput("series must list order+1 coefficient rows");
  std::vector<XPoly> cs;
  cs.reserve(rows.size());
  for (const auto& r : rows) cs.push_back(xpoly_from_json(r));
  return TSeries(n, std::move(cs));
}

json to_json(const RationalGF& r) {
  return json{{"num", bigint_array(r.num.coeffs())}, {"den", bigint_array(r.den.coeffs())}};
}

RationalGF rational_from_json(const json& j) {
  try {
    return RationalGF(IntPoly(bigints_from(field(j, "num"))), IntPoly(bigints_from(field(j, "den"))));
  } catch (const SeriesError& e) {
    throw InvalidInput(e.what());
  }
}

json to_json(const DistTable& t) {
  json rows = json::object();
  for (const auto& [n, p] : t.rows) rows[std::to_string(n)] = to_json(p);
  return json{{"pattern", t.pattern.to_string()}, {"rows", std::move(rows)}};
}

DistTable table_from_json(const json& j) {
  DistTable t;
  t.pattern = PatternSpec::parse(field(j, "pattern").get<std::string>());
  const json& rows = field(j, "rows");
  if (!rows.is_object()) throw InvalidInput("rows must be an object keyed by n");
  for (const auto& [key, value] : rows.items()) {
    std::size_t used = 0;
    int n = -1;
    try {
      n = std::stoi(key, &used);
    } catch (const std::exception&) {
    }
    if (n < 0 || used != key.size()) throw InvalidInput("row key '" + key + "' is not a non-negative integer");
    t.rows[n] = xpoly_from_json(value);
  }
  return t;
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

void write_file_atomic(const std::filesystem::path& target, const std::string& content) {
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id());
  auto tmp = target;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace mmp132
