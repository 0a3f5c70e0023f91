#include "mmp132/oracle.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <future>
#include <thread>
#include <vector>

#include "mmp132/errors.hpp"
#include "mmp132/json_io.hpp"

namespace mmp132 {

namespace {

// Below this n the whole of S_n(132) is a few thousand permutations; threads cost more.
constexpr int kParallelFrom = 10;

using Histogram = std::vector<std::uint64_t>;

int count_matches(std::span<const int> v, const PatternSpec& p) {
  const int n = static_cast<int>(v.size());
  int m = 0;
  for (int i = 0; i < n; ++i) {
    int left_above = 0;
    for (int j = 0; j < i; ++j) left_above += v[j] > v[i];
    const int left_below = i - left_above;
    const QuadrantCounts q{(n - v[i]) - left_above, left_above, left_below, (v[i] - 1) - left_below};
    m += matches(q, p);
  }
  return m;
}

Histogram slice(int n, int pos, const PatternSpec& p, int cap) {
  Histogram h(static_cast<std::size_t>(n) + 1, 0);
  for_each_avoider_with_max_at(n, pos, [&](const Permutation& s) { ++h[count_matches(s.values(), p)]; }, cap);
  return h;
}

XPoly to_poly(const Histogram& h) {
  std::vector<BigInt> c(h.begin(), h.end());
  return XPoly(std::move(c));
}

}  // namespace

XPoly brute_force_Q(int n, const PatternSpec& p, int cap) {
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (n > cap) throw CapExceeded(n, cap);
  if (n == 0) return XPoly(BigInt(1));
  Histogram total(static_cast<std::size_t>(n) + 1, 0);
  if (n < kParallelFrom) {
    for (int pos = 1; pos <= n; ++pos) {
      const Histogram h = slice(n, pos, p, cap);
      for (std::size_t r = 0; r < h.size(); ++r) total[r] += h[r];
    }
    return to_poly(total);
  }
  std::vector<std::future<Histogram>> parts;
  parts.reserve(static_cast<std::size_t>(n));
  for (int pos = 1; pos <= n; ++pos) parts.push_back(std::async(std::launch::async, slice, n, pos, p, cap));
  for (auto& f : parts) {
    const Histogram h = f.get();
    for (std::size_t r = 0; r < h.size(); ++r) total[r] += h[r];
  }
  return to_poly(total);
}

BigInt brute_force_coeff(int n, const PatternSpec& p, std::size_t r, int cap) {
  return brute_force_Q(n, p, cap).coeff(r);
}

DistTable build_table(const PatternSpec& p, int n_max, int cap) {
  if (n_max > cap) throw CapExceeded(n_max, cap);
  DistTable t{p, {}};
  for (int n = 0; n <= n_max; ++n) t.rows[n] = brute_force_Q(n, p, cap);
  return t;
}

TableCache::TableCache(std::optional<std::filesystem::path> dir, int cap) : dir_(std::move(dir)), cap_(cap) {}

std::filesystem::path TableCache::file_for(const PatternSpec& p) const {
  std::string name = "mmp_" + p.to_string() + ".json";
  for (char& c : name)
    if (c == ',') c = '_';
  return *dir_ / name;
}

DistTable& TableCache::load_locked(const PatternSpec& p) {
  auto it = tables_.find(p);
  if (it != tables_.end()) return it->second;
  DistTable t{p, {}};
  if (dir_) {
    std::ifstream in(file_for(p));
    if (in) {
      try {
        DistTable disk = table_from_json(json::parse(in));
        if (disk.pattern == p) t = std::move(disk);
      } catch (const std::exception&) {
        // A damaged cache file is ignored and overwritten on the next store.
      }
    }
  }
  return tables_.emplace(p, std::move(t)).first->second;
}

void TableCache::store_locked(const DistTable& t) const {
  if (!dir_) return;
  std::filesystem::create_directories(*dir_);
  write_file_atomic(file_for(t.pattern), canonical(to_json(t)));
}

XPoly TableCache::row(const PatternSpec& p, int n) {
  {
    std::lock_guard lock(mu_);
    const DistTable& t = load_locked(p);
    if (auto it = t.rows.find(n); it != t.rows.end()) return it->second;
  }
  XPoly q = brute_force_Q(n, p, cap_);
  std::lock_guard lock(mu_);
  DistTable& t = load_locked(p);
  t.rows[n] = q;
  store_locked(t);
  return q;
}

DistTable TableCache::table(const PatternSpec& p, int n_max) {
  if (n_max > cap_) throw CapExceeded(n_max, cap_);
  DistTable out{p, {}};
  for (int n = 0; n <= n_max; ++n) out.rows[n] = row(p, n);
  return out;
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* v = std::getenv("MMP132_CACHE_DIR");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

}  // namespace mmp132
