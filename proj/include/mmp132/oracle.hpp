#pragma once

// Brute-force distribution polynomials over S_n(132).

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "mmp132/permutation.hpp"
#include "mmp132/poly.hpp"

namespace mmp132 {

/// Q_n(x) for n = 0..n_max of one pattern.
struct DistTable {
  PatternSpec pattern;
  std::map<int, XPoly> rows;

  friend bool operator==(const DistTable&, const DistTable&) = default;
};

/// Sum over S_n(132) of x^mmp(sigma). Splits the enumeration on the position of n and
/// runs the slices concurrently once n is large enough to pay for the threads.
/// Throws CapExceeded when n > cap.
XPoly brute_force_Q(int n, const PatternSpec& p, int cap = kDefaultEnumerationCap);

/// Coefficient of x^r in brute_force_Q(n, p).
BigInt brute_force_coeff(int n, const PatternSpec& p, std::size_t r, int cap = kDefaultEnumerationCap);

DistTable build_table(const PatternSpec& p, int n_max, int cap = kDefaultEnumerationCap);

/// Oracle rows memoized in memory and, when a directory is given, on disk as one JSON
/// document per pattern. Safe to share between threads; file access is serialized and
/// writes go through a temporary file plus rename.
class TableCache {
 public:
  explicit TableCache(std::optional<std::filesystem::path> dir = std::nullopt, int cap = kDefaultEnumerationCap);

  XPoly row(const PatternSpec& p, int n);
  BigInt coeff(const PatternSpec& p, int n, std::size_t r) { return row(p, n).coeff(r); }
  DistTable table(const PatternSpec& p, int n_max);

  int cap() const { return cap_; }
  const std::optional<std::filesystem::path>& dir() const { return dir_; }

  /// File backing one pattern, e.g. "<dir>/mmp_1_0_e_0.json".
  std::filesystem::path file_for(const PatternSpec& p) const;

 private:
  DistTable& load_locked(const PatternSpec& p);
  void store_locked(const DistTable& t) const;

  std::optional<std::filesystem::path> dir_;
  int cap_;
  std::mutex mu_;
  std::map<PatternSpec, DistTable> tables_;
};

/// Cache directory from MMP132_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> cache_dir_from_env();

}  // namespace mmp132
