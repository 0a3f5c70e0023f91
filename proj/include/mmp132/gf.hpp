#pragma once

// Generating functions Q(t,x) = sum_n Q_n(x) t^n for patterns with at most two nonzero
// coordinates, assembled as truncated series.

#include <map>
#include <shared_mutex>
#include <string>

#include "mmp132/permutation.hpp"
#include "mmp132/series.hpp"

namespace mmp132 {

/// Pattern shapes by where the nonzero coordinates sit; K and L name the parameters in
/// the order they appear in (a,b,c,d). K0L0 is (k,0,l,0), 00LK is (0,0,l,k), and so on.
enum class Shape { Zero, K000, ZK00, ZZK0, ZZZK, K0L0, K00L, KL00, ZKL0, ZZLK, ZK0L };

std::string shape_name(Shape s);

struct GfKey {
  Shape shape = Shape::Zero;
  int k = 0;
  int l = 0;
  std::size_t order = 0;

  friend auto operator<=>(const GfKey&, const GfKey&) = default;
  friend bool operator==(const GfKey&, const GfKey&) = default;
};

/// Shape and parameters of p as written. Throws UnsupportedPattern for EMPTY coordinates
/// or three or more nonzero coordinates.
GfKey classify(const PatternSpec& p, std::size_t order = 0);

/// Applies (a,b,c,d) -> (a,d,c,b) where it lands on a directly computed shape:
/// KL00 -> K00L, 00LK -> 0KL0 and 000K -> 0K00.
GfKey normalize(GfKey key);

/// The pattern a key stands for.
PatternSpec pattern_of(const GfKey& key);

/// Memoized series engine. Concurrent callers may share one instance; lookups take a
/// shared lock, insertions an exclusive one, and no lock is held while computing.
class GfEngine {
 public:
  TSeries q0000(std::size_t N);
  TSeries qk000(int k, std::size_t N);
  TSeries q00k0(int k, std::size_t N);
  TSeries q0k00(int k, std::size_t N);
  TSeries qk0l0(int k, int l, std::size_t N);
  TSeries qk00l(int k, int l, std::size_t N);
  TSeries q0kl0(int k, int l, std::size_t N);
  TSeries q0k0l(int k, int l, std::size_t N);

  /// Routes p through classify/normalize to one of the functions above.
  TSeries dispatch(const PatternSpec& p, std::size_t N);
  TSeries compute(const GfKey& key);

  // Second routes. Each rebuilds a series from a different closed expression so the two
  // can be compared coefficientwise.

  /// (k,0,0,1) from the reduced numerator 1 - tP + tQ^{(k-1,0,0,1)}, P = Q^{(k-1,0,0,0)}.
  TSeries qk001_reduced(int k, std::size_t N);
  /// (k,0,0,2) from 1 - (t+t^2)P + tQ^{(k-1,0,0,2)} + t^2 Q^{(k-1,0,0,1)} over 1 - tP.
  TSeries qk002_reduced(int k, std::size_t N);
  /// (0,1,0,1) as (1 + tQ^{(0,1,0,0)}(Q^{(0,0,0,1)} - 1))/(1 - t).
  TSeries q0101_reduced(std::size_t N);
  /// (0,2,0,1) as (1 + tQ^{(0,1,0,1)} + tQ^{(0,2,0,0)}Q^{(0,0,0,1)} - tQ^{(0,2,0,0)} - tQ^{(0,0,0,1)})/(1 - t).
  TSeries q0201_reduced(std::size_t N);
  /// (0,2,0,2) as (1 + (t+t^2)Q^{(0,2,0,1)} + t(Q^{(0,2,0,0)})^2 - (2t+t^2)Q^{(0,2,0,0)})/(1 - t).
  TSeries q0202_reduced(std::size_t N);
  /// (0,2,l,0) as 1 + tQ^{(0,1,l,0)}/(1 - tQ^{(0,0,l,0)}).
  TSeries q02l0_reduced(int l, std::size_t N);
  /// (0,0,k,0) from the quadratic formula (A - sqrt(A^2 - 4tx))/(2tx).
  TSeries q00k0_radical(int k, std::size_t N);

  std::size_t memo_size() const;
  void clear();

 private:
  TSeries memo(const GfKey& key);
  TSeries build(const GfKey& key);

  mutable std::shared_mutex mu_;
  std::map<GfKey, TSeries> memo_;
};

/// Process-wide engine used by the CLI and the verification suites.
GfEngine& default_engine();

}  // namespace mmp132
