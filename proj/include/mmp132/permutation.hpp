#pragma once

// Permutations in one-line notation, quadrant marked mesh patterns MMP(a,b,c,d),
// and enumeration of 132-avoiding permutations.
//
// Positions and values are 1-based everywhere in the public surface.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmp132 {

/// Default ceiling on n for anything that enumerates S_n(132); C_14 = 2674440.
inline constexpr int kDefaultEnumerationCap = 14;

class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidInput unless `values` is a permutation of 1..n.
  explicit Permutation(std::vector<int> values);

  /// "471569283" (digit per entry) or "10,1,2,...,9" (comma separated). "" is the empty permutation.
  static Permutation parse(std::string_view text);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// Value at 1-based position i.
  int at(int i) const;

  std::span<const int> values() const { return values_; }

  /// Digit string when n <= 9, comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}
  friend class AvoiderGenerator;
  friend Permutation reduce(std::span<const int> word);
  friend Permutation inverse(const Permutation& sigma);

  std::vector<int> values_;
};

/// One coordinate of MMP(a,b,c,d): "at least m points" or "no points" (EMPTY).
class Coord {
 public:
  constexpr Coord() = default;
  static constexpr Coord at_least(int m) { return Coord(m); }
  static constexpr Coord none() { return Coord(-1); }

  constexpr bool is_empty() const { return min_ < 0; }
  /// Lower bound; only meaningful when !is_empty().
  constexpr int min() const { return min_; }
  constexpr bool is_positive() const { return min_ > 0; }

  constexpr bool accepts(int count) const { return is_empty() ? count == 0 : count >= min_; }

  friend constexpr bool operator==(Coord, Coord) = default;
  friend constexpr auto operator<=>(Coord, Coord) = default;

 private:
  constexpr explicit Coord(int m) : min_(m) {}
  int min_ = 0;
};

/// Quadruple (a,b,c,d) for quadrants I..IV.
struct PatternSpec {
  std::array<Coord, 4> coords{};

  constexpr PatternSpec() = default;
  constexpr PatternSpec(Coord a, Coord b, Coord c, Coord d) : coords{a, b, c, d} {}
  constexpr PatternSpec(int a, int b, int c, int d)
      : coords{Coord::at_least(a), Coord::at_least(b), Coord::at_least(c), Coord::at_least(d)} {}

  /// "a,b,c,d" with "e" for EMPTY, e.g. "4,2,e,e". Throws InvalidInput.
  static PatternSpec parse(std::string_view text);
  std::string to_string() const;

  Coord a() const { return coords[0]; }
  Coord b() const { return coords[1]; }
  Coord c() const { return coords[2]; }
  Coord d() const { return coords[3]; }

  int nonzero_count() const;
  bool has_empty() const;

  /// The (a,d,c,b) image under inversion.
  PatternSpec mirrored() const { return {coords[0], coords[3], coords[2], coords[1]}; }

  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
  friend auto operator<=>(const PatternSpec&, const PatternSpec&) = default;
};

struct QuadrantCounts {
  int q1 = 0;  // right, above
  int q2 = 0;  // left, above
  int q3 = 0;  // left, below
  int q4 = 0;  // right, below

  int total() const { return q1 + q2 + q3 + q4; }
  friend bool operator==(const QuadrantCounts&, const QuadrantCounts&) = default;
};

/// Counts of graph points in each quadrant around (i, sigma_i). Throws InvalidInput for bad i.
QuadrantCounts quadrant_counts(const Permutation& sigma, int i);

/// All n quadrant counts at once, in position order.
std::vector<QuadrantCounts> all_quadrant_counts(std::span<const int> values);

bool matches(const QuadrantCounts& q, const PatternSpec& p);
bool matches(const Permutation& sigma, int i, const PatternSpec& p);

/// Number of positions matching p.
int mmp_count(const Permutation& sigma, const PatternSpec& p);
int mmp_count(std::span<const int> values, const PatternSpec& p);

bool is_132_avoiding(const Permutation& sigma);

/// Replaces the i-th largest entry by i, following the convention 2754 -> 1432.
/// Throws InvalidInput on repeated entries.
Permutation reduce(std::span<const int> word);

Permutation inverse(const Permutation& sigma);

using AvoiderVisitor = std::function<void(const Permutation&)>;

/// Calls `visit` once for every sigma in S_n(132). The Permutation passed is a reused
/// buffer; copy it if it must outlive the call. Throws CapExceeded when n > cap.
void for_each_avoider(int n, const AvoiderVisitor& visit, int cap = kDefaultEnumerationCap);

/// Same, restricted to the avoiders with n at 1-based position `pos_of_max`.
/// These slices partition S_n(132) for pos_of_max = 1..n and can be run concurrently.
void for_each_avoider_with_max_at(int n, int pos_of_max, const AvoiderVisitor& visit,
                                  int cap = kDefaultEnumerationCap);

std::vector<Permutation> enumerate_avoiders(int n, int cap = kDefaultEnumerationCap);

}  // namespace mmp132
