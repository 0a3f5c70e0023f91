#include "mmp132/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mmp132/errors.hpp"

namespace mmp132 {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty())
    throw InvalidInput("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw InvalidInput("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  text = trim(text);
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    for (auto part : split(text, ',')) values.push_back(parse_int(trim(part), "permutation entry"));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw InvalidInput("invalid permutation string: '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

int Permutation::at(int i) const {
  if (i < 1 || i > size())
    throw InvalidInput("position " + std::to_string(i) + " outside 1.." + std::to_string(size()));
  return values_[static_cast<std::size_t>(i - 1)];
}

std::string Permutation::to_string() const {
  std::string out;
  if (size() <= 9) {
    for (int v : values_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values_[i]);
  }
  return out;
}

PatternSpec PatternSpec::parse(std::string_view text) {
  const auto parts = split(trim(text), ',');
  if (parts.size() != 4)
    throw InvalidInput("pattern must have four coordinates a,b,c,d: '" + std::string(text) + "'");
  PatternSpec p;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto part = trim(parts[i]);
    if (part == "e" || part == "E") {
      p.coords[i] = Coord::none();
    } else {
      const int m = parse_int(part, "pattern coordinate");
      if (m < 0) throw InvalidInput("pattern coordinates must be non-negative");
      p.coords[i] = Coord::at_least(m);
    }
  }
  return p;
}

std::string PatternSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out.push_back(',');
    out += coords[i].is_empty() ? std::string("e") : std::to_string(coords[i].min());
  }
  return out;
}

int PatternSpec::nonzero_count() const {
  return static_cast<int>(std::count_if(coords.begin(), coords.end(), [](Coord c) { return c.is_positive(); }));
}

bool PatternSpec::has_empty() const {
  return std::any_of(coords.begin(), coords.end(), [](Coord c) { return c.is_empty(); });
}

QuadrantCounts quadrant_counts(const Permutation& sigma, int i) {
  const int v = sigma.at(i);
  QuadrantCounts q;
  const auto vals = sigma.values();
  for (int j = 1; j <= sigma.size(); ++j) {
    if (j == i) continue;
    const int w = vals[static_cast<std::size_t>(j - 1)];
    if (j > i) {
      (w > v ? q.q1 : q.q4)++;
    } else {
      (w > v ? q.q2 : q.q3)++;
    }
  }
  return q;
}

std::vector<QuadrantCounts> all_quadrant_counts(std::span<const int> values) {
  const std::size_t n = values.size();
  std::vector<QuadrantCounts> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Left side counted directly; right side follows from the value rank.
    int left_above = 0;
    int left_below = 0;
    for (std::size_t j = 0; j < i; ++j) (values[j] > values[i] ? left_above : left_below)++;
    const int below_total = values[i] - 1;
    const int above_total = static_cast<int>(n) - values[i];
    out[i] = {above_total - left_above, left_above, left_below, below_total - left_below};
  }
  return out;
}

bool matches(const QuadrantCounts& q, const PatternSpec& p) {
  return p.coords[0].accepts(q.q1) && p.coords[1].accepts(q.q2) && p.coords[2].accepts(q.q3) &&
         p.coords[3].accepts(q.q4);
}

bool matches(const Permutation& sigma, int i, const PatternSpec& p) {
  return matches(quadrant_counts(sigma, i), p);
}

int mmp_count(std::span<const int> values, const PatternSpec& p) {
  int count = 0;
  for (const auto& q : all_quadrant_counts(values))
    if (matches(q, p)) ++count;
  return count;
}

int mmp_count(const Permutation& sigma, const PatternSpec& p) { return mmp_count(sigma.values(), p); }

bool is_132_avoiding(const Permutation& sigma) {
  // sigma contains 132 iff some entry has a smaller entry to its left and, to its right,
  // an entry between the two. Track the running minimum to the left.
  const auto v = sigma.values();
  const std::size_t n = v.size();
  int left_min = n ? v[0] : 0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (left_min < v[j]) {
      for (std::size_t k = j + 1; k < n; ++k)
        if (v[k] > left_min && v[k] < v[j]) return false;
    }
    left_min = std::min(left_min, v[j]);
  }
  return true;
}

Permutation reduce(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("reduce requires distinct entries");
  std::vector<int> out;
  out.reserve(word.size());
  for (int w : word)
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w) - sorted.begin()) + 1);
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> out(static_cast<std::size_t>(sigma.size()));
  for (int i = 1; i <= sigma.size(); ++i) out[static_cast<std::size_t>(sigma.at(i) - 1)] = i;
  return Permutation(std::move(out), Permutation::Unchecked{});
}

// Builds avoiders block by block: a block of `size` cells at `pos` holding values
// [lo, lo+size) places its maximum at offset i-1, the smaller values go right of it and
// the larger ones left of it, each block again 132-avoiding.
class AvoiderGenerator {
 public:
  AvoiderGenerator(int n, const AvoiderVisitor& visit)
      : perm_(std::vector<int>(static_cast<std::size_t>(n)), Permutation::Unchecked{}), visit_(visit) {
    pending_.reserve(static_cast<std::size_t>(2 * n + 2));
  }

  void run(int n) {
    pending_.push_back({0, n, 1});
    step();
  }

  void run_with_max_at(int n, int pos) {
    place_max({0, n, 1}, pos);
    step();
  }

 private:
  struct Block {
    int pos;
    int size;
    int lo;
  };

  void place_max(const Block& b, int i) {
    perm_.values_[static_cast<std::size_t>(b.pos + i - 1)] = b.lo + b.size - 1;
    pending_.push_back({b.pos + i, b.size - i, b.lo});
    pending_.push_back({b.pos, i - 1, b.lo + b.size - i});
  }

  void step() {
    if (pending_.empty()) {
      visit_(perm_);
      return;
    }
    const Block b = pending_.back();
    pending_.pop_back();
    if (b.size == 0) {
      step();
    } else {
      for (int i = 1; i <= b.size; ++i) {
        place_max(b, i);
        step();
        pending_.pop_back();
        pending_.pop_back();
      }
    }
    pending_.push_back(b);
  }

  Permutation perm_;
  const AvoiderVisitor& visit_;
  std::vector<Block> pending_;
};

namespace {

void check_size(int n, int cap) {
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (n > cap) throw CapExceeded(n, cap);
}

}  // namespace

void for_each_avoider(int n, const AvoiderVisitor& visit, int cap) {
  check_size(n, cap);
  AvoiderGenerator gen(n, visit);
  gen.run(n);
}

void for_each_avoider_with_max_at(int n, int pos_of_max, const AvoiderVisitor& visit, int cap) {
  check_size(n, cap);
  if (pos_of_max < 1 || pos_of_max > n)
    throw InvalidInput("position of n must lie in 1.." + std::to_string(n));
  AvoiderGenerator gen(n, visit);
  gen.run_with_max_at(n, pos_of_max);
}

std::vector<Permutation> enumerate_avoiders(int n, int cap) {
  std::vector<Permutation> out;
  for_each_avoider(n, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

}  // namespace mmp132
