#include "mmp132/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace mmp132 {

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    v *= 10;
    v += c - '0';
  }
  return negative ? BigInt(-v) : v;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt pow2(unsigned e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

}  // namespace mmp132
