#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mmp132 {

/// Exact integer used for every coefficient in the library.
using BigInt = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal string. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& v) { return v.str(); }

BigInt binomial(long long n, long long k);
BigInt pow2(unsigned e);

}  // namespace mmp132
