#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opg {

// Arbitrary-precision signed integer used for vertex labels, layer periods
// and sequence values. Prime-family labels overflow 64 bits from level 5 on.
using bigint = boost::multiprecision::cpp_int;

// Canonical residue in [0, p) for p >= 1. The early return matters: bulk
// scans probe small vertices against astronomically large periods, where a
// size comparison replaces a full division.
template <class I>
inline I mod_floor(const I& v, const I& p) {
  if (v >= 0 && v < p) return v;
  I r = v % p;
  if (r < 0) r += p;
  return r;
}

// Floor / ceiling division for b > 0 ('/' truncates toward zero).
template <class I>
inline I floor_div(const I& a, const I& b) {
  I q = a / b;
  if (a % b != 0 && (a < 0)) --q;
  return q;
}

template <class I>
inline I ceil_div(const I& a, const I& b) {
  I q = a / b;
  if (a % b != 0 && (a > 0)) ++q;
  return q;
}

inline std::string to_decimal(const bigint& v) { return v.str(); }
inline std::string to_decimal(std::int64_t v) { return std::to_string(v); }

// Strict decimal parse: an optional sign followed by digits, nothing else.
inline bigint parse_decimal(std::string_view s) {
  const bool negative = !s.empty() && s[0] == '-';
  std::string_view digits =
      (!s.empty() && (s[0] == '-' || s[0] == '+')) ? s.substr(1) : s;
  if (digits.empty())
    throw std::invalid_argument("parse_decimal: empty integer literal");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw std::invalid_argument("parse_decimal: not a decimal integer: '" +
                                  std::string(s) + "'");
  bigint v{std::string(digits)};
  return negative ? bigint(-v) : v;
}

inline std::optional<std::int64_t> to_int64(const bigint& v) {
  static const bigint lo = std::numeric_limits<std::int64_t>::min();
  static const bigint hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi) return std::nullopt;
  return v.convert_to<std::int64_t>();
}

}  // namespace opg
