// SPDX-License-Identifier: Apache-2.0
//
// gdof: exact GDoF region calculator for the two-user MIMO interference channel
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "gdof/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "gdof/error.hpp"

namespace gdof {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kInvalidProfile: return "invalid_profile";
    case ErrorCode::kUnnormalizedExponents: return "unnormalized_exponents";
    case ErrorCode::kPointOutsideRegion: return "point_outside_region";
    case ErrorCode::kInfeasibleSplit: return "infeasible_split";
    case ErrorCode::kRankDeficient: return "rank_deficient";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kIo: return "io_error";
  }
  return "unknown";
}

namespace {

__extension__ typedef __int128 Wide;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  constexpr Wide kNarrow = std::numeric_limits<std::uint64_t>::max();
  if (a <= kNarrow && b <= kNarrow) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

void normalize(Wide n, Wide d, std::int64_t& num, std::int64_t& den) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (d == 1) {
    num = narrow(n);
    den = 1;
    return;
  }
  const Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = narrow(n);
  den = narrow(d);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) { normalize(n, d, num_, den_); }

Rational& Rational::operator+=(const Rational& o) {
  normalize(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_, num_, den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  normalize(Wide(num_) * o.den_ - Wide(o.num_) * den_, Wide(den_) * o.den_, num_, den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  normalize(Wide(num_) * o.num_, Wide(den_) * o.den_, num_, den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  normalize(Wide(num_) * o.den_, Wide(den_) * o.num_, num_, den_);
  return *this;
}

Rational operator-(const Rational& a) { return Rational(0) - a; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
}

double to_double(const Rational& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << to_string(x); }

std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) bad(whole);
  return v;
}

std::int64_t pow10(int e, std::string_view whole) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) {
    if (p > std::numeric_limits<std::int64_t>::max() / 10) bad(whole);
    p *= 10;
  }
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(s.substr(0, slash), text);
    std::int64_t den = parse_int(s.substr(slash + 1), text);
    if (den == 0) bad(text);
    return Rational(num, den);
  }

  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = static_cast<int>(parse_int(s.substr(e + 1), text));
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  int frac_digits = 0;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      bad(text);
    }
  }
  if (digits.empty()) bad(text);
  Rational value(parse_int(digits, text), 1);
  int shift = exponent - frac_digits;
  if (shift >= 0) {
    value *= Rational(pow10(shift, text));
  } else {
    value /= Rational(pow10(-shift, text));
  }
  return negative ? -value : value;
}

}  // namespace gdof
