// Copyright 2026 The reqlint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reqlint/rational.h"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace reqlint {

namespace {

std::string_view Trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

std::optional<std::int64_t> ParseInteger(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

}  // namespace

std::string FormatFraction(const Rational& value) {
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

std::optional<Rational> ParseFraction(std::string_view text) {
  text = Trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto whole = ParseInteger(text);
    if (!whole) return std::nullopt;
    return Rational(*whole);
  }
  auto num = ParseInteger(Trim(text.substr(0, slash)));
  auto den = ParseInteger(Trim(text.substr(slash + 1)));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

std::optional<Rational> ParsePercent(std::string_view text) {
  text = Trim(text);
  if (text.empty() || text.back() != '%') return std::nullopt;
  text = Trim(text.substr(0, text.size() - 1));
  if (text.empty()) return std::nullopt;

  std::int64_t scale = 100;
  std::string digits;
  bool seen_point = false;
  std::size_t fraction_digits = 0;
  for (char c : text) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      return std::nullopt;
    }
  }
  if (digits.empty() || digits.size() > 15) return std::nullopt;
  for (std::size_t i = 0; i < fraction_digits; ++i) scale *= 10;
  auto num = ParseInteger(digits);
  if (!num) return std::nullopt;
  return Rational(*num, scale);
}

std::string FormatOneDecimal(const Rational& value) {
  // tenths of a percent = value * 1000, rounded half away from zero.
  const Rational scaled = value * Rational(1000);
  std::int64_t num = scaled.numerator();
  const std::int64_t den = scaled.denominator();
  const bool negative = num < 0;
  if (negative) num = -num;
  const std::int64_t tenths = (2 * num + den) / (2 * den);
  std::string out = negative && tenths != 0 ? "-" : "";
  out += std::to_string(tenths / 10);
  out += '.';
  out += std::to_string(tenths % 10);
  return out;
}

std::string FormatPercentOneDecimal(const Rational& value) {
  return FormatOneDecimal(value) + "%";
}

}  // namespace reqlint
