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

#ifndef REQLINT_RATIONAL_H_
#define REQLINT_RATIONAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace reqlint {

// Every score and threshold is an exact fraction so that comparisons at
// 1/3, 2/3, 3/4 and 11/20 never suffer from rounding.
using Rational = boost::rational<std::int64_t>;

// "num/den" in lowest terms, e.g. "44/75", "1/1", "0/1".
std::string FormatFraction(const Rational& value);

// Accepts "num/den" or a bare integer.
std::optional<Rational> ParseFraction(std::string_view text);

// Accepts "80%", "66.7%", "12.50 %"; the result is value/100, exact.
std::optional<Rational> ParsePercent(std::string_view text);

// value*100 rounded half-up to one decimal, e.g. 44/75 -> "58.7%".
std::string FormatPercentOneDecimal(const Rational& value);

// Same rounding as FormatPercentOneDecimal, without the percent sign.
std::string FormatOneDecimal(const Rational& value);

}  // namespace reqlint

#endif  // REQLINT_RATIONAL_H_
