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


#include "oracle.h"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace oracle {

namespace {

std::int64_t Gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a == 0 ? 1 : a;
}

std::optional<Frac> Value(const std::string& answer) {
  static const std::map<std::string, Frac> kWords = {
      {"yes", {1, 1}},          {"no", {0, 1}},
      {"not at all", {0, 1}},   {"a little bit", {1, 2}}, {"very much", {1, 1}},
      {"a lot", {0, 1}},        {"a few", {1, 2}},        {"none", {1, 1}},
  };
  if (answer == "n/a") return std::nullopt;
  if (auto it = kWords.find(answer); it != kWords.end()) return it->second;
  if (!answer.empty() && answer.back() == '%') {
    return Make(std::strtoll(answer.c_str(), nullptr, 10), 100);
  }
  const auto slash = answer.find('/');
  if (slash != std::string::npos) {
    return Make(std::strtoll(answer.substr(0, slash).c_str(), nullptr, 10),
                std::strtoll(answer.substr(slash + 1).c_str(), nullptr, 10));
  }
  throw std::invalid_argument("oracle: unknown answer " + answer);
}

}  // namespace

Frac Make(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = Gcd(num, den);
  return {num / g, den / g};
}

Frac Add(Frac a, Frac b) { return Make(a.num * b.den + b.num * a.den, a.den * b.den); }
Frac Mul(Frac a, Frac b) { return Make(a.num * b.num, a.den * b.den); }
Frac Div(Frac a, Frac b) { return Make(a.num * b.den, a.den * b.num); }

int Compare(Frac a, Frac b) {
  const std::int64_t l = a.num * b.den;
  const std::int64_t r = b.num * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

bool Equal(Frac a, Frac b) { return Compare(a, b) == 0; }

Card Score(const std::vector<Item>& items, const Weights& weights) {
  std::map<std::string, std::pair<Frac, int>> sums;
  std::optional<Frac> tool_used;
  for (const auto& item : items) {
    const auto v = Value(item.answer);
    if (item.id == "SC2.1") {
      tool_used = v;
      continue;
    }
    if (!v) continue;
    auto& [sum, count] = sums[item.group];
    sum = Add(sum, *v);
    ++count;
  }
  auto mean = [&](const std::string& group, Frac empty) {
    auto it = sums.find(group);
    if (it == sums.end() || it->second.second == 0) return empty;
    return Div(it->second.first, Frac{it->second.second, 1});
  };

  Card card;
  card.sc11 = mean("SC1.1", {1, 1});
  card.sc12 = mean("SC1.2", {1, 1});
  card.sc13 = mean("SC1.3", {0, 1});
  card.sc2 = (tool_used && Compare(*tool_used, {1, 1}) < 0) ? Frac{0, 1}
                                                             : mean("SC2", {1, 1});
  card.sc3 = mean("SC3", {1, 1});

  const bool gated = Compare(card.sc11, {1, 1}) < 0 || Compare(card.sc12, {1, 1}) < 0;
  if (gated) {
    card.sc1_label = "INCOMPLETE";
  } else if (Compare(card.sc13, {2, 3}) >= 0) {
    card.sc1_label = "BEST";
  } else if (Compare(card.sc13, {1, 3}) >= 0) {
    card.sc1_label = "BETTER";
  } else {
    card.sc1_label = "NORMAL";
  }
  if (gated) {
    card.final_label = "LOW";
    return card;
  }
  const Frac total = Add(Add(weights.sc13, weights.sc2), weights.sc3);
  const Frac weighted = Add(Add(Mul(weights.sc13, card.sc13), Mul(weights.sc2, card.sc2)),
                            Mul(weights.sc3, card.sc3));
  card.final_pct = Div(weighted, total);
  if (Compare(*card.final_pct, {3, 4}) >= 0) card.final_label = "HIGH";
  else if (Compare(*card.final_pct, {11, 20}) < 0) card.final_label = "LOW";
  else card.final_label = "MEDIUM";
  return card;
}

}  // namespace oracle
