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

#include "reqlint/duplicates.h"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reqlint {
namespace {

// inter / (|a| + |b| - inter) >= num / den, in integers.
bool MeetsThreshold(std::int64_t inter, std::int64_t size_a, std::int64_t size_b,
                    const Rational& threshold) {
  const std::int64_t uni = size_a + size_b - inter;
  if (uni == 0) return false;
  return inter * threshold.denominator() >= threshold.numerator() * uni;
}

// Smallest overlap a set of `size` tokens needs with a partner: ceil(t * size).
std::int64_t MinOverlap(std::int64_t size, const Rational& threshold) {
  const std::int64_t num = threshold.numerator() * size;
  const std::int64_t den = threshold.denominator();
  return (num + den - 1) / den;
}

}  // namespace

bool JaccardAtLeast(const std::vector<std::string>& a,
                    const std::vector<std::string>& b, const Rational& threshold) {
  if (a.empty() || b.empty()) return false;
  std::int64_t inter = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++inter;
      ++ia;
      ++ib;
    }
  }
  return MeetsThreshold(inter, static_cast<std::int64_t>(a.size()),
                        static_cast<std::int64_t>(b.size()), threshold);
}

std::vector<SimilarPair> NearDuplicatePairsReference(
    const std::vector<std::vector<std::string>>& sets, const Rational& threshold) {
  std::vector<SimilarPair> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (JaccardAtLeast(sets[i], sets[j], threshold)) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<SimilarPair> NearDuplicatePairs(
    const std::vector<std::vector<std::string>>& sets, const Rational& threshold) {
  const std::size_t n = sets.size();
  if (threshold <= 0) return NearDuplicatePairsReference(sets, threshold);

  // Renumber tokens: rarest first, ties by spelling, so prefixes are short
  // and selective.
  std::unordered_map<std::string, std::int64_t> frequency;
  for (const auto& set : sets) {
    for (const auto& token : set) ++frequency[token];
  }
  std::vector<std::pair<std::int64_t, const std::string*>> order;
  order.reserve(frequency.size());
  for (const auto& [token, count] : frequency) order.emplace_back(count, &token);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : *x.second < *y.second;
  });
  std::unordered_map<std::string_view, std::uint32_t> rank;
  rank.reserve(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank.emplace(*order[r].second, static_cast<std::uint32_t>(r));
  }

  std::vector<std::vector<std::uint32_t>> ranked(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    auto& r = ranked[static_cast<std::size_t>(i)];
    for (const auto& token : sets[static_cast<std::size_t>(i)]) {
      r.push_back(rank.at(token));
    }
    std::sort(r.begin(), r.end());
  }

  // token rank -> records whose prefix holds it (ascending record index).
  std::vector<std::vector<std::uint32_t>> index(order.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto size = static_cast<std::int64_t>(ranked[i].size());
    if (size == 0) continue;
    const std::int64_t prefix = size - MinOverlap(size, threshold) + 1;
    for (std::int64_t p = 0; p < prefix && p < size; ++p) {
      index[ranked[i][static_cast<std::size_t>(p)]].push_back(
          static_cast<std::uint32_t>(i));
    }
  }

  std::vector<std::vector<SimilarPair>> per_record(n);
#pragma omp parallel
  {
    std::vector<std::uint32_t> stamp(n, UINT32_MAX);
    std::vector<std::uint32_t> candidates;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t si = 0; si < static_cast<std::int64_t>(n); ++si) {
      const auto i = static_cast<std::size_t>(si);
      const auto& a = ranked[i];
      const auto size_a = static_cast<std::int64_t>(a.size());
      if (size_a == 0) continue;
      const std::int64_t prefix = size_a - MinOverlap(size_a, threshold) + 1;
      candidates.clear();
      for (std::int64_t p = 0; p < prefix && p < size_a; ++p) {
        const auto& postings = index[a[static_cast<std::size_t>(p)]];
        auto it = std::upper_bound(postings.begin(), postings.end(),
                                   static_cast<std::uint32_t>(i));
        for (; it != postings.end(); ++it) {
          if (stamp[*it] == i) continue;
          stamp[*it] = static_cast<std::uint32_t>(i);
          candidates.push_back(*it);
        }
      }
      std::sort(candidates.begin(), candidates.end());
      for (std::uint32_t j : candidates) {
        const auto& b = ranked[j];
        std::int64_t inter = 0;
        std::size_t x = 0, y = 0;
        while (x < a.size() && y < b.size()) {
          if (a[x] < b[y]) {
            ++x;
          } else if (b[y] < a[x]) {
            ++y;
          } else {
            ++inter;
            ++x;
            ++y;
          }
        }
        if (MeetsThreshold(inter, size_a, static_cast<std::int64_t>(b.size()),
                           threshold)) {
          per_record[i].push_back({i, j});
        }
      }
    }
  }

  std::vector<SimilarPair> out;
  for (auto& pairs : per_record) {
    out.insert(out.end(), pairs.begin(), pairs.end());
  }
  return out;
}

}  // namespace reqlint
