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

// Near-duplicate detection over token sets (Jaccard similarity).
//
// NearDuplicatePairs is the production kernel: tokens are renumbered by
// ascending document frequency, only the prefix of each set that can still
// reach the threshold is indexed, and candidates are verified in parallel.
// NearDuplicatePairsReference compares every pair and is kept for tests and
// the benchmark.

#ifndef REQLINT_DUPLICATES_H_
#define REQLINT_DUPLICATES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "reqlint/rational.h"

namespace reqlint {

struct SimilarPair {
  std::size_t first;   // first < second
  std::size_t second;

  bool operator==(const SimilarPair&) const = default;
  auto operator<=>(const SimilarPair&) const = default;
};

// Sets must be sorted and free of duplicates. Empty sets never match.
bool JaccardAtLeast(const std::vector<std::string>& a,
                    const std::vector<std::string>& b, const Rational& threshold);

// Both return pairs sorted by (first, second).
std::vector<SimilarPair> NearDuplicatePairs(
    const std::vector<std::vector<std::string>>& sets, const Rational& threshold);

std::vector<SimilarPair> NearDuplicatePairsReference(
    const std::vector<std::vector<std::string>>& sets, const Rational& threshold);

}  // namespace reqlint

#endif  // REQLINT_DUPLICATES_H_
