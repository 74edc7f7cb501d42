// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include "sandhi/compound.hpp"

#include <limits>
#include <stdexcept>

namespace sandhi {

std::vector<Partition> enumerate_partition_ranges(std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("compound with no components");
  if (n > cap) throw TooManyComponents(n, cap);
  if (n > 63) throw TooManyComponents(n, 63);

  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::vector<Partition> out;
  out.reserve(count);
  for (std::uint64_t cuts = 0; cuts < count; ++cuts) {
    Partition p;
    std::size_t start = 0;
    for (std::size_t gap = 0; gap + 1 < n; ++gap) {
      if (cuts & (std::uint64_t{1} << gap)) {
        p.push_back({start, gap + 1});
        start = gap + 1;
      }
    }
    p.push_back({start, n});
    out.push_back(std::move(p));
  }
  return out;
}

std::uint64_t count_bracketings(std::size_t n) {
  if (n == 0) throw std::invalid_argument("count_bracketings needs at least one leaf");
  // ways[k] = bracketings of k leaves; split at every inner gap.
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[1] = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t left = 1; left < k; ++left) {
      const auto a = ways[left];
      const auto b = ways[k - left];
      if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) throw std::overflow_error("Catalan overflow");
      const auto term = a * b;
      if (ways[k] > std::numeric_limits<std::uint64_t>::max() - term) throw std::overflow_error("Catalan overflow");
      ways[k] += term;
    }
  }
  return ways[n];
}

}  // namespace sandhi
