// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sandhi/errors.hpp"

namespace sandhi {

inline constexpr std::size_t kDefaultComponentCap = 12;

// Half-open range of component indices merged into one group.
struct Group {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const noexcept { return last - first; }
  friend bool operator==(const Group&, const Group&) = default;
  friend auto operator<=>(const Group&, const Group&) = default;
};

using Partition = std::vector<Group>;

// All ways to cut n ordered components into contiguous groups: 2^(n-1) of
// them. Partition k cuts after component i iff bit i of k is set, so the
// first partition is the whole compound as one group.
// Throws TooManyComponents when n > cap and std::invalid_argument for n == 0.
std::vector<Partition> enumerate_partition_ranges(std::size_t n, std::size_t cap = kDefaultComponentCap);

// The same enumeration over concrete components.
template <typename T>
std::vector<std::vector<std::vector<T>>> enumerate_compound_partitions(const std::vector<T>& components,
                                                                       std::size_t cap = kDefaultComponentCap) {
  std::vector<std::vector<std::vector<T>>> out;
  for (const auto& partition : enumerate_partition_ranges(components.size(), cap)) {
    std::vector<std::vector<T>> groups;
    groups.reserve(partition.size());
    for (const auto& g : partition) {
      groups.emplace_back(components.begin() + static_cast<std::ptrdiff_t>(g.first),
                          components.begin() + static_cast<std::ptrdiff_t>(g.last));
    }
    out.push_back(std::move(groups));
  }
  return out;
}

// Number of full binary bracketings of n leaves, the Catalan number C(n-1).
// Throws std::invalid_argument for n == 0 and std::overflow_error past 64 bits.
std::uint64_t count_bracketings(std::size_t n);

}  // namespace sandhi
