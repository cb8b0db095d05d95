// Copyright 2026 The wps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace wps {

/// Bitmask over coordinate indices; bit i set means index i is in the subset.
using IndexSubset = std::uint32_t;

/// The weight tuple w = (w_0, ..., w_n), all w_i >= 1, n + 1 <= 16.
class WeightVector {
 public:
  WeightVector(std::vector<unsigned> weights);
  WeightVector(std::initializer_list<unsigned> weights)
      : WeightVector(std::vector<unsigned>(weights)) {}
  /// Comma-separated list, e.g. "1,2".
  static WeightVector parse(const std::string& text);

  const std::vector<unsigned>& weights() const noexcept { return w_; }
  unsigned operator[](std::size_t i) const noexcept { return w_[i]; }
  /// #w
  std::size_t length() const noexcept { return w_.size(); }
  /// |w|
  unsigned total() const noexcept { return total_; }
  unsigned min() const noexcept { return min_; }
  IndexSubset full() const noexcept { return (IndexSubset{1} << w_.size()) - 1; }

  /// |u| for an index subset u.
  unsigned total(IndexSubset u) const noexcept;
  /// min_i u_i; zero for the empty subset.
  unsigned min(IndexSubset u) const noexcept;
  /// gcd({w_i : i in u} U {q - 1}); q - 1 for the empty subset.
  unsigned gcd_with(IndexSubset u, std::uint32_t q) const noexcept;
  /// Every index subset in increasing mask order, the empty one first.
  std::vector<IndexSubset> subsets() const;

  std::string to_string() const;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<unsigned> w_;
  unsigned total_ = 0;
  unsigned min_ = 0;
};

inline unsigned subset_size(IndexSubset u) noexcept { return static_cast<unsigned>(__builtin_popcount(u)); }
std::vector<unsigned> subset_indices(IndexSubset u);

}  // namespace wps
