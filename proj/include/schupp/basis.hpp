// Copyright 2026 The schupp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace schupp {

/// Spin configuration: bit s set means site s is up.
using Config = std::uint32_t;

inline constexpr int kMaxSites = 32;

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// C(n, k) in 64-bit arithmetic (exact for n <= 62).
std::uint64_t binomial(int n, int k);

/// Fixed total-Sz sector of n_sites spin-1/2 with n_up up spins.
///
/// Configurations are ordered by integer value; the index of a
/// configuration is its position in the combinatorial number system,
/// rank(c) = sum_k C(p_k, k) over the set bit positions p_1 < p_2 < ...
/// Ranking splits the word into two halves with one lookup table each, so
/// rank() is two loads and an add.
class SectorBasis {
 public:
  SectorBasis(int n_sites, int n_up);

  [[nodiscard]] int n_sites() const { return n_sites_; }
  [[nodiscard]] int n_up() const { return n_up_; }
  [[nodiscard]] std::size_t dim() const { return configs_.size(); }

  /// Index of c; throws std::invalid_argument when popcount(c) != n_up or
  /// bits beyond n_sites are set.
  [[nodiscard]] std::size_t rank(Config c) const;

  /// Configuration at index; throws std::out_of_range when index >= dim.
  [[nodiscard]] Config unrank(std::size_t index) const;

  /// Hot-path rank without the contract checks.
  [[nodiscard]] std::size_t rank_unchecked(Config c) const {
    return lo_table_[c & lo_mask_] + hi_table_[c >> lo_bits_];
  }

  [[nodiscard]] std::span<const Config> configs() const { return configs_; }

 private:
  int n_sites_;
  int n_up_;
  int lo_bits_;
  Config lo_mask_;
  std::vector<std::uint32_t> lo_table_;
  std::vector<std::uint32_t> hi_table_;
  std::vector<Config> configs_;
};

}  // namespace schupp
