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


#include "schupp/basis.hpp"

#include <bit>
#include <limits>
#include <string>

namespace schupp {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step
    r = r / i * (n - k + i) + r % i * (n - k + i) / i;
  }
  return r;
}

SectorBasis::SectorBasis(int n_sites, int n_up) : n_sites_(n_sites), n_up_(n_up) {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw SizeLimitError("sector basis supports 1.." + std::to_string(kMaxSites) +
                         " sites, got " + std::to_string(n_sites));
  }
  if (n_up < 0 || n_up > n_sites) throw std::invalid_argument("n_up out of range");
  const std::uint64_t dim = binomial(n_sites, n_up);
  if (dim > std::numeric_limits<std::uint32_t>::max()) throw SizeLimitError("sector too large");

  lo_bits_ = n_sites / 2;
  const int hi_bits = n_sites - lo_bits_;
  lo_mask_ = lo_bits_ == 0 ? 0u : static_cast<Config>((std::uint64_t{1} << lo_bits_) - 1);

  lo_table_.assign(std::size_t{1} << lo_bits_, 0);
  for (std::size_t lo = 0; lo < lo_table_.size(); ++lo) {
    std::uint64_t r = 0;
    int k = 0;
    for (int p = 0; p < lo_bits_; ++p) {
      if ((lo >> p) & 1U) r += binomial(p, ++k);
    }
    lo_table_[lo] = static_cast<std::uint32_t>(r);
  }
  // A high half with h set bits follows n_up - h set bits in the low half.
  hi_table_.assign(std::size_t{1} << hi_bits, 0);
  for (std::size_t hi = 0; hi < hi_table_.size(); ++hi) {
    int k = n_up - std::popcount(hi);
    if (k < 0 || k > lo_bits_) continue;
    std::uint64_t r = 0;
    for (int p = 0; p < hi_bits; ++p) {
      if ((hi >> p) & 1U) r += binomial(lo_bits_ + p, ++k);
    }
    hi_table_[hi] = static_cast<std::uint32_t>(r);
  }

  configs_.reserve(static_cast<std::size_t>(dim));
  if (n_up == 0) {
    configs_.push_back(0);
    return;
  }
  // Gosper's hack walks same-popcount words in increasing order.
  std::uint64_t c = (std::uint64_t{1} << n_up) - 1;
  const std::uint64_t end = std::uint64_t{1} << n_sites;
  while (c < end) {
    configs_.push_back(static_cast<Config>(c));
    const std::uint64_t t = c | (c - 1);
    c = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(c) + 1));
  }
}

std::size_t SectorBasis::rank(Config c) const {
  if (std::popcount(c) != n_up_ ||
      (n_sites_ < 32 && (static_cast<std::uint64_t>(c) >> n_sites_) != 0)) {
    throw std::invalid_argument("configuration is not in this sector");
  }
  return rank_unchecked(c);
}

Config SectorBasis::unrank(std::size_t index) const {
  if (index >= configs_.size()) throw std::out_of_range("basis index out of range");
  return configs_[index];
}

}  // namespace schupp
