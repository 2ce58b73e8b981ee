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
#include <span>

// Level-1 kernels for Krylov vectors. The parallel versions split the index
// range into fixed-size blocks and combine block partials in block order, so
// reductions are bit-identical for any thread count. The *_serial versions
// are plain loops kept as the reference for tests and benchmarks.
namespace schupp::vecops {

inline constexpr std::size_t kBlock = 8192;

double dot(std::span<const double> a, std::span<const double> b);
double dot_serial(std::span<const double> a, std::span<const double> b);

double norm(std::span<const double> a);

/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void axpy_serial(double alpha, std::span<const double> x, std::span<double> y);

/// x *= alpha
void scale(double alpha, std::span<double> x);

/// max_r |a_r - b_r|
double max_abs_diff(std::span<const double> a, std::span<const double> b);

}  // namespace schupp::vecops
