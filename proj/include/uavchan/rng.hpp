// SPDX-License-Identifier: Apache-2.0
//
// uavchan - UAV air-to-ground channel simulation and estimation toolkit
// Copyright (C) 2026 uavchan contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef UAVCHAN_RNG_HPP
#define UAVCHAN_RNG_HPP

#include <cstdint>
#include <random>

namespace uavchan {

/// Seeded random source with fixed sampling algorithms. The mt19937_64
/// engine is fully specified by the standard and the samplers below avoid
/// std:: distributions (whose algorithms are implementation-defined), so an
/// identical seed yields an identical stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01();

    /// Uniform on [0, 2*pi).
    double phase();

    /// Standard normal (Marsaglia polar method, second deviate cached).
    double normal();

    /// Exponential with the given rate; strictly positive.
    double exponential(double rate);

    /// Poisson count via unit-rate arrival counting; O(mean) draws.
    std::uint64_t poisson(double mean);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Derives an independent stream seed from a master seed and a stream index
/// (one splitmix64 scramble of master + (index + 1) * golden-ratio gamma).
/// Per-snapshot streams keyed this way make ensemble output independent of
/// worker count and iteration order.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

}  // namespace uavchan

#endif
