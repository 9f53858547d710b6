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

#include <doctest.h>

#include <cmath>

#include "uavchan/rng.hpp"

using namespace uavchan;

TEST_CASE("same seed reproduces the same stream") {
    Rng a(12345), b(12345);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.uniform01() == b.uniform01());
        CHECK(a.normal() == b.normal());
        CHECK(a.exponential(0.5) == b.exponential(0.5));
        CHECK(a.poisson(2.2) == b.poisson(2.2));
    }
}

TEST_CASE("uniform01 stays inside [0, 1)") {
    Rng rng(7);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("normal sampler moments") {
    Rng rng(99);
    const int n = 1000000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    CHECK(std::abs(mean) < 0.01);
    CHECK(std::abs(var - 1.0) < 0.01);
}

TEST_CASE("poisson sampler mean and zero-mean edge") {
    Rng rng(4);
    const int n = 200000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += static_cast<double>(rng.poisson(2.2));
    CHECK(sum / n == doctest::Approx(2.2).epsilon(0.02));
    CHECK(rng.poisson(0.0) == 0);
}

TEST_CASE("derived seeds differ per index and stay deterministic") {
    CHECK(derive_seed(1, 0) == derive_seed(1, 0));
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));

    // Streams from adjacent indices should be unrelated.
    Rng a(derive_seed(42, 10)), b(derive_seed(42, 11));
    int agree = 0;
    for (int i = 0; i < 1000; ++i)
        if ((a.uniform01() < 0.5) == (b.uniform01() < 0.5)) ++agree;
    CHECK(agree > 400);
    CHECK(agree < 600);
}
