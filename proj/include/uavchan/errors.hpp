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

#ifndef UAVCHAN_ERRORS_HPP
#define UAVCHAN_ERRORS_HPP

#include <stdexcept>

namespace uavchan {

// Validation problems use std::invalid_argument (CLI exit code 1).

/// File or stream failure (CLI exit code 2).
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Estimation failure: insufficient, degenerate or unusable data
/// (CLI exit code 3).
struct fit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace uavchan

#endif
