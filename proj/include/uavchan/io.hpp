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
//
// Line-delimited stream formats. Both start with a version header line and
// carry one record per line with key=value fields; numbers are written with
// 17 significant digits so records round-trip bit-exactly.
//
//   # uavchan-snapshots v1
//   snap=<idx> tx=<x,y,z> rx=<x,y,z> dist=<m> shadow=<dB>
//       rays=(<delay_ns>,<amplitude>,<phase_rad>,<kind>)...   (one line)
//
//   # uavchan-cir v1
//   cir=<idx> period_ns=<T> t0_ns=<t0> [dist=<m>] samples=(<re>,<im>)...

#ifndef UAVCHAN_IO_HPP
#define UAVCHAN_IO_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uavchan/types.hpp"

namespace uavchan {

/// One line of the snapshot stream.
struct SnapshotRecord {
    std::uint64_t index = 0;
    double shadow_db = 0.0;
    CirSnapshot snapshot;
};

/// One line of the sampled-CIR stream.
struct CirRecord {
    std::uint64_t index = 0;
    double sample_period_ns = 0.0;
    double t0_ns = 0.0;
    std::optional<double> link_distance_m;
    std::vector<std::complex<double>> samples;
};

enum class StreamKind { Snapshots, Cirs };

void write_snapshots(std::ostream& out,
                     std::span<const SnapshotRecord> records);
std::vector<SnapshotRecord> read_snapshots(std::istream& in);

void write_cirs(std::ostream& out, std::span<const CirRecord> records);
std::vector<CirRecord> read_cirs(std::istream& in);

/// Reads the version header and reports which stream the input holds.
/// Throws std::invalid_argument on unrecognized or missing headers.
StreamKind sniff_stream(std::istream& in);

/// Shortest exact decimal form of a double ("%.17g").
std::string format_double(double v);

}  // namespace uavchan

#endif
