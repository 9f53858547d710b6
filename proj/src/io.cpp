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

#include "uavchan/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace uavchan {

namespace {

constexpr const char* kSnapshotHeader = "# uavchan-snapshots v1";
constexpr const char* kCirHeader = "# uavchan-cir v1";

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " +
                                what);
}

double parse_double(std::string_view text, std::size_t line_no,
                    const std::string& field) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        parse_fail(line_no, "bad number '" + std::string(text) + "' in " +
                                field);
    return value;
}

std::uint64_t parse_index(std::string_view text, std::size_t line_no,
                          const std::string& field) {
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        parse_fail(line_no, "bad index '" + std::string(text) + "' in " +
                                field);
    return value;
}

Vec3 parse_vec3(std::string_view text, std::size_t line_no,
                const std::string& field) {
    const auto first = text.find(',');
    const auto second = text.find(',', first + 1);
    if (first == std::string_view::npos || second == std::string_view::npos)
        parse_fail(line_no, "expected x,y,z in " + field);
    return {parse_double(text.substr(0, first), line_no, field),
            parse_double(text.substr(first + 1, second - first - 1), line_no,
                         field),
            parse_double(text.substr(second + 1), line_no, field)};
}

// Splits "(a,b,...)(a,b,...)" into tuple bodies.
std::vector<std::string_view> split_tuples(std::string_view text,
                                           std::size_t line_no,
                                           const std::string& field) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(')
            parse_fail(line_no, "expected '(' in " + field);
        const auto close = text.find(')', pos);
        if (close == std::string_view::npos)
            parse_fail(line_no, "unterminated tuple in " + field);
        out.push_back(text.substr(pos + 1, close - pos - 1));
        pos = close + 1;
    }
    return out;
}

std::vector<std::string_view> split_fields(std::string_view body,
                                           std::size_t count,
                                           std::size_t line_no,
                                           const std::string& field) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const auto comma = body.find(',', pos);
        if (comma == std::string_view::npos) {
            parts.push_back(body.substr(pos));
            break;
        }
        parts.push_back(body.substr(pos, comma - pos));
        pos = comma + 1;
    }
    if (parts.size() != count)
        parse_fail(line_no, "expected " + std::to_string(count) +
                                " tuple fields in " + field);
    return parts;
}

struct Token {
    std::string_view key;
    std::string_view value;
};

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ') ++pos;
        if (pos >= line.size()) break;
        const auto end = line.find(' ', pos);
        const auto token =
            line.substr(pos, end == std::string_view::npos ? end : end - pos);
        const auto eq = token.find('=');
        if (eq == std::string_view::npos)
            parse_fail(line_no,
                       "expected key=value, got '" + std::string(token) + "'");
        tokens.push_back({token.substr(0, eq), token.substr(eq + 1)});
        pos = end == std::string_view::npos ? line.size() : end;
    }
    return tokens;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_snapshots(std::ostream& out,
                     std::span<const SnapshotRecord> records) {
    out << kSnapshotHeader << '\n';
    for (const SnapshotRecord& rec : records) {
        const CirSnapshot& s = rec.snapshot;
        out << "snap=" << rec.index << " tx=" << format_double(s.tx_position.x)
            << ',' << format_double(s.tx_position.y) << ','
            << format_double(s.tx_position.z) << " rx="
            << format_double(s.rx_position.x) << ','
            << format_double(s.rx_position.y) << ','
            << format_double(s.rx_position.z) << " dist="
            << format_double(s.link_distance_m) << " shadow="
            << format_double(rec.shadow_db) << " rays=";
        for (const Ray& ray : s.rays)
            out << '(' << format_double(ray.delay_ns) << ','
                << format_double(ray.amplitude) << ','
                << format_double(ray.phase_rad) << ',' << to_string(ray.kind)
                << ')';
        out << '\n';
    }
}

std::vector<SnapshotRecord> read_snapshots(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || line != kSnapshotHeader)
        throw std::invalid_argument(
            "line 1: missing snapshot stream header '" +
            std::string(kSnapshotHeader) + "'");

    std::vector<SnapshotRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        SnapshotRecord rec;
        bool have_index = false, have_tx = false, have_rx = false,
             have_dist = false, have_shadow = false, have_rays = false;
        for (const Token& tok : tokenize(line, line_no)) {
            if (tok.key == "snap") {
                rec.index = parse_index(tok.value, line_no, "snap");
                have_index = true;
            } else if (tok.key == "tx") {
                rec.snapshot.tx_position = parse_vec3(tok.value, line_no, "tx");
                have_tx = true;
            } else if (tok.key == "rx") {
                rec.snapshot.rx_position = parse_vec3(tok.value, line_no, "rx");
                have_rx = true;
            } else if (tok.key == "dist") {
                rec.snapshot.link_distance_m =
                    parse_double(tok.value, line_no, "dist");
                have_dist = true;
            } else if (tok.key == "shadow") {
                rec.shadow_db = parse_double(tok.value, line_no, "shadow");
                have_shadow = true;
            } else if (tok.key == "rays") {
                for (const auto body :
                     split_tuples(tok.value, line_no, "rays")) {
                    const auto parts =
                        split_fields(body, 4, line_no, "rays");
                    Ray ray;
                    ray.delay_ns = parse_double(parts[0], line_no, "rays");
                    ray.amplitude = parse_double(parts[1], line_no, "rays");
                    ray.phase_rad = parse_double(parts[2], line_no, "rays");
                    try {
                        ray.kind = ray_kind_from_string(std::string(parts[3]));
                    } catch (const std::invalid_argument& e) {
                        parse_fail(line_no, e.what());
                    }
                    rec.snapshot.rays.push_back(ray);
                }
                have_rays = true;
            } else {
                parse_fail(line_no,
                           "unknown field '" + std::string(tok.key) + "'");
            }
        }
        if (!(have_index && have_tx && have_rx && have_dist && have_shadow &&
              have_rays))
            parse_fail(line_no,
                       "snapshot record needs snap, tx, rx, dist, shadow and "
                       "rays fields");
        try {
            validate(rec.snapshot);
        } catch (const std::invalid_argument& e) {
            parse_fail(line_no, e.what());
        }
        records.push_back(std::move(rec));
    }
    return records;
}

void write_cirs(std::ostream& out, std::span<const CirRecord> records) {
    out << kCirHeader << '\n';
    for (const CirRecord& rec : records) {
        out << "cir=" << rec.index << " period_ns="
            << format_double(rec.sample_period_ns) << " t0_ns="
            << format_double(rec.t0_ns);
        if (rec.link_distance_m)
            out << " dist=" << format_double(*rec.link_distance_m);
        out << " samples=";
        for (const auto& c : rec.samples)
            out << '(' << format_double(c.real()) << ','
                << format_double(c.imag()) << ')';
        out << '\n';
    }
}

std::vector<CirRecord> read_cirs(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || line != kCirHeader)
        throw std::invalid_argument("line 1: missing CIR stream header '" +
                                    std::string(kCirHeader) + "'");

    std::vector<CirRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        CirRecord rec;
        bool have_index = false, have_period = false, have_t0 = false,
             have_samples = false;
        for (const Token& tok : tokenize(line, line_no)) {
            if (tok.key == "cir") {
                rec.index = parse_index(tok.value, line_no, "cir");
                have_index = true;
            } else if (tok.key == "period_ns") {
                rec.sample_period_ns =
                    parse_double(tok.value, line_no, "period_ns");
                have_period = true;
            } else if (tok.key == "t0_ns") {
                rec.t0_ns = parse_double(tok.value, line_no, "t0_ns");
                have_t0 = true;
            } else if (tok.key == "dist") {
                rec.link_distance_m = parse_double(tok.value, line_no, "dist");
            } else if (tok.key == "samples") {
                for (const auto body :
                     split_tuples(tok.value, line_no, "samples")) {
                    const auto parts =
                        split_fields(body, 2, line_no, "samples");
                    rec.samples.emplace_back(
                        parse_double(parts[0], line_no, "samples"),
                        parse_double(parts[1], line_no, "samples"));
                }
                have_samples = true;
            } else {
                parse_fail(line_no,
                           "unknown field '" + std::string(tok.key) + "'");
            }
        }
        if (!(have_index && have_period && have_t0 && have_samples))
            parse_fail(
                line_no,
                "CIR record needs cir, period_ns, t0_ns and samples fields");
        if (!(rec.sample_period_ns > 0.0))
            parse_fail(line_no, "period_ns must be > 0");
        if (rec.samples.empty())
            parse_fail(line_no, "samples must be nonempty");
        records.push_back(std::move(rec));
    }
    return records;
}

StreamKind sniff_stream(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("line 1: empty input, no stream header");
    in.seekg(0);
    if (line == kSnapshotHeader) return StreamKind::Snapshots;
    if (line == kCirHeader) return StreamKind::Cirs;
    throw std::invalid_argument("line 1: unrecognized stream header '" + line +
                                "'");
}

}  // namespace uavchan
