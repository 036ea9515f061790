// Copyright 2026 The lz4pw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Property checks shared by the test suites and `lz4pw selftest`.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lz4pw/reference/generators.hpp"
#include "lz4pw/reference/reference.hpp"
#include "lz4pw/window_kernel.hpp"

namespace lz4pw::reference {

/// Index of the first differing byte, or the shorter length when one input
/// is a prefix of the other. Empty when equal.
std::optional<std::size_t> first_difference(ByteView a, ByteView b);

/// Kernel sequences expressed as positions within `block`.
std::vector<RefSequence> as_positions(std::span<const Sequence> seqs,
                                      ByteView block);

/// Compresses and decodes `data`; returns a description of the first
/// failure, or nothing when the round trip is exact.
std::optional<std::string> round_trip_failure(ByteView data,
                                              const CompressorConfig& cfg);

/// Checks every stream invariant of a planned block: policy spacing, cap,
/// offsets, end-of-block rules and candidate-window origin.
std::optional<std::string> stream_invariant_failure(
    std::span<const Sequence> seqs, ByteView block, const CompressorConfig& cfg);

/// Drives the LVT table and the single-port oracle through one random trace
/// of windows (with block restarts) and compares every slot after every
/// commit.
bool lvt_trace_agrees(Rng& rng);

/// Compares the kernel hash with the modular oracle on `count` random words.
bool hash_oracle_agrees(Rng& rng, int table_log, std::size_t count);

/// The window-parallel default grid exercised by the round-trip checks.
std::vector<CompressorConfig> default_grid();

struct SelftestOptions {
  std::size_t iterations = 200;
  std::uint64_t seed = 1;
};

/// Runs reduced round-trip and oracle suites, printing one line per check.
bool run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace lz4pw::reference
