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

// Parallel-window compression pipeline.
//
// The block is consumed in windows of `pws` bytes at a fixed stride. For each
// window every position with four bytes of lookahead is hashed, the
// dictionary is read for all of them, and then all of them are written back.
// The earliest verified candidate at or after the search floor becomes the
// window's match, which is extended against the source (optionally capped)
// and emitted together with the literals pending before it. Where searching
// resumes afterwards depends on the policy:
//
//   single_match_per_window  next window boundary at or after the match end
//   multi_match              the match end itself, possibly in this window
//
// The cycle model charges one cycle per window plus a fixed pipeline latency,
// independent of content.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lz4pw/block_codec.hpp"
#include "lz4pw/hash_engine.hpp"

namespace lz4pw {

enum class MatchPolicy { single_match_per_window, multi_match };

std::string to_string(MatchPolicy policy);
/// Accepts "single" / "multi" and the full enumerator names.
MatchPolicy parse_policy(std::string_view text);

/// Upper bound on the extended match length; unbounded when `limit` is empty.
struct MatchCap {
  std::optional<std::uint32_t> limit;

  static MatchCap bounded(std::uint32_t bytes) { return MatchCap{bytes}; }
  static MatchCap unbounded() { return MatchCap{}; }
  bool is_bounded() const { return limit.has_value(); }

  friend bool operator==(const MatchCap&, const MatchCap&) = default;
};

std::string to_string(const MatchCap& cap);
/// Accepts a byte count or "none" / "unbounded".
MatchCap parse_cap(std::string_view text);

struct CompressorConfig {
  std::uint32_t pws = 8;
  int table_log = 8;
  MatchCap max_match = MatchCap::bounded(36);
  MatchPolicy policy = MatchPolicy::single_match_per_window;
  std::uint32_t block_size = 65536;
  std::uint64_t pipeline_latency = 0;

  /// Throws UsageError if any field is out of range.
  void validate() const;
  /// Short stable identifier, e.g. "pws8-e256-m36-single".
  std::string id() const;
};

struct WordSlot {
  Word word = 0;
  bool eligible = false;
};

/// Words for positions [window_start, window_start + pws) clipped to the
/// block. Positions with fewer than four bytes left are ineligible.
std::vector<WordSlot> word_view(ByteView block, std::size_t window_start,
                                std::uint32_t pws);

struct MatchCandidate {
  std::size_t position = 0;
  std::size_t candidate_pointer = 0;

  std::size_t offset() const { return position - candidate_pointer; }
};

/// Earliest position p >= search_floor in the window whose lookup verifies:
/// stored word equals the current word, the candidate precedes p within
/// offset range, and a match may still start at p in a block of
/// `block_length` bytes.
std::optional<MatchCandidate> search_window(
    std::span<const WordSlot> words,
    std::span<const std::optional<HashEntry>> lookups,
    std::size_t window_start, std::size_t search_floor,
    std::size_t block_length);

/// Match length for a verified candidate, clamped to `cap` and so that the
/// last five bytes stay literals. Empty if the clamp leaves fewer than four.
std::optional<std::uint32_t> extend_match(ByteView block,
                                          const MatchCandidate& cand,
                                          const MatchCap& cap);

std::size_t apply_policy(std::size_t match_end, std::uint32_t pws,
                         MatchPolicy policy);

struct CompressionResult {
  EncodedBlock block;
  std::uint64_t cycles = 0;
  std::uint64_t matches_emitted = 0;
  std::uint64_t literals_emitted = 0;
};

std::uint64_t cycles_for_length(std::size_t length, const CompressorConfig& cfg);

/// Runs the pipeline over one block and returns the sequences it emits. The
/// sequences view `data`. `table` must have been built for cfg.table_log and
/// cfg.pws; a new generation is started before the first window.
std::vector<Sequence> plan_block(ByteView data, const CompressorConfig& cfg,
                                 HashTable& table);
std::vector<Sequence> plan_block(ByteView data, const CompressorConfig& cfg);

/// Throws UsageError if data is longer than cfg.block_size.
CompressionResult compress_block(ByteView data, const CompressorConfig& cfg,
                                 HashTable& table);
CompressionResult compress_block(ByteView data, const CompressorConfig& cfg);

/// Splits `data` into cfg.block_size blocks and compresses them
/// independently. Blocks are distributed over OpenMP threads, each owning its
/// own table.
std::vector<CompressionResult> compress_buffer(ByteView data,
                                               const CompressorConfig& cfg);

/// Single-threaded reference for compress_buffer: one table, one generation
/// per block. Produces identical results.
std::vector<CompressionResult> compress_buffer_serial(
    ByteView data, const CompressorConfig& cfg);

struct BufferStats {
  std::uint64_t input_bytes = 0;
  std::uint64_t output_bytes = 0;
  std::uint64_t cycles = 0;
  std::uint64_t matches = 0;
  std::uint64_t literals = 0;

  double ratio() const;
};

BufferStats summarize(std::span<const CompressionResult> results);

/// Model projection in Gbit/s: input bits processed per cycle at
/// `frequency_mhz`. Not a measurement.
double projected_throughput_gbps(std::uint64_t bytes, std::uint64_t cycles,
                                 double frequency_mhz);

}  // namespace lz4pw
