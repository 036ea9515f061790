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

// Fibonacci hashing and a behavioral model of the multi-port dictionary.
//
// The dictionary is built the way a Live Value Table memory is: one bank per
// write port (one port per window position) plus a small table recording, for
// every slot, which bank holds its most recent value and the block generation
// that wrote it. Lookups for a window see only what earlier windows
// committed. Entries from earlier blocks are invalidated by generation
// mismatch instead of being erased.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lz4pw {

/// Four source bytes packed least-significant-byte first.
using Word = std::uint32_t;

inline constexpr std::uint32_t kFibonacciMultiplier = 2654435761u;
inline constexpr int kMinTableLog = 6;
inline constexpr int kMaxTableLog = 13;

struct HashConfig {
  int table_log = 8;

  std::size_t entries() const { return std::size_t{1} << table_log; }
  /// Throws UsageError outside [kMinTableLog, kMaxTableLog].
  void validate() const;
};

/// Maps an entry count (64..8192, power of two) to a table log.
int table_log_for_entries(std::size_t entries);

inline Word load_word(const std::uint8_t* p) {
  return Word{p[0]} | (Word{p[1]} << 8) | (Word{p[2]} << 16) |
         (Word{p[3]} << 24);
}

inline std::uint32_t fib_hash(Word word, int table_log) {
  return (word * kFibonacciMultiplier) >> (32 - table_log);
}

std::uint32_t fib_hash(std::span<const std::uint8_t, 4> word,
                       const HashConfig& cfg);

struct HashEntry {
  std::uint16_t pointer = 0;
  Word word = 0;
  std::uint32_t generation = 0;

  friend bool operator==(const HashEntry&, const HashEntry&) = default;
};

struct WindowWrite {
  std::uint32_t index = 0;
  HashEntry entry;
};

/// Writes issued by one window, ordered by ascending window position.
using WindowWriteSet = std::vector<WindowWrite>;

class HashTable {
 public:
  /// `ports` is the number of simultaneous writes per window (the PWS).
  HashTable(HashConfig cfg, std::size_t ports);

  const HashConfig& config() const { return cfg_; }
  std::size_t ports() const { return banks_.size(); }
  std::uint32_t generation() const { return generation_; }

  /// Starts a new independent block; everything written so far goes stale.
  void begin_block();

  std::optional<HashEntry> lookup(std::uint32_t index) const;

  void lookup_window(std::span<const std::uint32_t> indices,
                     std::span<std::optional<HashEntry>> out) const;

  /// Applies a window's writes at once. The i-th write uses port i; for
  /// duplicate indices the highest port wins. At most ports() writes.
  void commit_window(std::span<const WindowWrite> writes);

  /// One line per live slot: index, pointer, word (hex), generation.
  std::string dump() const;

 private:
  struct LiveValue {
    std::uint32_t generation = 0;
    std::uint8_t bank = 0;
  };

  HashConfig cfg_;
  std::vector<std::vector<HashEntry>> banks_;
  std::vector<LiveValue> lvt_;
  std::uint32_t generation_ = 1;
};

}  // namespace lz4pw
