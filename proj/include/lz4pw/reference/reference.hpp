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

// Independent reference models used as test oracles. Nothing here calls
// into the window kernel or the LVT table; agreement between the two is the
// point of the tests that use them.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lz4pw::reference {

using ByteView = std::span<const std::uint8_t>;
using Word4 = std::array<std::uint8_t, 4>;

/// Fibonacci hash by plain 64-bit modular arithmetic.
std::uint32_t modular_fib_hash(const Word4& word, int table_log);

/// Single-port dictionary written one position at a time and cleared
/// between blocks.
class SinglePortTable {
 public:
  struct Entry {
    std::size_t pointer = 0;
    Word4 word{};
  };

  explicit SinglePortTable(int table_log);

  void clear();
  void write(std::uint32_t index, Entry entry);
  std::optional<Entry> read(std::uint32_t index) const;
  std::size_t size() const { return slots_.size(); }

 private:
  std::vector<std::optional<Entry>> slots_;
};

struct RefSequence {
  std::size_t literal_start = 0;
  std::size_t literal_length = 0;
  /// Zero for the final literal-only sequence.
  std::size_t offset = 0;
  std::size_t match_length = 0;

  friend bool operator==(const RefSequence&, const RefSequence&) = default;
};

/// Position-by-position greedy LZ4 parse with unbounded matches. A position
/// sees dictionary entries from every earlier window of `pws` bytes but none
/// from its own window. Applies the LZ4 end-of-block rules.
std::vector<RefSequence> greedy_reference(ByteView block, std::size_t pws,
                                          int table_log);

}  // namespace lz4pw::reference
