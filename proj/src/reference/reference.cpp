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

#include "lz4pw/reference/reference.hpp"

namespace lz4pw::reference {

std::uint32_t modular_fib_hash(const Word4& word, int table_log) {
  const std::uint64_t value = std::uint64_t{word[0]} +
                              std::uint64_t{word[1]} * 256 +
                              std::uint64_t{word[2]} * 65536 +
                              std::uint64_t{word[3]} * 16777216;
  const std::uint64_t product = (value * 2654435761ull) % 4294967296ull;
  return static_cast<std::uint32_t>(product /
                                    (std::uint64_t{1} << (32 - table_log)));
}

SinglePortTable::SinglePortTable(int table_log)
    : slots_(std::size_t{1} << table_log) {}

void SinglePortTable::clear() {
  for (auto& s : slots_) s.reset();
}

void SinglePortTable::write(std::uint32_t index, Entry entry) {
  slots_.at(index) = entry;
}

std::optional<SinglePortTable::Entry> SinglePortTable::read(
    std::uint32_t index) const {
  return slots_.at(index);
}

namespace {

Word4 word_at(ByteView block, std::size_t pos) {
  return {block[pos], block[pos + 1], block[pos + 2], block[pos + 3]};
}

}  // namespace

std::vector<RefSequence> greedy_reference(ByteView block, std::size_t pws,
                                          int table_log) {
  const std::size_t n = block.size();
  std::vector<RefSequence> out;
  SinglePortTable table(table_log);
  std::size_t written = 0;
  std::size_t literal_start = 0;
  std::size_t pos = 0;

  while (pos < n) {
    // Everything before this position's window is visible.
    const std::size_t window_begin = pos - pos % pws;
    for (; written < window_begin; ++written) {
      if (written + 4 > n) continue;
      const auto w = word_at(block, written);
      table.write(modular_fib_hash(w, table_log), {written, w});
    }

    if (pos + 12 < n) {
      const auto w = word_at(block, pos);
      const auto hit = table.read(modular_fib_hash(w, table_log));
      if (hit && hit->word == w && hit->pointer < pos &&
          pos - hit->pointer <= 65535) {
        std::size_t len = 0;
        while (pos + len + 5 < n && block[pos + len] == block[hit->pointer + len]) {
          ++len;
        }
        if (len >= 4) {
          out.push_back({literal_start, pos - literal_start,
                         pos - hit->pointer, len});
          pos += len;
          literal_start = pos;
          continue;
        }
      }
    }
    ++pos;
  }
  out.push_back({literal_start, n - literal_start, 0, 0});
  return out;
}

}  // namespace lz4pw::reference
