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

#include "lz4pw/hash_engine.hpp"

#include <bit>
#include <cassert>
#include <cstdio>

#include "lz4pw/errors.hpp"

namespace lz4pw {

void HashConfig::validate() const {
  if (table_log < kMinTableLog || table_log > kMaxTableLog) {
    throw UsageError("table log " + std::to_string(table_log) +
                     " outside supported range 6..13");
  }
}

int table_log_for_entries(std::size_t entries) {
  if (!std::has_single_bit(entries)) {
    throw UsageError("hash table entries must be a power of two: " +
                     std::to_string(entries));
  }
  HashConfig cfg{std::countr_zero(entries)};
  cfg.validate();
  return cfg.table_log;
}

std::uint32_t fib_hash(std::span<const std::uint8_t, 4> word,
                       const HashConfig& cfg) {
  return fib_hash(load_word(word.data()), cfg.table_log);
}

HashTable::HashTable(HashConfig cfg, std::size_t ports) : cfg_(cfg) {
  cfg_.validate();
  if (ports == 0 || ports > 256) {
    throw UsageError("hash table needs 1..256 write ports");
  }
  banks_.assign(ports, std::vector<HashEntry>(cfg_.entries()));
  lvt_.assign(cfg_.entries(), LiveValue{});
}

void HashTable::begin_block() {
  // Generation 0 marks never-written slots; on wrap, clear once.
  if (++generation_ == 0) {
    lvt_.assign(lvt_.size(), LiveValue{});
    generation_ = 1;
  }
}

std::optional<HashEntry> HashTable::lookup(std::uint32_t index) const {
  const LiveValue& live = lvt_[index];
  if (live.generation != generation_) return std::nullopt;
  return banks_[live.bank][index];
}

void HashTable::lookup_window(std::span<const std::uint32_t> indices,
                              std::span<std::optional<HashEntry>> out) const {
  assert(out.size() >= indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) out[i] = lookup(indices[i]);
}

void HashTable::commit_window(std::span<const WindowWrite> writes) {
  assert(writes.size() <= banks_.size());
  // Port order is priority order: a later port overwrites the LVT slot.
  for (std::size_t port = 0; port < writes.size(); ++port) {
    const WindowWrite& w = writes[port];
    HashEntry e = w.entry;
    e.generation = generation_;
    banks_[port][w.index] = e;
    lvt_[w.index] = LiveValue{generation_, static_cast<std::uint8_t>(port)};
  }
}

std::string HashTable::dump() const {
  std::string out;
  char line[80];
  for (std::uint32_t i = 0; i < lvt_.size(); ++i) {
    const auto e = lookup(i);
    if (!e) continue;
    std::snprintf(line, sizeof line, "%5u %5u %08x %u\n", i,
                  unsigned{e->pointer}, e->word, e->generation);
    out += line;
  }
  return out;
}

}  // namespace lz4pw
