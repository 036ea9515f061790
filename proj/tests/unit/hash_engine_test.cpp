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

#include <doctest.h>

#include <array>

#include "lz4pw/errors.hpp"
#include "lz4pw/reference/checks.hpp"
#include "lz4pw/reference/reference.hpp"

namespace lz4pw {
namespace {

std::uint32_t hash_bytes(std::array<std::uint8_t, 4> w, int log) {
  return fib_hash(std::span<const std::uint8_t, 4>(w), HashConfig{log});
}

TEST_CASE("fib_hash: fixed values") {
  CHECK(hash_bytes({0x01, 0x00, 0x00, 0x00}, 8) == 158);
  for (int log = kMinTableLog; log <= kMaxTableLog; ++log) {
    CHECK(hash_bytes({0, 0, 0, 0}, log) == 0);
  }
  // "abcd" read little-endian is 0x64636261; value from the modular oracle.
  CHECK(hash_bytes({'a', 'b', 'c', 'd'}, 8) == 99);
}

TEST_CASE("fib_hash: range, determinism and agreement with the modular oracle") {
  reference::Rng rng(3);
  std::uniform_int_distribution<std::uint32_t> word;
  for (int log = kMinTableLog; log <= kMaxTableLog; ++log) {
    for (int i = 0; i < 20000; ++i) {
      const Word w = word(rng);
      const auto h = fib_hash(w, log);
      REQUIRE(h < (1u << log));
      REQUIRE(h == fib_hash(w, log));
    }
    CHECK(reference::hash_oracle_agrees(rng, log, 20000));
  }
}

TEST_CASE("table log bounds") {
  CHECK(table_log_for_entries(64) == 6);
  CHECK(table_log_for_entries(256) == 8);
  CHECK(table_log_for_entries(8192) == 13);
  CHECK_THROWS_AS(table_log_for_entries(32), UsageError);
  CHECK_THROWS_AS(table_log_for_entries(16384), UsageError);
  CHECK_THROWS_AS(table_log_for_entries(300), UsageError);
  CHECK_THROWS_AS(HashTable(HashConfig{5}, 8), UsageError);
}

HashEntry entry(std::uint16_t pointer, Word word) { return {pointer, word, 0}; }

TEST_CASE("lookup of a never-written slot is empty") {
  HashTable t(HashConfig{8}, 8);
  t.begin_block();
  for (std::uint32_t i = 0; i < 256; ++i) CHECK_FALSE(t.lookup(i).has_value());
}

TEST_CASE("entries from an earlier block are stale") {
  HashTable t(HashConfig{8}, 8);
  t.begin_block();
  const WindowWrite w{5, entry(3, 0xabcdef01)};
  t.commit_window(std::span(&w, 1));
  REQUIRE(t.lookup(5).has_value());
  CHECK(t.lookup(5)->generation == t.generation());
  t.begin_block();
  CHECK_FALSE(t.lookup(5).has_value());
}

TEST_CASE("duplicate indices in one window: highest position wins") {
  HashTable t(HashConfig{8}, 8);
  t.begin_block();
  // Eight identical words hash to one slot; the sequential oracle keeps the
  // last write, position 7.
  WindowWriteSet ws;
  const Word aaaa = load_word(reinterpret_cast<const std::uint8_t*>("aaaa"));
  const auto idx = fib_hash(aaaa, 8);
  for (std::uint16_t p = 0; p < 8; ++p) ws.push_back({idx, entry(p, aaaa)});
  t.commit_window(ws);
  REQUIRE(t.lookup(idx).has_value());
  CHECK(t.lookup(idx)->pointer == 7);

  std::size_t live = 0;
  for (std::uint32_t i = 0; i < 256; ++i) live += t.lookup(i).has_value();
  CHECK(live == 1);
}

TEST_CASE("empty write set and disjoint writes") {
  HashTable t(HashConfig{6}, 4);
  t.begin_block();
  t.commit_window({});
  for (std::uint32_t i = 0; i < 64; ++i) CHECK_FALSE(t.lookup(i).has_value());
  const WindowWrite ws[] = {{1, entry(0, 1)}, {2, entry(1, 2)}, {3, entry(2, 3)}};
  t.commit_window(ws);
  for (const auto& w : ws) {
    REQUIRE(t.lookup(w.index).has_value());
    CHECK(t.lookup(w.index)->pointer == w.entry.pointer);
    CHECK(t.lookup(w.index)->word == w.entry.word);
  }
}

TEST_CASE("lookups made before a commit do not see it") {
  HashTable t(HashConfig{8}, 8);
  t.begin_block();
  std::array<std::uint32_t, 2> idx{9, 9};
  std::array<std::optional<HashEntry>, 2> before;
  t.lookup_window(idx, before);
  const WindowWrite ws[] = {{9, entry(0, 7)}, {9, entry(1, 7)}};
  t.commit_window(ws);
  CHECK_FALSE(before[0].has_value());
  CHECK_FALSE(before[1].has_value());
  CHECK(t.lookup(9)->pointer == 1);
}

TEST_CASE("LVT table agrees with the single-port oracle on random traces") {
  reference::Rng rng(11);
  for (int i = 0; i < 500; ++i) REQUIRE(reference::lvt_trace_agrees(rng));
}

TEST_CASE("dump lists live slots") {
  HashTable t(HashConfig{6}, 2);
  t.begin_block();
  const WindowWrite w{4, entry(12, 0x64636261)};
  t.commit_window(std::span(&w, 1));
  CHECK(t.dump() == "    4    12 64636261 2\n");
}

}  // namespace
}  // namespace lz4pw
