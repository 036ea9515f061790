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

#include "lz4pw/reference/checks.hpp"

#include <algorithm>
#include <ostream>

#include "lz4pw/block_codec.hpp"
#include "lz4pw/hash_engine.hpp"

namespace lz4pw::reference {

std::optional<std::size_t> first_difference(ByteView a, ByteView b) {
  const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  if (ia == a.end() && ib == b.end()) return std::nullopt;
  return static_cast<std::size_t>(ia - a.begin());
}

std::vector<RefSequence> as_positions(std::span<const Sequence> seqs,
                                      ByteView block) {
  std::vector<RefSequence> out;
  for (const auto& s : seqs) {
    RefSequence r;
    r.literal_start = static_cast<std::size_t>(s.literals.data() - block.data());
    r.literal_length = s.literals.size();
    if (s.match) {
      r.offset = s.match->offset;
      r.match_length = s.match->length;
    }
    out.push_back(r);
  }
  if (out.empty()) out.push_back({0, 0, 0, 0});
  return out;
}

std::optional<std::string> round_trip_failure(ByteView data,
                                              const CompressorConfig& cfg) {
  std::vector<std::uint8_t> decoded;
  try {
    for (const auto& r : compress_buffer_serial(data, cfg)) {
      auto block = decode_block(r.block.bytes, r.block.source_length);
      if (block.size() != r.block.source_length) {
        return "block decoded to " + std::to_string(block.size()) +
               " bytes, expected " + std::to_string(r.block.source_length);
      }
      decoded.insert(decoded.end(), block.begin(), block.end());
    }
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
  if (auto at = first_difference(data, decoded)) {
    return "mismatch at byte " + std::to_string(*at) + " (" + cfg.id() + ")";
  }
  return std::nullopt;
}

std::optional<std::string> stream_invariant_failure(
    std::span<const Sequence> seqs, ByteView block, const CompressorConfig& cfg) {
  const std::size_t n = block.size();
  if (n == 0) {
    return seqs.empty() ? std::nullopt
                        : std::optional<std::string>("empty block has sequences");
  }
  if (seqs.empty() || seqs.back().match) return "final sequence not literal-only";

  const auto fail = [](std::size_t at, const std::string& what) {
    return std::optional<std::string>(what + " at position " + std::to_string(at));
  };

  std::size_t pos = 0;
  std::optional<std::size_t> prev_end;
  for (const auto& s : seqs) {
    pos += s.literals.size();
    if (!s.match) continue;
    const auto& m = *s.match;
    if (m.length < kMinMatch) return fail(pos, "short match");
    if (cfg.max_match.limit && m.length > *cfg.max_match.limit) {
      return fail(pos, "match longer than cap");
    }
    if (m.offset < 1 || m.offset > kMaxOffset || m.offset > pos) {
      return fail(pos, "offset out of range");
    }
    if (pos + kMatchStartGuard >= n) return fail(pos, "match starts in last 12");
    if (pos + m.length + kLastLiterals > n) {
      return fail(pos, "match covers last 5");
    }
    const std::size_t window_begin = pos / cfg.pws * cfg.pws;
    if (pos - m.offset >= window_begin) {
      return fail(pos, "candidate from current window");
    }
    if (cfg.policy == MatchPolicy::single_match_per_window && prev_end) {
      const std::size_t aligned = (*prev_end + cfg.pws - 1) / cfg.pws * cfg.pws;
      if (pos < aligned) return fail(pos, "second match in one window");
    }
    pos += m.length;
    prev_end = pos;
  }
  if (pos != n) return fail(pos, "coverage mismatch");
  return std::nullopt;
}

bool lvt_trace_agrees(Rng& rng) {
  std::uniform_int_distribution<int> log_dist(kMinTableLog, 8);
  std::uniform_int_distribution<std::size_t> pws_dist(1, 16);
  const int log = log_dist(rng);
  const std::size_t pws = pws_dist(rng);
  HashTable lvt(HashConfig{log}, pws);
  SinglePortTable oracle(log);
  lvt.begin_block();

  // Small index range forces duplicate writes within a window.
  std::uniform_int_distribution<std::uint32_t> index_dist(
      0, std::min<std::uint32_t>(15, (1u << log) - 1));
  std::uniform_int_distribution<std::uint32_t> word_dist;
  std::uniform_int_distribution<std::size_t> count_dist(0, pws);
  std::bernoulli_distribution restart(0.1);
  std::uniform_int_distribution<int> windows_dist(1, 40);

  std::size_t position = 0;
  const int windows = windows_dist(rng);
  for (int w = 0; w < windows; ++w) {
    if (restart(rng)) {
      lvt.begin_block();
      oracle.clear();
      position = 0;
    }
    WindowWriteSet writes;
    const std::size_t count = count_dist(rng);
    for (std::size_t k = 0; k < count; ++k) {
      const Word word = word_dist(rng);
      writes.push_back(WindowWrite{
          index_dist(rng),
          HashEntry{static_cast<std::uint16_t>(position + k), word, 0}});
    }
    lvt.commit_window(writes);
    for (const auto& wr : writes) {
      const Word4 bytes{static_cast<std::uint8_t>(wr.entry.word),
                        static_cast<std::uint8_t>(wr.entry.word >> 8),
                        static_cast<std::uint8_t>(wr.entry.word >> 16),
                        static_cast<std::uint8_t>(wr.entry.word >> 24)};
      oracle.write(wr.index, {wr.entry.pointer, bytes});
    }
    position += pws;

    for (std::uint32_t i = 0; i < oracle.size(); ++i) {
      const auto got = lvt.lookup(i);
      const auto want = oracle.read(i);
      if (got.has_value() != want.has_value()) return false;
      if (!got) continue;
      if (got->pointer != want->pointer) return false;
      if (load_word(want->word.data()) != got->word) return false;
      if (got->generation != lvt.generation()) return false;
    }
  }
  return true;
}

bool hash_oracle_agrees(Rng& rng, int table_log, std::size_t count) {
  std::uniform_int_distribution<int> byte(0, 255);
  for (std::size_t i = 0; i < count; ++i) {
    const Word4 w{static_cast<std::uint8_t>(byte(rng)),
                  static_cast<std::uint8_t>(byte(rng)),
                  static_cast<std::uint8_t>(byte(rng)),
                  static_cast<std::uint8_t>(byte(rng))};
    if (fib_hash(std::span<const std::uint8_t, 4>(w), HashConfig{table_log}) !=
        modular_fib_hash(w, table_log)) {
      return false;
    }
  }
  return true;
}

std::vector<CompressorConfig> default_grid() {
  std::vector<CompressorConfig> grid;
  for (auto policy :
       {MatchPolicy::single_match_per_window, MatchPolicy::multi_match}) {
    for (auto cap : {MatchCap::bounded(36), MatchCap::unbounded()}) {
      for (int log : {6, 8, 13}) {
        CompressorConfig cfg;
        cfg.policy = policy;
        cfg.max_match = cap;
        cfg.table_log = log;
        grid.push_back(cfg);
      }
    }
  }
  return grid;
}

bool run_selftest(const SelftestOptions& options, std::ostream& out) {
  Rng rng(options.seed);
  bool all = true;
  const auto report = [&](const std::string& name, bool ok,
                          const std::string& detail = {}) {
    out << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) out << ": " << detail;
    out << "\n";
    all = all && ok;
  };

  {
    std::optional<std::string> failure;
    std::uniform_int_distribution<std::size_t> size(0, 16384);
    const auto grid = default_grid();
    for (std::size_t i = 0; i < options.iterations && !failure; ++i) {
      const auto kind = kAllDataKinds[i % 3];
      const auto data = generate(kind, rng, size(rng));
      const auto& cfg = grid[i % grid.size()];
      failure = round_trip_failure(data, cfg);
      if (!failure) {
        const auto seqs = plan_block(data, cfg);
        failure = stream_invariant_failure(seqs, data, cfg);
      }
    }
    report("round trip and stream invariants", !failure, failure.value_or(""));
  }

  {
    bool ok = true;
    for (int log = kMinTableLog; log <= kMaxTableLog && ok; ++log) {
      ok = hash_oracle_agrees(rng, log, options.iterations * 100);
    }
    report("fib_hash vs modular oracle", ok);
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < options.iterations && ok; ++i) {
      ok = lvt_trace_agrees(rng);
    }
    report("LVT table vs single-port oracle", ok);
  }

  {
    bool ok = true;
    std::uniform_int_distribution<std::size_t> size(0, 4096);
    CompressorConfig cfg;
    cfg.policy = MatchPolicy::multi_match;
    cfg.max_match = MatchCap::unbounded();
    for (std::size_t i = 0; i < options.iterations && ok; ++i) {
      const auto data = generate(kAllDataKinds[i % 3], rng, size(rng));
      ok = as_positions(plan_block(data, cfg), data) ==
           greedy_reference(data, cfg.pws, cfg.table_log);
    }
    report("multi-match unbounded vs serial greedy reference", ok);
  }

  {
    bool ok = true;
    std::uniform_int_distribution<std::size_t> size(0, 65536);
    CompressorConfig cfg;
    for (std::size_t i = 0; i < options.iterations / 4 + 1 && ok; ++i) {
      const std::size_t n = size(rng);
      const auto a = compress_block(uniform_bytes(rng, n), cfg);
      const auto b = compress_block(run_bytes(rng, n), cfg);
      ok = a.cycles == b.cycles && a.cycles == cycles_for_length(n, cfg);
    }
    report("cycle count depends on length only", ok);
  }
  return all;
}

}  // namespace lz4pw::reference
