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

#include "lz4pw/window_kernel.hpp"

#include <algorithm>
#include <charconv>

#include "lz4pw/errors.hpp"

namespace lz4pw {

std::string to_string(MatchPolicy policy) {
  return policy == MatchPolicy::single_match_per_window ? "single" : "multi";
}

MatchPolicy parse_policy(std::string_view text) {
  if (text == "single" || text == "single_match_per_window") {
    return MatchPolicy::single_match_per_window;
  }
  if (text == "multi" || text == "multi_match") return MatchPolicy::multi_match;
  throw UsageError("unknown policy '" + std::string(text) +
                   "' (expected single or multi)");
}

std::string to_string(const MatchCap& cap) {
  return cap.limit ? std::to_string(*cap.limit) : "none";
}

MatchCap parse_cap(std::string_view text) {
  if (text == "none" || text == "unbounded") return MatchCap::unbounded();
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("invalid max match '" + std::string(text) + "'");
  }
  return MatchCap::bounded(value);
}

void CompressorConfig::validate() const {
  if (pws < 1 || pws > 256) {
    throw UsageError("pws must be in 1..256, got " + std::to_string(pws));
  }
  HashConfig{table_log}.validate();
  if (max_match.limit && *max_match.limit < kMinMatch) {
    throw UsageError("max match " + std::to_string(*max_match.limit) +
                     " is below the minimum match length 4");
  }
  if (block_size < 1 || block_size > kMaxBlockSize) {
    throw UsageError("block size must be in 1..65536, got " +
                     std::to_string(block_size));
  }
}

std::string CompressorConfig::id() const {
  std::string s = "pws" + std::to_string(pws) + "-e" +
                  std::to_string(std::size_t{1} << table_log) + "-m" +
                  to_string(max_match) + "-" + to_string(policy);
  if (block_size != kMaxBlockSize) s += "-b" + std::to_string(block_size);
  if (pipeline_latency != 0) s += "-l" + std::to_string(pipeline_latency);
  return s;
}

namespace {

void fill_words(ByteView block, std::size_t window_start, std::size_t count,
                std::span<WordSlot> out) {
  const std::size_t n = block.size();
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t p = window_start + k;
    if (p + kMinMatch <= n) {
      out[k] = WordSlot{load_word(block.data() + p), true};
    } else {
      out[k] = WordSlot{};
    }
  }
}

}  // namespace

std::vector<WordSlot> word_view(ByteView block, std::size_t window_start,
                                std::uint32_t pws) {
  if (window_start >= block.size()) return {};
  const std::size_t count = std::min<std::size_t>(pws, block.size() - window_start);
  std::vector<WordSlot> words(count);
  fill_words(block, window_start, count, words);
  return words;
}

std::optional<MatchCandidate> search_window(
    std::span<const WordSlot> words,
    std::span<const std::optional<HashEntry>> lookups,
    std::size_t window_start, std::size_t search_floor,
    std::size_t block_length) {
  const std::size_t first = search_floor > window_start
                                ? search_floor - window_start
                                : 0;
  for (std::size_t k = first; k < words.size() && k < lookups.size(); ++k) {
    const std::size_t p = window_start + k;
    if (p + kMatchStartGuard >= block_length) break;
    const auto& hit = lookups[k];
    if (!words[k].eligible || !hit) continue;
    if (hit->word != words[k].word) continue;
    if (hit->pointer >= p || p - hit->pointer > kMaxOffset) continue;
    return MatchCandidate{p, hit->pointer};
  }
  return std::nullopt;
}

std::optional<std::uint32_t> extend_match(ByteView block,
                                          const MatchCandidate& cand,
                                          const MatchCap& cap) {
  const std::size_t n = block.size();
  if (cand.position + kLastLiterals >= n) return std::nullopt;
  std::size_t limit = n - kLastLiterals - cand.position;
  if (cap.limit) limit = std::min<std::size_t>(limit, *cap.limit);

  // The candidate trails the current position, so an overlapping compare
  // only ever reads bytes already known to the decoder.
  const std::uint8_t* cur = block.data() + cand.position;
  const std::uint8_t* ref = block.data() + cand.candidate_pointer;
  std::size_t len = 0;
  while (len < limit && cur[len] == ref[len]) ++len;
  if (len < kMinMatch) return std::nullopt;
  return static_cast<std::uint32_t>(len);
}

std::size_t apply_policy(std::size_t match_end, std::uint32_t pws,
                         MatchPolicy policy) {
  if (policy == MatchPolicy::multi_match) return match_end;
  return (match_end + pws - 1) / pws * pws;
}

std::uint64_t cycles_for_length(std::size_t length,
                                const CompressorConfig& cfg) {
  return (length + cfg.pws - 1) / cfg.pws + cfg.pipeline_latency;
}

std::vector<Sequence> plan_block(ByteView data, const CompressorConfig& cfg,
                                 HashTable& table) {
  if (data.size() > cfg.block_size) {
    throw UsageError("block of " + std::to_string(data.size()) +
                     " bytes exceeds block size " +
                     std::to_string(cfg.block_size));
  }
  if (table.config().table_log != cfg.table_log || table.ports() < cfg.pws) {
    throw UsageError("hash table does not match compressor config");
  }
  table.begin_block();

  const std::size_t n = data.size();
  const std::size_t pws = cfg.pws;
  std::vector<Sequence> seqs;
  if (n == 0) return seqs;

  std::vector<WordSlot> words(pws);
  std::vector<std::uint32_t> indices(pws);
  std::vector<std::optional<HashEntry>> lookups(pws);
  WindowWriteSet writes;
  writes.reserve(pws);

  std::size_t search_floor = 0;
  std::size_t literal_start = 0;

  for (std::size_t ws = 0; ws < n; ws += pws) {
    const std::size_t count = std::min(pws, n - ws);
    fill_words(data, ws, count, words);

    // Eligible positions form a prefix of the window.
    std::size_t eligible = 0;
    while (eligible < count && words[eligible].eligible) {
      indices[eligible] = fib_hash(words[eligible].word, cfg.table_log);
      ++eligible;
    }

    table.lookup_window(std::span(indices).first(eligible),
                        std::span(lookups).first(eligible));
    writes.clear();
    for (std::size_t k = 0; k < eligible; ++k) {
      writes.push_back(WindowWrite{
          indices[k],
          HashEntry{static_cast<std::uint16_t>(ws + k), words[k].word, 0}});
    }
    table.commit_window(writes);

    std::size_t floor = std::max(search_floor, ws);
    while (floor < ws + count) {
      const auto cand = search_window(
          std::span<const WordSlot>(words).first(eligible),
          std::span<const std::optional<HashEntry>>(lookups).first(eligible),
          ws, floor, n);
      if (!cand) break;
      const auto len = extend_match(data, *cand, cfg.max_match);
      if (!len) {
        floor = cand->position + 1;
        continue;
      }
      seqs.push_back(Sequence{
          data.subspan(literal_start, cand->position - literal_start),
          Match{static_cast<std::uint32_t>(cand->offset()), *len}});
      literal_start = cand->position + *len;
      search_floor = apply_policy(literal_start, cfg.pws, cfg.policy);
      floor = search_floor;
    }
  }

  seqs.push_back(Sequence{data.subspan(literal_start), std::nullopt});
  return seqs;
}

std::vector<Sequence> plan_block(ByteView data, const CompressorConfig& cfg) {
  cfg.validate();
  HashTable table(HashConfig{cfg.table_log}, cfg.pws);
  return plan_block(data, cfg, table);
}

CompressionResult compress_block(ByteView data, const CompressorConfig& cfg,
                                 HashTable& table) {
  const auto seqs = plan_block(data, cfg, table);
  CompressionResult result;
  result.block = encode_block(seqs, data.size());
  result.cycles = cycles_for_length(data.size(), cfg);
  for (const auto& s : seqs) {
    result.literals_emitted += s.literals.size();
    if (s.match) ++result.matches_emitted;
  }
  return result;
}

CompressionResult compress_block(ByteView data, const CompressorConfig& cfg) {
  cfg.validate();
  HashTable table(HashConfig{cfg.table_log}, cfg.pws);
  return compress_block(data, cfg, table);
}

namespace {

std::size_t block_count(std::size_t n, std::size_t block_size) {
  return n == 0 ? 1 : (n + block_size - 1) / block_size;
}

ByteView block_at(ByteView data, std::size_t i, std::size_t block_size) {
  const std::size_t start = i * block_size;
  return data.subspan(start, std::min(block_size, data.size() - start));
}

}  // namespace

std::vector<CompressionResult> compress_buffer(ByteView data,
                                               const CompressorConfig& cfg) {
  cfg.validate();
  const std::size_t blocks = block_count(data.size(), cfg.block_size);
  std::vector<CompressionResult> results(blocks);
  if (blocks == 1) {
    results[0] = compress_block(data, cfg);
    return results;
  }

  const auto nblocks = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel
  {
    HashTable table(HashConfig{cfg.table_log}, cfg.pws);
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < nblocks; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      results[idx] = compress_block(block_at(data, idx, cfg.block_size), cfg, table);
    }
  }
  return results;
}

std::vector<CompressionResult> compress_buffer_serial(
    ByteView data, const CompressorConfig& cfg) {
  cfg.validate();
  HashTable table(HashConfig{cfg.table_log}, cfg.pws);
  const std::size_t blocks = block_count(data.size(), cfg.block_size);
  std::vector<CompressionResult> results;
  results.reserve(blocks);
  for (std::size_t i = 0; i < blocks; ++i) {
    results.push_back(
        compress_block(block_at(data, i, cfg.block_size), cfg, table));
  }
  return results;
}

double BufferStats::ratio() const {
  return output_bytes == 0 ? 0.0
                           : static_cast<double>(input_bytes) /
                                 static_cast<double>(output_bytes);
}

BufferStats summarize(std::span<const CompressionResult> results) {
  BufferStats s;
  for (const auto& r : results) {
    s.input_bytes += r.block.source_length;
    s.output_bytes += r.block.bytes.size();
    s.cycles += r.cycles;
    s.matches += r.matches_emitted;
    s.literals += r.literals_emitted;
  }
  return s;
}

double projected_throughput_gbps(std::uint64_t bytes, std::uint64_t cycles,
                                 double frequency_mhz) {
  if (cycles == 0) return 0.0;
  return static_cast<double>(bytes) * 8.0 * frequency_mhz * 1e6 /
         static_cast<double>(cycles) / 1e9;
}

}  // namespace lz4pw
