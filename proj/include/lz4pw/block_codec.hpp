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

// LZ4 block format: sequence encoder and an independent reference decoder.
//
// A block is a run of sequences. Each sequence is
//
//   token | literal-length ext | literals | offset (2 bytes LE) | match-length ext
//
// The token's high nibble holds min(literals, 15) and its low nibble
// min(match_length - 4, 15). Counts that saturate a nibble continue in
// extension bytes: any number of 255s followed by one byte < 255. The last
// sequence of a block carries literals only and stops after them.
//
// End-of-block restrictions for conformant output: the last sequence is
// literal-only, no match covers any of the final kLastLiterals bytes, and no
// match starts within the final kMatchStartGuard bytes.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lz4pw {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline constexpr std::size_t kMinMatch = 4;
inline constexpr std::size_t kMaxOffset = 65535;
inline constexpr std::size_t kLastLiterals = 5;
inline constexpr std::size_t kMatchStartGuard = 12;
inline constexpr std::size_t kMaxBlockSize = 65536;

struct Match {
  std::uint32_t offset = 0;
  std::uint32_t length = 0;

  friend bool operator==(const Match&, const Match&) = default;
};

/// One LZ4 sequence. `literals` views the source block, so a Sequence must
/// not outlive the buffer it was planned from. A sequence without `match` is
/// the block's final literal-only run.
struct Sequence {
  ByteView literals;
  std::optional<Match> match;

  std::size_t coverage() const {
    return literals.size() + (match ? match->length : 0);
  }
};

struct EncodedBlock {
  Bytes bytes;
  std::size_t source_length = 0;
};

/// Appends one encoded sequence to `out`. Throws FormatError when the
/// sequence's match fields are out of range or disagree with `is_final`.
void append_sequence(Bytes& out, const Sequence& seq, bool is_final);

Bytes encode_sequence(const Sequence& seq, bool is_final);

/// Encodes a complete block. `seqs` must partition exactly `source_length`
/// bytes and respect the end-of-block restrictions; otherwise throws
/// ConsistencyError. An empty list encodes an empty source as zero bytes.
EncodedBlock encode_block(std::span<const Sequence> seqs,
                          std::size_t source_length);

/// Reference decoder. Shares no code with the encoder. Matches copy forward
/// byte by byte so offsets smaller than the match length replicate data.
/// Throws DecodeError on a zero offset, an offset reaching before the
/// output start, output beyond `max_output`, or a truncated stream.
Bytes decode_block(ByteView block, std::size_t max_output);

struct RecordDecode {
  Bytes data;
  std::size_t consumed = 0;
};

/// Decodes one block from the front of `stream` whose decoded size is known
/// to be `source_length`. The block ends when a literal run brings the output
/// to exactly `source_length`. Used by the record container, where blocks are
/// stored back to back behind a length prefix.
RecordDecode decode_record_block(ByteView stream, std::size_t source_length);

}  // namespace lz4pw
