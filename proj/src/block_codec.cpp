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

#include "lz4pw/block_codec.hpp"

#include <string>

#include "lz4pw/errors.hpp"

namespace lz4pw {

namespace {

constexpr std::size_t kNibbleMax = 15;

void append_length_ext(Bytes& out, std::size_t remainder) {
  while (remainder >= 255) {
    out.push_back(255);
    remainder -= 255;
  }
  out.push_back(static_cast<std::uint8_t>(remainder));
}

}  // namespace

void append_sequence(Bytes& out, const Sequence& seq, bool is_final) {
  if (is_final != !seq.match.has_value()) {
    throw FormatError(is_final ? "final sequence carries a match"
                               : "non-final sequence has no match");
  }
  if (seq.match) {
    if (seq.match->offset == 0 || seq.match->offset > kMaxOffset) {
      throw FormatError("match offset out of range: " +
                        std::to_string(seq.match->offset));
    }
    if (seq.match->length < kMinMatch) {
      throw FormatError("match length below minimum: " +
                        std::to_string(seq.match->length));
    }
  }

  const std::size_t lit = seq.literals.size();
  const std::size_t ml = seq.match ? seq.match->length - kMinMatch : 0;
  const auto lit_nibble = lit < kNibbleMax ? lit : kNibbleMax;
  const auto ml_nibble = ml < kNibbleMax ? ml : kNibbleMax;
  out.push_back(static_cast<std::uint8_t>((lit_nibble << 4) | ml_nibble));
  if (lit >= kNibbleMax) append_length_ext(out, lit - kNibbleMax);
  out.insert(out.end(), seq.literals.begin(), seq.literals.end());
  if (!seq.match) return;

  out.push_back(static_cast<std::uint8_t>(seq.match->offset & 0xff));
  out.push_back(static_cast<std::uint8_t>(seq.match->offset >> 8));
  if (ml >= kNibbleMax) append_length_ext(out, ml - kNibbleMax);
}

Bytes encode_sequence(const Sequence& seq, bool is_final) {
  Bytes out;
  append_sequence(out, seq, is_final);
  return out;
}

EncodedBlock encode_block(std::span<const Sequence> seqs,
                          std::size_t source_length) {
  EncodedBlock block;
  block.source_length = source_length;
  if (seqs.empty()) {
    if (source_length != 0) {
      throw ConsistencyError("no sequences for a non-empty block");
    }
    return block;
  }

  std::size_t pos = 0;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    const auto& seq = seqs[i];
    const bool is_final = i + 1 == seqs.size();
    if (is_final && seq.match) {
      throw ConsistencyError("last sequence must be literal-only");
    }
    pos += seq.literals.size();
    if (seq.match) {
      if (seq.match->offset > pos) {
        throw ConsistencyError("match offset reaches before block start");
      }
      if (pos + kMatchStartGuard >= source_length) {
        throw ConsistencyError("match starts within the last 12 bytes");
      }
      pos += seq.match->length;
      if (pos + kLastLiterals > source_length) {
        throw ConsistencyError("match covers the last 5 bytes");
      }
    }
  }
  if (pos != source_length) {
    throw ConsistencyError("sequences cover " + std::to_string(pos) +
                           " bytes, block has " +
                           std::to_string(source_length));
  }

  block.bytes.reserve(source_length + source_length / 255 + 16);
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    append_sequence(block.bytes, seqs[i], i + 1 == seqs.size());
  }
  return block;
}

namespace {

// Decoder state machine kept separate from the encoder above.
class Reader {
 public:
  explicit Reader(ByteView in) : in_(in) {}

  bool done() const { return pos_ == in_.size(); }
  std::size_t position() const { return pos_; }

  std::uint8_t byte() {
    if (pos_ >= in_.size()) throw DecodeError("truncated block");
    return in_[pos_++];
  }

  std::size_t length(std::size_t nibble) {
    std::size_t len = nibble;
    if (nibble != 15) return len;
    std::uint8_t b = 0;
    do {
      b = byte();
      len += b;
      if (len > (std::size_t{1} << 40)) throw DecodeError("length overflow");
    } while (b == 255);
    return len;
  }

  ByteView take(std::size_t n) {
    if (in_.size() - pos_ < n) throw DecodeError("truncated literals");
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

 private:
  ByteView in_;
  std::size_t pos_ = 0;
};

// Decodes sequences into `out`. With `stop_at` set, decoding ends as soon as
// a literal run leaves the output at exactly that size.
std::size_t decode_into(ByteView in, std::size_t max_output,
                        std::optional<std::size_t> stop_at, Bytes& out) {
  Reader r(in);
  if (stop_at && *stop_at == 0) return 0;
  while (!r.done()) {
    const std::uint8_t token = r.byte();
    const std::size_t lit = r.length(token >> 4);
    if (lit > max_output - out.size()) {
      throw DecodeError("literals exceed output bound");
    }
    const auto literals = r.take(lit);
    out.insert(out.end(), literals.begin(), literals.end());

    if (stop_at && out.size() == *stop_at) return r.position();
    if (r.done()) {
      if (stop_at) throw DecodeError("truncated block");
      break;
    }

    std::size_t offset = r.byte();
    offset |= std::size_t{r.byte()} << 8;
    if (offset == 0) throw DecodeError("zero offset");
    if (offset > out.size()) {
      throw DecodeError("offset reaches before output start");
    }
    const std::size_t len = r.length(token & 0x0f) + 4;
    if (len > max_output - out.size()) {
      throw DecodeError("match exceeds output bound");
    }
    std::size_t src = out.size() - offset;
    for (std::size_t i = 0; i < len; ++i) out.push_back(out[src++]);
  }
  if (stop_at) throw DecodeError("truncated block");
  return r.position();
}

}  // namespace

Bytes decode_block(ByteView block, std::size_t max_output) {
  Bytes out;
  out.reserve(max_output < kMaxBlockSize ? max_output : kMaxBlockSize);
  decode_into(block, max_output, std::nullopt, out);
  return out;
}

RecordDecode decode_record_block(ByteView stream, std::size_t source_length) {
  RecordDecode r;
  r.data.reserve(source_length);
  r.consumed = decode_into(stream, source_length, source_length, r.data);
  return r;
}

}  // namespace lz4pw
