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

#include "lz4pw/record_file.hpp"

#include <string>

#include "lz4pw/errors.hpp"

namespace lz4pw {

Bytes write_records(std::span<const CompressionResult> blocks) {
  Bytes out;
  for (const auto& r : blocks) {
    const auto len = static_cast<std::uint32_t>(r.block.source_length);
    for (int shift = 0; shift < 32; shift += 8) {
      out.push_back(static_cast<std::uint8_t>(len >> shift));
    }
    out.insert(out.end(), r.block.bytes.begin(), r.block.bytes.end());
  }
  return out;
}

Bytes read_records(ByteView container) {
  Bytes out;
  std::size_t pos = 0;
  while (pos < container.size()) {
    if (container.size() - pos < 4) {
      throw DecodeError("truncated record header at byte " +
                        std::to_string(pos));
    }
    std::size_t len = 0;
    for (int i = 0; i < 4; ++i) {
      len |= std::size_t{container[pos + i]} << (8 * i);
    }
    pos += 4;
    if (len > kMaxBlockSize) {
      throw DecodeError("record length " + std::to_string(len) +
                        " exceeds 65536");
    }
    auto block = decode_record_block(container.subspan(pos), len);
    pos += block.consumed;
    out.insert(out.end(), block.data.begin(), block.data.end());
  }
  return out;
}

}  // namespace lz4pw
