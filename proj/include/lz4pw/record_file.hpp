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

// Container for the command-line tool. Each record is a 4-byte
// little-endian source length followed by one raw LZ4 block; records follow
// one another with no padding. There is no magic number or checksum, so this
// is not the LZ4 frame format and the official lz4 tool cannot read it.

#pragma once

#include <span>

#include "lz4pw/block_codec.hpp"
#include "lz4pw/window_kernel.hpp"

namespace lz4pw {

Bytes write_records(std::span<const CompressionResult> blocks);

/// Throws DecodeError on a short prefix, a malformed block or a block that
/// does not decode to its recorded length.
Bytes read_records(ByteView container);

}  // namespace lz4pw
