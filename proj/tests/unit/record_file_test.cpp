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

#include <doctest.h>

#include "lz4pw/errors.hpp"
#include "lz4pw/reference/generators.hpp"

namespace lz4pw {
namespace {

TEST_CASE("records round trip across block boundaries") {
  reference::Rng rng(12);
  for (std::size_t n : {0u, 1u, 13u, 65535u, 65536u, 65537u, 200000u}) {
    const auto data = reference::markov_text(rng, n);
    CompressorConfig cfg;
    const auto container = write_records(compress_buffer(data, cfg));
    CHECK(read_records(container) == data);
  }
}

TEST_CASE("record layout: little-endian length prefix then the raw block") {
  const Bytes data{'a', 'b', 'c'};
  const auto container = write_records(compress_buffer(data, CompressorConfig{}));
  CHECK(container == Bytes{3, 0, 0, 0, 0x30, 'a', 'b', 'c'});
}

TEST_CASE("corrupt containers are rejected") {
  CHECK_THROWS_AS(read_records(Bytes{3, 0, 0}), DecodeError);
  CHECK_THROWS_AS(read_records(Bytes{3, 0, 0, 0, 0x30, 'a'}), DecodeError);
  CHECK_THROWS_AS(read_records(Bytes{1, 0, 1, 0, 0x10, 'a'}), DecodeError);
}

}  // namespace
}  // namespace lz4pw
