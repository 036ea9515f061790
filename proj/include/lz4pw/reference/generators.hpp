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

// Deterministic synthetic inputs for property tests and the selftest.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lz4pw::reference {

using Rng = std::mt19937_64;

enum class DataKind { uniform, runs, markov_text };

inline constexpr DataKind kAllDataKinds[] = {
    DataKind::uniform, DataKind::runs, DataKind::markov_text};

std::string to_string(DataKind kind);

/// Independent uniformly distributed bytes.
std::vector<std::uint8_t> uniform_bytes(Rng& rng, std::size_t n);

/// Runs of repeated bytes with geometric lengths, drawn from a small
/// alphabet, with occasional noise.
std::vector<std::uint8_t> run_bytes(Rng& rng, std::size_t n);

/// Word-level first-order Markov text over a fixed synthetic vocabulary.
std::vector<std::uint8_t> markov_text(Rng& rng, std::size_t n);

std::vector<std::uint8_t> generate(DataKind kind, Rng& rng, std::size_t n);

}  // namespace lz4pw::reference
