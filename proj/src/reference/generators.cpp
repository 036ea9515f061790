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

#include "lz4pw/reference/generators.hpp"

#include <array>

namespace lz4pw::reference {

std::string to_string(DataKind kind) {
  switch (kind) {
    case DataKind::uniform: return "uniform";
    case DataKind::runs: return "runs";
    case DataKind::markov_text: return "markov";
  }
  return "?";
}

std::vector<std::uint8_t> uniform_bytes(Rng& rng, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto& b : out) b = static_cast<std::uint8_t>(byte(rng));
  return out;
}

std::vector<std::uint8_t> run_bytes(Rng& rng, std::size_t n) {
  std::vector<std::uint8_t> out;
  out.reserve(n);
  std::uniform_int_distribution<int> symbol(0, 7);
  std::geometric_distribution<std::size_t> run(0.08);
  std::bernoulli_distribution noise(0.05);
  std::uniform_int_distribution<int> byte(0, 255);
  while (out.size() < n) {
    const auto value = static_cast<std::uint8_t>('A' + symbol(rng));
    const std::size_t len = 1 + run(rng);
    for (std::size_t i = 0; i < len && out.size() < n; ++i) {
      out.push_back(noise(rng) ? static_cast<std::uint8_t>(byte(rng)) : value);
    }
  }
  return out;
}

namespace {

struct Vocabulary {
  static constexpr std::size_t kWords = 400;
  static constexpr std::size_t kFollowers = 6;

  std::vector<std::string> words;
  std::vector<std::array<std::size_t, kFollowers>> followers;

  Vocabulary() {
    Rng rng(0x5eed);
    std::uniform_int_distribution<int> letter(0, 25);
    std::uniform_int_distribution<std::size_t> length(1, 9);
    std::uniform_int_distribution<std::size_t> pick(0, kWords - 1);
    for (std::size_t i = 0; i < kWords; ++i) {
      std::string w;
      const auto len = length(rng);
      for (std::size_t k = 0; k < len; ++k) {
        w.push_back(static_cast<char>('a' + letter(rng)));
      }
      words.push_back(std::move(w));
      std::array<std::size_t, kFollowers> f{};
      for (auto& x : f) x = pick(rng);
      followers.push_back(f);
    }
  }
};

const Vocabulary& vocabulary() {
  static const Vocabulary v;
  return v;
}

}  // namespace

std::vector<std::uint8_t> markov_text(Rng& rng, std::size_t n) {
  const auto& vocab = vocabulary();
  std::vector<std::uint8_t> out;
  out.reserve(n + 16);
  std::bernoulli_distribution follow(0.75);
  std::uniform_int_distribution<std::size_t> follower(
      0, Vocabulary::kFollowers - 1);
  // Zipf-like restart: squaring a uniform variate favors low word ids.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> punct(0, 19);
  std::size_t word = 0;
  while (out.size() < n) {
    if (follow(rng)) {
      word = vocab.followers[word][follower(rng)];
    } else {
      const double u = unit(rng);
      word = static_cast<std::size_t>(u * u * Vocabulary::kWords) %
             Vocabulary::kWords;
    }
    const auto& w = vocab.words[word];
    out.insert(out.end(), w.begin(), w.end());
    const int p = punct(rng);
    out.push_back(p == 0 ? '.' : p == 1 ? ',' : p == 2 ? '\n' : ' ');
  }
  out.resize(n);
  return out;
}

std::vector<std::uint8_t> generate(DataKind kind, Rng& rng, std::size_t n) {
  switch (kind) {
    case DataKind::uniform: return uniform_bytes(rng, n);
    case DataKind::runs: return run_bytes(rng, n);
    case DataKind::markov_text: return markov_text(rng, n);
  }
  return {};
}

}  // namespace lz4pw::reference
