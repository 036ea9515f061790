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

#include "lz4pw/corpus_bench.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>

#include "lz4pw/errors.hpp"
#include "lz4pw/reference/generators.hpp"

namespace lz4pw {
namespace {

namespace fs = std::filesystem;

const std::vector<int> kEntryLogs{6, 7, 8, 9, 10, 11, 12, 13};

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("lz4pw_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& name, const Bytes& data) const {
    std::ofstream(path / name, std::ios::binary)
        .write(reinterpret_cast<const char*>(data.data()),
               static_cast<std::streamsize>(data.size()));
  }
};

CorpusSpec synthetic_corpus() {
  reference::Rng rng(2024);
  CorpusSpec c;
  c.name = "synthetic";
  c.files.push_back({"a_text", reference::markov_text(rng, 150000)});
  c.files.push_back({"b_runs", reference::run_bytes(rng, 40000)});
  c.files.push_back({"c_noise", reference::uniform_bytes(rng, 20000)});
  return c;
}

// Pure-literal block: token, extension bytes, literals.
std::uint64_t literal_block_size(std::uint64_t n) {
  return 1 + n + (n >= 15 ? (n - 15) / 255 + 1 : 0);
}

TEST_CASE("manifest parsing") {
  const auto m = parse_manifest("# calgary\nbib 111261\n\npaper1 53161\r\n");
  REQUIRE(m.size() == 2);
  CHECK(m[0].name == "bib");
  CHECK(m[0].size == 111261);
  CHECK(m[1].name == "paper1");
  CHECK_THROWS_AS(parse_manifest("bib\n"), UsageError);
  CHECK_THROWS_AS(parse_manifest("bib 12 extra\n"), UsageError);
}

TEST_CASE("load_corpus: sorted files and manifest problems") {
  TempDir dir;
  dir.write("zeta", Bytes(10, 'z'));
  dir.write("alpha", Bytes(20, 'a'));
  const auto all = load_corpus(dir.path);
  REQUIRE(all.files.size() == 2);
  CHECK(all.files[0].name == "alpha");
  CHECK(all.files[1].name == "zeta");
  CHECK(all.problems.empty());

  const fs::path manifest = dir.path / "MANIFEST";
  std::ofstream(manifest) << "alpha 20\nzeta 11\nmissing 5\n";
  const auto pinned = load_corpus(dir.path, manifest);
  REQUIRE(pinned.files.size() == 1);
  CHECK(pinned.files[0].name == "alpha");
  CHECK(pinned.problems.size() == 2);

  CHECK_THROWS_AS(load_corpus(dir.path / "nope"), UsageError);
}

TEST_CASE("aggregate ratio formula") {
  CHECK(aggregate_ratio(std::vector<FileRatio>{{"f", 1000, 500, 2.0}}) == 2.0);

  // Total over total equals mean over mean for any file count.
  reference::Rng rng(8);
  std::uniform_int_distribution<std::uint64_t> size(1, 1u << 20);
  std::uniform_int_distribution<int> count(1, 20);
  for (int t = 0; t < 200; ++t) {
    std::vector<FileRatio> files(count(rng));
    double orig_sum = 0, comp_sum = 0;
    for (auto& f : files) {
      f.original_bytes = size(rng);
      f.compressed_bytes = size(rng);
      orig_sum += static_cast<double>(f.original_bytes);
      comp_sum += static_cast<double>(f.compressed_bytes);
    }
    const double k = static_cast<double>(files.size());
    CHECK(aggregate_ratio(files) == doctest::Approx((orig_sum / k) / (comp_sum / k)));
  }

  CHECK(attenuation_percent(1.419, 1.400) == doctest::Approx(1.339).epsilon(1e-3));
  CHECK(attenuation_percent(2.0, 2.0) == 0.0);
}

TEST_CASE("incompressible file: ratio just below one from literal overhead") {
  reference::Rng rng(77);
  CorpusSpec c{"noise", {{"noise", reference::uniform_bytes(rng, 100000)}}, {}};
  const auto r = compression_ratio(c, CompressorConfig{});
  REQUIRE(r.per_file.size() == 1);
  CHECK(r.per_file[0].compressed_bytes ==
        literal_block_size(65536) + literal_block_size(100000 - 65536));
  CHECK(r.aggregate_ratio < 1.0);
  CHECK(r.aggregate_ratio > 0.99);
}

TEST_CASE("compression_ratio rejects an empty corpus") {
  CorpusSpec c{"empty", {{"e", {}}}, {}};
  CHECK_THROWS_AS(compression_ratio(c, CompressorConfig{}), UsageError);
}

TEST_CASE("run_grid shapes and attenuation") {
  const auto corpus = synthetic_corpus();

  SUBCASE("policy rows over all entry counts") {
    GridAxes axes{kEntryLogs, {MatchCap::unbounded()},
                  {MatchPolicy::multi_match, MatchPolicy::single_match_per_window}, {}};
    const auto g = run_grid(corpus, axes);
    CHECK(g.reports.size() == 16);
    CHECK(g.baselines.size() == 8);
    for (const auto& r : g.reports) {
      REQUIRE(r.attenuation_pct.has_value());
      if (r.config.policy == MatchPolicy::multi_match) {
        CHECK(*r.attenuation_pct == 0.0);
      }
    }
  }

  SUBCASE("entries by cap") {
    GridAxes axes{kEntryLogs,
                  {MatchCap::bounded(12), MatchCap::bounded(20), MatchCap::bounded(36),
                   MatchCap::bounded(68), MatchCap::unbounded()},
                  {MatchPolicy::multi_match}, {}};
    const auto g = run_grid(corpus, axes);
    REQUIRE(g.reports.size() == 40);
    const auto md = emit_report(g.reports, ReportFormat::markdown);
    CHECK(md.find("| Entries | Not limit | Limit to 12 | Limit to 20 | Limit to 36 | Limit to 68 |") !=
          std::string::npos);
    for (int log : kEntryLogs) {
      CHECK(md.find("\n| " + std::to_string(1 << log) + " |") != std::string::npos);
    }
  }

  SUBCASE("single baseline point has zero attenuation") {
    GridAxes axes{{8}, {MatchCap::unbounded()}, {MatchPolicy::multi_match}, {}};
    const auto g = run_grid(corpus, axes);
    REQUIRE(g.reports.size() == 1);
    CHECK(*g.reports[0].attenuation_pct == 0.0);
  }

  SUBCASE("empty axis") {
    GridAxes axes{{}, {MatchCap::unbounded()}, {MatchPolicy::multi_match}, {}};
    CHECK_THROWS_AS(run_grid(corpus, axes), UsageError);
  }
}

TEST_CASE("emit_report: csv rows and determinism") {
  CorpusSpec c{"one", {{"file1", Bytes(5000, 'k')}}, {}};
  const auto r = compression_ratio(c, CompressorConfig{});
  const auto csv = emit_report(std::span(&r, 1), ReportFormat::csv);
  CHECK(csv.rfind(
            "config_id,entries,cap,policy,file,original_bytes,compressed_bytes,ratio\n"
            "pws8-e256-m36-single,256,36,single,file1,5000,",
            0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK(emit_report(std::span(&r, 1), ReportFormat::csv) == csv);
  CHECK(emit_report(std::span(&r, 1), ReportFormat::markdown) ==
        emit_report(std::span(&r, 1), ReportFormat::markdown));
  CHECK_THROWS_AS(emit_report({}, ReportFormat::csv), UsageError);
  CHECK_THROWS_AS(parse_report_format("xml"), UsageError);
}

// Corpus-level sanity on synthetic text; the Calgary checks live in the
// acceptance suite.
TEST_CASE("synthetic corpus orders like the hardware tables") {
  const auto corpus = synthetic_corpus();
  GridAxes axes{{6, 8, 10},
                {MatchCap::bounded(12), MatchCap::bounded(36), MatchCap::unbounded()},
                {MatchPolicy::multi_match, MatchPolicy::single_match_per_window}, {}};
  const auto g = run_grid(corpus, axes);
  auto ratio = [&](MatchPolicy p, MatchCap c, int log) {
    for (const auto& r : g.reports) {
      if (r.config.policy == p && r.config.max_match == c && r.config.table_log == log) {
        return r.aggregate_ratio;
      }
    }
    FAIL("missing grid point");
    return 0.0;
  };
  for (int log : {6, 8, 10}) {
    const auto m12 = ratio(MatchPolicy::multi_match, MatchCap::bounded(12), log);
    const auto m36 = ratio(MatchPolicy::multi_match, MatchCap::bounded(36), log);
    const auto mun = ratio(MatchPolicy::multi_match, MatchCap::unbounded(), log);
    CHECK(m12 <= m36);
    CHECK(m36 <= mun);
    CHECK(ratio(MatchPolicy::single_match_per_window, MatchCap::unbounded(), log) <= mun);
  }
}

}  // namespace
}  // namespace lz4pw
