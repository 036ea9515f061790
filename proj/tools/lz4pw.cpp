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

// lz4pw: compress, decompress and benchmark with the parallel-window model.
//
// Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 round-trip
// self-check failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lz4pw/block_codec.hpp"
#include "lz4pw/corpus_bench.hpp"
#include "lz4pw/errors.hpp"
#include "lz4pw/record_file.hpp"
#include "lz4pw/reference/checks.hpp"
#include "lz4pw/window_kernel.hpp"

namespace {

using namespace lz4pw;

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRoundTrip = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Bytes read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path);
  return data;
}

void write_output(const std::string& path, ByteView data) {
  if (path == "-") {
    std::cout.write(reinterpret_cast<const char*>(data.data()),
                    static_cast<std::streamsize>(data.size()));
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write failed: " + path);
}

void write_text(const std::string& path, const std::string& text) {
  write_output(path, ByteView(reinterpret_cast<const std::uint8_t*>(text.data()),
                              text.size()));
}

struct ConfigFlags {
  std::uint32_t pws = 8;
  std::size_t entries = 256;
  std::string max_match = "36";
  std::string policy = "single";
  std::uint32_t block_size = 65536;
  std::uint64_t latency = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--pws", pws, "Bytes per parallelization window")
        ->capture_default_str();
    cmd->add_option("--entries", entries,
                    "Hash table entries (power of two, 64..8192)")
        ->capture_default_str();
    cmd->add_option("--max-match", max_match,
                    "Extended match cap in bytes, or 'none'")
        ->capture_default_str();
    cmd->add_option("--policy", policy, "single or multi")
        ->capture_default_str();
    cmd->add_option("--block-size", block_size, "Independent block size")
        ->capture_default_str();
    cmd->add_option("--latency", latency, "Pipeline latency in cycles")
        ->capture_default_str();
  }

  CompressorConfig build() const {
    CompressorConfig cfg;
    cfg.pws = pws;
    cfg.table_log = table_log_for_entries(entries);
    cfg.max_match = parse_cap(max_match);
    cfg.policy = parse_policy(policy);
    cfg.block_size = block_size;
    cfg.pipeline_latency = latency;
    cfg.validate();
    return cfg;
  }
};

int run_compress(const std::string& input, const std::string& output,
                 const ConfigFlags& flags, double frequency_mhz,
                 const std::string& dump_path) {
  const auto cfg = flags.build();
  const Bytes data = read_input(input);

  std::vector<CompressionResult> results;
  std::string dump;
  if (dump_path.empty()) {
    results = compress_buffer(data, cfg);
  } else {
    // Serial path so the table can be inspected after every block.
    HashTable table(HashConfig{cfg.table_log}, cfg.pws);
    const std::size_t n = data.size();
    std::size_t start = 0;
    do {
      const auto len = std::min<std::size_t>(cfg.block_size, n - start);
      results.push_back(
          compress_block(ByteView(data).subspan(start, len), cfg, table));
      dump += "# block " + std::to_string(results.size() - 1) +
              " (index pointer word generation)\n" + table.dump();
      start += len;
    } while (start < n);
  }

  // Every block is decoded by the reference decoder before anything is
  // written.
  std::size_t offset = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const ByteView source = ByteView(data).subspan(offset, r.block.source_length);
    std::optional<std::string> problem;
    try {
      const auto decoded = decode_block(r.block.bytes, r.block.source_length);
      if (auto at = reference::first_difference(source, decoded)) {
        problem = "first difference at byte " + std::to_string(offset + *at);
      }
    } catch (const DecodeError& e) {
      problem = e.what();
    }
    if (problem) {
      std::cerr << "lz4pw: round-trip check failed in block " << i << ": "
                << *problem << "\n";
      return kExitRoundTrip;
    }
    offset += r.block.source_length;
  }

  write_output(output, write_records(results));
  if (!dump_path.empty()) write_text(dump_path, dump);

  const auto s = summarize(results);
  std::ostream& log = output == "-" ? std::cerr : std::cout;
  log << "config      " << cfg.id() << "\n"
      << "blocks      " << results.size() << "\n"
      << "input       " << s.input_bytes << " bytes\n"
      << "output      " << s.output_bytes << " bytes (raw blocks)\n"
      << "ratio       " << s.ratio() << "\n"
      << "matches     " << s.matches << "\n"
      << "literals    " << s.literals << "\n"
      << "cycles      " << s.cycles << "\n"
      << "throughput  "
      << projected_throughput_gbps(s.input_bytes, s.cycles, frequency_mhz)
      << " Gbit/s (model projection at " << frequency_mhz
      << " MHz, not a measurement)\n";
  return 0;
}

int run_decompress(const std::string& input, const std::string& output) {
  const Bytes container = read_input(input);
  write_output(output, read_records(container));
  return 0;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string::npos ? text.size() : comma;
    if (end > start) out.push_back(text.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct BenchFlags {
  std::string corpus;
  std::string manifest;
  std::string entries = "64,128,256,512,1024,2048,4096,8192";
  std::string max_match = "36";
  std::string policy = "single";
  std::uint32_t pws = 8;
  std::uint32_t block_size = 65536;
  std::string format = "markdown";
  std::string output = "-";
};

int run_bench(BenchFlags flags) {
  if (flags.corpus.empty()) {
    if (const char* env = std::getenv("LZ4PW_CORPUS")) flags.corpus = env;
  }
  if (flags.corpus.empty()) {
    throw UsageError("no corpus: pass --corpus or set LZ4PW_CORPUS");
  }

  GridAxes axes;
  for (const auto& e : split_list(flags.entries)) {
    axes.table_logs.push_back(table_log_for_entries(std::stoul(e)));
  }
  for (const auto& c : split_list(flags.max_match)) axes.caps.push_back(parse_cap(c));
  for (const auto& p : split_list(flags.policy)) {
    axes.policies.push_back(parse_policy(p));
  }
  axes.base.pws = flags.pws;
  axes.base.block_size = flags.block_size;
  const auto format = parse_report_format(flags.format);
  for (int log : axes.table_logs) {
    for (const auto& cap : axes.caps) {
      CompressorConfig cfg = axes.base;
      cfg.table_log = log;
      cfg.max_match = cap;
      cfg.validate();
    }
  }

  const auto corpus = load_corpus(
      flags.corpus, flags.manifest.empty()
                        ? std::nullopt
                        : std::optional<std::filesystem::path>(flags.manifest));
  for (const auto& p : corpus.problems) {
    std::cerr << "lz4pw: warning: " << p.name << ": " << p.message << "\n";
  }
  const auto grid = run_grid(corpus, axes);
  write_text(flags.output, emit_report(grid.reports, format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel-window LZ4 block compressor model"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  ConfigFlags config;
  double frequency = 251.57;
  std::string dump_path;
  auto* compress = app.add_subcommand("compress", "Compress a file into length-prefixed LZ4 block records");
  compress->add_option("input", input, "Input file")->required();
  compress->add_option("-o,--output", output, "Output file ('-' for stdout)")->required();
  config.attach(compress);
  compress->add_option("--frequency", frequency, "Clock in MHz for the throughput projection")
      ->capture_default_str();
  compress->add_option("--dump-table", dump_path, "Write hash table contents after each block");

  auto* decompress = app.add_subcommand("decompress", "Restore a file written by compress");
  decompress->add_option("input", input, "Input file")->required();
  decompress->add_option("-o,--output", output, "Output file ('-' for stdout)")->required();

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Compression ratio grid over a corpus directory");
  bench->add_option("--corpus", bench_flags.corpus, "Corpus directory (default: $LZ4PW_CORPUS)");
  bench->add_option("--manifest", bench_flags.manifest, "Manifest of 'name size' lines");
  bench->add_option("--entries", bench_flags.entries, "Comma-separated entry counts")->capture_default_str();
  bench->add_option("--max-match", bench_flags.max_match, "Comma-separated caps ('none' for unbounded)")->capture_default_str();
  bench->add_option("--policy", bench_flags.policy, "Comma-separated policies (single, multi)")->capture_default_str();
  bench->add_option("--pws", bench_flags.pws, "Bytes per parallelization window")->capture_default_str();
  bench->add_option("--block-size", bench_flags.block_size, "Independent block size")->capture_default_str();
  bench->add_option("--format", bench_flags.format, "markdown or csv")->capture_default_str();
  bench->add_option("-o,--output", bench_flags.output, "Report file ('-' for stdout)")->capture_default_str();

  reference::SelftestOptions selftest_opts;
  auto* selftest = app.add_subcommand("selftest", "Run round-trip and oracle property checks");
  selftest->add_option("--iterations", selftest_opts.iterations)->capture_default_str();
  selftest->add_option("--seed", selftest_opts.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compress) return run_compress(input, output, config, frequency, dump_path);
    if (*decompress) return run_decompress(input, output);
    if (*bench) return run_bench(bench_flags);
    if (*selftest) {
      return reference::run_selftest(selftest_opts, std::cout) ? 0 : kExitRoundTrip;
    }
  } catch (const UsageError& e) {
    std::cerr << "lz4pw: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lz4pw: invalid number: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "lz4pw: " << e.what() << "\n";
    return kExitIo;
  } catch (const DecodeError& e) {
    std::cerr << "lz4pw: corrupt input: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
