// SPDX-License-Identifier: Apache-2.0

#ifndef EPISODE_HARNESS_HPP
#define EPISODE_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "episode/episode.hpp"
#include "episode/ov.hpp"
#include "episode/reduction.hpp"
#include "episode/text.hpp"

namespace episode::harness {

/// Process exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// "5", "2:8" (inclusive) or "64,128,256", ascending, duplicates removed.
std::vector<std::size_t> parse_int_set(std::string_view spec);

/// Key=value sidecar written next to a reduced instance.
struct ReductionMetadata {
  AlphabetKind kind = AlphabetKind::Four;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t threshold = 0;
  std::size_t s_len = 0;
  std::size_t p_len = 0;

  friend bool operator==(const ReductionMetadata&, const ReductionMetadata&) = default;
};

ReductionMetadata metadata_of(const ReductionInstance& r);
void write_metadata(std::ostream& out, const ReductionMetadata& meta);
ReductionMetadata parse_metadata(std::istream& in);

/// Paths written by cmd_reduce for a given prefix.
struct ReductionPaths {
  std::filesystem::path s;
  std::filesystem::path p;
  std::filesystem::path meta;
};
ReductionPaths reduction_paths(const std::string& prefix);

struct GenOptions {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  bool planted = false;
  std::uint64_t seed = 0;
  /// Empty writes to stdout.
  std::filesystem::path out;
};

struct ReduceOptions {
  std::filesystem::path in;
  AlphabetKind kind = AlphabetKind::Four;
  std::string out_prefix;
};

struct SolveOptions {
  std::filesystem::path s_path;
  std::filesystem::path p_path;
  Solver algo = Solver::dp;
  /// Inferred from the union of both files' symbols when unset.
  std::optional<AlphabetKind> kind;
};

/// Shared by verify and bench. Defaults are verify's default sweep.
struct SweepConfig {
  std::vector<std::size_t> n_values{2, 3, 4, 5, 6, 7, 8};
  /// Unset: verify draws m from [2, n]; bench uses m = n.
  std::optional<std::vector<std::size_t>> m_values;
  /// Bench only: m = round(n^alpha), clamped to [2, n].
  std::optional<double> alpha;
  std::vector<std::size_t> d_values{1, 2, 3, 4, 5, 6};
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  std::vector<Solver> solvers{std::begin(all_solvers), std::end(all_solvers)};
  std::vector<AlphabetKind> kinds{AlphabetKind::Four, AlphabetKind::Binary};
  /// Bench: all planted if set, otherwise all no-instances.
  bool planted = false;
  /// Verify: exhaustive n = m = 2 sweep for d in [1, exhaustive_max_d].
  std::size_t exhaustive_max_d = 2;
  long threshold_offset = 0;
  /// Worker threads; 0 means one per hardware thread.
  std::size_t parallel = 0;
  /// Empty writes CSV to stdout (bench).
  std::filesystem::path out;

  /// Throws std::invalid_argument on n < m, m < 2, d < 1, trials < 1.
  void validate() const;
};

SweepConfig default_bench_config();

/// One (instance, solver) measurement.
struct BenchRecord {
  AlphabetKind kind = AlphabetKind::Four;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t s_len = 0;
  std::size_t p_len = 0;
  Solver solver = Solver::dp;
  std::size_t episode_len = 0;
  std::size_t threshold = 0;
  bool ov_decision = false;
  bool episode_decision = false;
  std::int64_t wall_time_ns = 0;
};

inline constexpr std::string_view bench_csv_header =
  "kind,n,m,d,s_len,p_len,solver,episode_len,threshold,ov_decision,episode_decision,wall_time_ns";

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows);
std::vector<BenchRecord> parse_bench_csv(std::istream& in);

/// Runs the sweep and returns rows sorted by (kind, n, m, d, solver).
std::vector<BenchRecord> run_bench(const SweepConfig& config);

/// Least-squares slope of log(y) on log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// The instances verify sweeps over: `trials` random ones (odd trials
/// planted), then every n = m = 2 instance for d up to exhaustive_max_d.
struct SweepInstance {
  OvInstance inst;
  std::string label;
  bool exhaustive = false;
};

std::vector<SweepInstance> verify_instances(const SweepConfig& config);

struct VerifySummary {
  std::size_t random_instances = 0;
  std::size_t exhaustive_instances = 0;
  std::size_t failed = 0;
  std::vector<std::string> failure_details;
};

VerifySummary run_verify(const SweepConfig& config);

// Subcommands. Each returns a process exit status; results go to `out`,
// diagnostics to `err`.
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);
int cmd_reduce(const ReduceOptions& options, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const SweepConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const SweepConfig& config, std::ostream& out, std::ostream& err);

/// Full command line, args[0] being the first subcommand token.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace episode::harness

#endif // EPISODE_HARNESS_HPP
