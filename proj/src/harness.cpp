// SPDX-License-Identifier: Apache-2.0

#include "episode/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include <CLI11.hpp>

namespace episode::harness {

namespace {

std::size_t parse_size(std::string_view token)
{
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty())
    throw std::invalid_argument("not a non-negative integer: '" + std::string(token) + "'");
  return value;
}

std::size_t worker_count(std::size_t requested)
{
  if (requested != 0)
    return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(i) for i in [0, count) on `threads` workers. The first exception
// thrown by any worker is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn)
{
  threads = std::min(worker_count(threads), std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure)
            failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure)
    std::rethrow_exception(failure);
}

template <class Fn>
int guarded(std::ostream& err, Fn&& body)
{
  try {
    return body();
  } catch (const invariant_error& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return exit_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

std::string trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

} // namespace

std::vector<std::size_t> parse_int_set(std::string_view spec)
{
  std::vector<std::size_t> out;
  std::string token;
  std::istringstream in{std::string(spec)};
  while (std::getline(in, token, ',')) {
    token = trim(token);
    if (const auto colon = token.find(':'); colon != std::string::npos) {
      const std::size_t lo = parse_size(std::string_view(token).substr(0, colon));
      const std::size_t hi = parse_size(std::string_view(token).substr(colon + 1));
      if (lo > hi)
        throw std::invalid_argument("empty range '" + token + "'");
      for (std::size_t v = lo; v <= hi; ++v)
        out.push_back(v);
    } else {
      out.push_back(parse_size(token));
    }
  }
  if (out.empty())
    throw std::invalid_argument("empty integer set");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- metadata -------------------------------------------------------------

ReductionMetadata metadata_of(const ReductionInstance& r)
{
  return ReductionMetadata{r.kind, r.n, r.m, r.d, r.threshold, r.S.size(), r.P.size()};
}

void write_metadata(std::ostream& out, const ReductionMetadata& meta)
{
  out << "kind=" << to_string(meta.kind) << '\n'
      << "n=" << meta.n << '\n'
      << "m=" << meta.m << '\n'
      << "d=" << meta.d << '\n'
      << "threshold=" << meta.threshold << '\n'
      << "s_len=" << meta.s_len << '\n'
      << "p_len=" << meta.p_len << '\n';
}

ReductionMetadata parse_metadata(std::istream& in)
{
  std::map<std::string, std::string> fields;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("metadata line without '=': " + line);
    fields[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  auto get = [&](const char* key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end())
      throw std::invalid_argument(std::string("metadata missing key ") + key);
    return it->second;
  };
  ReductionMetadata meta;
  meta.kind = parse_alphabet_kind(get("kind"));
  meta.n = parse_size(get("n"));
  meta.m = parse_size(get("m"));
  meta.d = parse_size(get("d"));
  meta.threshold = parse_size(get("threshold"));
  meta.s_len = parse_size(get("s_len"));
  meta.p_len = parse_size(get("p_len"));
  return meta;
}

ReductionPaths reduction_paths(const std::string& prefix)
{
  return ReductionPaths{prefix + ".S.txt", prefix + ".P.txt", prefix + ".meta.txt"};
}

// --- sweep configuration --------------------------------------------------

void SweepConfig::validate() const
{
  if (n_values.empty() || d_values.empty())
    throw std::invalid_argument("sweep needs at least one n and one d");
  if (n_values.front() < 2)
    throw std::invalid_argument("sweep needs n >= 2");
  if (d_values.front() < 1)
    throw std::invalid_argument("sweep needs d >= 1");
  if (m_values && (m_values->empty() || m_values->front() < 2))
    throw std::invalid_argument("sweep needs m >= 2");
  if (alpha && !(*alpha > 0.0 && *alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in (0, 1]");
  if (trials < 1)
    throw std::invalid_argument("sweep needs trials >= 1");
  if (solvers.empty() || kinds.empty())
    throw std::invalid_argument("sweep needs at least one solver and one kind");
}

SweepConfig default_bench_config()
{
  SweepConfig c;
  c.n_values = {64, 128, 256, 512, 1024};
  c.d_values = {8};
  c.trials = 1;
  c.solvers = {Solver::dp};
  c.kinds = {AlphabetKind::Four};
  c.exhaustive_max_d = 0;
  c.parallel = 1;
  return c;
}

// --- verify ---------------------------------------------------------------

std::vector<SweepInstance> verify_instances(const SweepConfig& c)
{
  c.validate();
  std::vector<SweepInstance> items;
  for (std::size_t t = 0; t < c.trials; ++t) {
    std::mt19937_64 rng(c.seed + t);
    auto pick = [&](const std::vector<std::size_t>& values) {
      return values[std::uniform_int_distribution<std::size_t>(0, values.size() - 1)(rng)];
    };
    const std::size_t n = pick(c.n_values);
    std::vector<std::size_t> ms;
    if (c.m_values) {
      for (std::size_t m : *c.m_values) {
        if (m <= n)
          ms.push_back(m);
      }
    } else {
      for (std::size_t m = 2; m <= n; ++m)
        ms.push_back(m);
    }
    if (ms.empty())
      throw std::invalid_argument("no m in the sweep satisfies 2 <= m <= n=" + std::to_string(n));
    const std::size_t m = pick(ms);
    const std::size_t d = pick(c.d_values);
    const bool planted = t % 2 == 1;
    std::ostringstream label;
    label << "random trial " << t << " (n=" << n << " m=" << m << " d=" << d
          << (planted ? " planted" : " no-pair") << ')';
    items.push_back({generate_instance(n, m, d, planted, c.seed + t), label.str(), false});
  }

  for (std::size_t d = 1; d <= c.exhaustive_max_d; ++d) {
    const std::uint64_t count = std::uint64_t{1} << (4 * d);
    for (std::uint64_t code = 0; code < count; ++code) {
      OvInstance inst;
      inst.d = d;
      for (std::size_t v = 0; v < 4; ++v) {
        BitVector bits(d);
        for (std::size_t k = 0; k < d; ++k)
          bits.set(k, (code >> (v * d + k)) & 1);
        (v < 2 ? inst.A : inst.B).push_back(std::move(bits));
      }
      std::ostringstream label;
      label << "exhaustive d=" << d << " code=" << code;
      items.push_back({std::move(inst), label.str(), true});
    }
  }
  return items;
}

VerifySummary run_verify(const SweepConfig& config)
{
  VerifySummary summary;
  const auto items = verify_instances(config);
  for (const auto& item : items)
    ++(item.exhaustive ? summary.exhaustive_instances : summary.random_instances);

  VerifyOptions options;
  options.solvers = config.solvers;
  options.kinds = config.kinds;
  options.threshold_offset = config.threshold_offset;

  std::vector<VerificationReport> reports(items.size());
  parallel_for(items.size(), config.parallel, [&](std::size_t i) {
    reports[i] = verify_equivalence(items[i].inst, options);
  });

  for (std::size_t i = 0; i < items.size(); ++i) {
    if (reports[i].passed)
      continue;
    ++summary.failed;
    for (const auto& f : reports[i].failures)
      summary.failure_details.push_back(items[i].label + ": " + f);
  }
  return summary;
}

int cmd_verify(const SweepConfig& config, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    const auto start = std::chrono::steady_clock::now();
    const VerifySummary s = run_verify(config);
    const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& detail : s.failure_details)
      out << "FAIL " << detail << '\n';
    const std::size_t total = s.random_instances + s.exhaustive_instances;
    out << "verified " << (total - s.failed) << '/' << total << " instances ("
        << s.random_instances << " random, " << s.exhaustive_instances << " exhaustive) in "
        << seconds << " s\n";
    out << (s.failed == 0 ? "PASS" : "FAIL") << '\n';
    return s.failed == 0 ? exit_ok : exit_failure;
  });
}

// --- bench ----------------------------------------------------------------

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows)
{
  out << bench_csv_header << '\n';
  for (const BenchRecord& r : rows) {
    out << to_string(r.kind) << ',' << r.n << ',' << r.m << ',' << r.d << ',' << r.s_len << ','
        << r.p_len << ',' << to_string(r.solver) << ',' << r.episode_len << ',' << r.threshold
        << ',' << (r.ov_decision ? 1 : 0) << ',' << (r.episode_decision ? 1 : 0) << ','
        << r.wall_time_ns << '\n';
  }
}

std::vector<BenchRecord> parse_bench_csv(std::istream& in)
{
  std::string line;
  if (!std::getline(in, line) || trim(line) != bench_csv_header)
    throw std::invalid_argument("bench CSV: header row mismatch");
  std::vector<BenchRecord> rows;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty())
      continue;
    std::vector<std::string> cells;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');)
      cells.push_back(cell);
    if (cells.size() != 12)
      throw std::invalid_argument("bench CSV: row without 12 cells: " + line);
    auto flag = [&](const std::string& cell) {
      if (cell != "0" && cell != "1")
        throw std::invalid_argument("bench CSV: bad boolean '" + cell + "'");
      return cell == "1";
    };
    BenchRecord r;
    r.kind = parse_alphabet_kind(cells[0]);
    r.n = parse_size(cells[1]);
    r.m = parse_size(cells[2]);
    r.d = parse_size(cells[3]);
    r.s_len = parse_size(cells[4]);
    r.p_len = parse_size(cells[5]);
    r.solver = parse_solver(cells[6]);
    r.episode_len = parse_size(cells[7]);
    r.threshold = parse_size(cells[8]);
    r.ov_decision = flag(cells[9]);
    r.episode_decision = flag(cells[10]);
    r.wall_time_ns = static_cast<std::int64_t>(parse_size(cells[11]));
    rows.push_back(r);
  }
  return rows;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("loglog_slope needs two or more paired points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = static_cast<double>(x.size());
  const double denom = k * sxx - sx * sx;
  if (denom == 0)
    throw std::invalid_argument("loglog_slope: all x values equal");
  return (k * sxy - sx * sy) / denom;
}

std::vector<BenchRecord> run_bench(const SweepConfig& config)
{
  config.validate();

  struct Case {
    std::size_t n, m, d, trial;
    std::uint64_t seed;
  };
  std::vector<Case> cases;
  for (std::size_t n : config.n_values) {
    std::vector<std::size_t> ms;
    if (config.alpha)
      ms.push_back(std::clamp<std::size_t>(
        static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(n), *config.alpha))),
        2, n));
    else if (config.m_values)
      ms = *config.m_values;
    else
      ms.push_back(n);
    for (std::size_t m : ms) {
      if (m > n)
        throw std::invalid_argument("bench needs m <= n (got n=" + std::to_string(n) +
                                    " m=" + std::to_string(m) + "); swap A and B");
      for (std::size_t d : config.d_values) {
        for (std::size_t t = 0; t < config.trials; ++t)
          cases.push_back({n, m, d, t, config.seed + cases.size()});
      }
    }
  }

  const std::size_t per_case = config.kinds.size() * config.solvers.size();
  std::vector<BenchRecord> rows(cases.size() * per_case);
  parallel_for(cases.size(), config.parallel, [&](std::size_t c) {
    const Case& k = cases[c];
    const OvInstance inst = generate_instance(k.n, k.m, k.d, config.planted, k.seed);
    const bool ov = ov_bruteforce(inst).has_value();
    std::size_t slot = c * per_case;
    for (AlphabetKind kind : config.kinds) {
      const ReductionInstance r = build_reduction(kind, inst);
      for (Solver solver : config.solvers) {
        const auto start = std::chrono::steady_clock::now();
        const auto episode = solve_episode(solver, r.S, r.P);
        const auto stop = std::chrono::steady_clock::now();
        if (!episode)
          throw invariant_error("reduction pattern does not embed in its text");
        BenchRecord& row = rows[slot++];
        row.kind = kind;
        row.n = k.n;
        row.m = k.m;
        row.d = k.d;
        row.s_len = r.S.size();
        row.p_len = r.P.size();
        row.solver = solver;
        row.episode_len = episode->length;
        row.threshold = r.threshold;
        row.ov_decision = ov;
        row.episode_decision = episode->length < r.threshold;
        row.wall_time_ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
      }
    }
  });

  std::stable_sort(rows.begin(), rows.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::make_tuple(to_string(a.kind), a.n, a.m, a.d, to_string(a.solver)) <
           std::make_tuple(to_string(b.kind), b.n, b.m, b.d, to_string(b.solver));
  });
  return rows;
}

int cmd_bench(const SweepConfig& config, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    const auto rows = run_bench(config);
    std::ostream* summary = &err;
    if (config.out.empty()) {
      write_bench_csv(out, rows);
    } else {
      std::ofstream file(config.out, std::ios::trunc);
      if (!file)
        throw std::runtime_error("cannot write " + config.out.string());
      write_bench_csv(file, rows);
      if (!file)
        throw std::runtime_error("write failed for " + config.out.string());
      summary = &out;
      out << "wrote " << rows.size() << " rows to " << config.out.string() << '\n';
    }

    // Per (kind, solver): slope of wall time against |S||P|.
    std::map<std::pair<std::string, std::string>, std::pair<std::vector<double>, std::vector<double>>>
      series;
    bool consistent = true;
    for (const BenchRecord& r : rows) {
      auto& [x, y] = series[{std::string(to_string(r.kind)), std::string(to_string(r.solver))}];
      x.push_back(static_cast<double>(r.s_len) * static_cast<double>(r.p_len));
      y.push_back(static_cast<double>(std::max<std::int64_t>(r.wall_time_ns, 1)));
      consistent = consistent && r.ov_decision == r.episode_decision;
    }
    for (const auto& [key, xy] : series) {
      const auto& [x, y] = xy;
      const bool spread = std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>()) != x.end();
      if (!spread)
        continue;
      *summary << "kind " << key.first << " solver " << key.second
               << ": log-log slope of time vs |S||P| = " << loglog_slope(x, y) << '\n';
    }
    if (!consistent)
      *summary << "warning: some episode decisions disagree with the OV label\n";
    return consistent ? exit_ok : exit_failure;
  });
}

// --- gen / reduce / solve -------------------------------------------------

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    const OvInstance inst = generate_instance(o.n, o.m, o.d, o.planted, o.seed);
    if (o.out.empty())
      write_ov_instance(out, inst);
    else
      write_ov_file(o.out, inst);
    return exit_ok;
  });
}

int cmd_reduce(const ReduceOptions& o, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    if (o.out_prefix.empty())
      throw std::invalid_argument("reduce needs an output prefix");
    const OvInstance inst = read_ov_file(o.in);
    inst.validate();
    const ReductionInstance r = build_reduction(o.kind, inst);
    const ReductionPaths paths = reduction_paths(o.out_prefix);
    write_text_file(paths.s, r.S);
    write_text_file(paths.p, r.P);
    {
      std::ofstream meta(paths.meta, std::ios::trunc);
      if (!meta)
        throw std::runtime_error("cannot write " + paths.meta.string());
      write_metadata(meta, metadata_of(r));
    }

    // Re-read everything that was written and check it against the source.
    ReductionInstance reread = r;
    reread.S = read_text_file(paths.s, o.kind);
    reread.P = read_text_file(paths.p, o.kind);
    std::ifstream meta_in(paths.meta);
    const ReductionMetadata meta = parse_metadata(meta_in);
    reread.threshold = meta.threshold;
    auto problems = geometry_violations(reread, inst);
    if (meta != metadata_of(reread))
      problems.push_back("metadata does not describe the written texts");
    if (!problems.empty()) {
      for (const auto& p : problems)
        err << "reduce: " << p << '\n';
      return exit_failure;
    }
    write_metadata(out, meta);
    return exit_ok;
  });
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    Text S = read_text_file(o.s_path, o.kind);
    Text P = read_text_file(o.p_path, o.kind);
    if (!o.kind && S.kind() != P.kind()) {
      S = Text(AlphabetKind::Four, S.str());
      P = Text(AlphabetKind::Four, P.str());
    }
    const auto result = solve_episode(o.algo, S, P);
    if (result)
      out << result->length << ' ' << result->window_start << ' ' << result->window_end << '\n';
    else
      out << "NONE\n";
    return exit_ok;
  });
}

// --- command line ---------------------------------------------------------

namespace {

std::vector<AlphabetKind> parse_kinds(const std::vector<std::string>& tokens)
{
  std::vector<AlphabetKind> kinds;
  for (const auto& t : tokens)
    kinds.push_back(parse_alphabet_kind(t));
  return kinds;
}

std::vector<Solver> parse_solvers(const std::vector<std::string>& tokens)
{
  std::vector<Solver> solvers;
  for (const auto& t : tokens)
    solvers.push_back(parse_solver(t));
  return solvers;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Episode Matching, Orthogonal Vectors and the reductions between them"};
  app.name("episode_cli");
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random OV instance");
  gen_cmd->add_option("--n", gen.n, "Size of A")->required();
  gen_cmd->add_option("--m", gen.m, "Size of B")->required();
  gen_cmd->add_option("--d", gen.d, "Dimension")->required();
  gen_cmd->add_flag("--planted", gen.planted, "Plant an orthogonal pair");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "Output file (stdout if omitted)");

  ReduceOptions reduce;
  std::string reduce_kind = "4";
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the Episode Matching instance of an OV file");
  reduce_cmd->add_option("input", reduce.in, "OV instance file")->required();
  reduce_cmd->add_option("--kind", reduce_kind, "Alphabet size")->check(CLI::IsMember({"4", "2"}));
  reduce_cmd->add_option("--out", reduce.out_prefix, "Output prefix")->required();

  SolveOptions solve;
  std::string solve_algo = "dp";
  std::string solve_kind;
  auto* solve_cmd = app.add_subcommand("solve", "Shortest window of S containing P");
  solve_cmd->add_option("s_file", solve.s_path, "Text file S")->required();
  solve_cmd->add_option("p_file", solve.p_path, "Pattern file P")->required();
  solve_cmd->add_option("--algo", solve_algo)->check(CLI::IsMember({"dp", "greedy", "brute"}));
  solve_cmd->add_option("--kind", solve_kind)->check(CLI::IsMember({"4", "2"}));

  // verify and bench share flag names but not defaults.
  struct SweepFlags {
    std::string n, m, d;
    std::vector<std::string> kinds, algos;
    std::optional<double> alpha;
  };
  SweepConfig verify = SweepConfig{};
  SweepFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Check the reduction against OV ground truth");
  SweepConfig bench = default_bench_config();
  SweepFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Time the solvers on reduction instances");

  auto add_sweep = [](CLI::App* cmd, SweepConfig& c, SweepFlags& f) {
    cmd->add_option("--n", f.n, "n values: 5, 2:8 or 64,128");
    cmd->add_option("--m", f.m, "m values (same syntax)");
    cmd->add_option("--d", f.d, "d values (same syntax)");
    cmd->add_option("--kind", f.kinds, "Alphabet sizes, comma separated")->delimiter(',');
    cmd->add_option("--algo", f.algos, "Solvers, comma separated")->delimiter(',');
    cmd->add_option("--trials", c.trials, "Trials (verify: random instances)");
    cmd->add_option("--seed", c.seed, "Base seed");
    cmd->add_option("--parallel", c.parallel, "Worker threads, 0 = all cores");
  };
  add_sweep(verify_cmd, verify, verify_flags);
  verify_cmd->add_option("--exhaustive-d", verify.exhaustive_max_d,
                         "Exhaustive n=m=2 sweep up to this d (0 disables)");
  verify_cmd->add_option("--threshold-offset", verify.threshold_offset,
                         "Shift every threshold (negative control)");
  add_sweep(bench_cmd, bench, bench_flags);
  bench_cmd->add_option("--alpha", bench_flags.alpha, "Unbalanced mode: m = round(n^alpha)");
  bench_cmd->add_flag("--planted", bench.planted, "Use yes-instances");
  bench_cmd->add_option("--out", bench.out, "CSV output (stdout if omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  auto apply = [](SweepConfig& c, const SweepFlags& f) {
    if (!f.n.empty())
      c.n_values = parse_int_set(f.n);
    if (!f.m.empty())
      c.m_values = parse_int_set(f.m);
    if (!f.d.empty())
      c.d_values = parse_int_set(f.d);
    if (!f.kinds.empty())
      c.kinds = parse_kinds(f.kinds);
    if (!f.algos.empty())
      c.solvers = parse_solvers(f.algos);
    c.alpha = f.alpha;
  };

  if (*gen_cmd)
    return cmd_gen(gen, out, err);
  if (*reduce_cmd) {
    reduce.kind = parse_alphabet_kind(reduce_kind);
    return cmd_reduce(reduce, out, err);
  }
  if (*solve_cmd) {
    solve.algo = parse_solver(solve_algo);
    if (!solve_kind.empty())
      solve.kind = parse_alphabet_kind(solve_kind);
    return cmd_solve(solve, out, err);
  }
  return guarded(err, [&] {
    if (*verify_cmd) {
      apply(verify, verify_flags);
      return cmd_verify(verify, out, err);
    }
    apply(bench, bench_flags);
    return cmd_bench(bench, out, err);
  });
}

} // namespace episode::harness
