// SPDX-License-Identifier: Apache-2.0

#include "episode/reduction.hpp"

#include <future>
#include <sstream>
#include <stdexcept>

#include "episode/subsequence.hpp"

namespace episode {

ReductionGeometry expected_geometry(AlphabetKind kind, std::size_t n, std::size_t m,
                                    std::size_t d)
{
  ReductionGeometry g;
  g.block_count = 4 * n + 1;
  if (kind == AlphabetKind::Four) {
    g.pattern_length = 2 * d * m + 1;
    g.block_length = 3 * d;
    g.text_length = 3 * d * (4 * n + 1) + 1;
    g.baseline_window = 3 * d * (2 * m - 1) + 1;
    g.threshold = g.baseline_window;
  } else {
    g.pattern_length = (d + 2) * d * m + (m + 1) * (d + 1);
    g.block_length = d * d + 4 * d + 1;
    g.text_length = g.block_length * (4 * n + 1) + d + 1;
    g.baseline_window = g.block_length * (2 * m - 1) + d + 1;
    g.threshold = g.baseline_window - 2 * d;
  }
  return g;
}

Text coord_gadget_four(bool bit)
{
  return Text(AlphabetKind::Four, bit ? "00" : "01");
}

namespace {

std::string coord_symbols(bool bit) { return bit ? "00" : "01"; }

std::string joined_p_four(const BitVector& b)
{
  std::string out;
  out.reserve(2 * b.dimension());
  for (std::size_t i = 0; i < b.dimension(); ++i) {
    if (i > 0)
      out += 'x';
    out += b[i] ? '1' : '0';
  }
  return out;
}

std::string joined_s_four(const BitVector& a)
{
  std::string out;
  out.reserve(3 * a.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (i > 0)
      out += 'x';
    out += coord_symbols(a[i]);
  }
  return out;
}

std::string joined_p_binary(const BitVector& b)
{
  const std::size_t d = b.dimension();
  const std::string inner(d, '0');
  std::string out = inner;
  out.reserve((d + 2) * d);
  for (std::size_t i = 0; i < d; ++i) {
    out += b[i] ? '1' : '0';
    out += inner;
  }
  return out;
}

std::string joined_s_binary(const BitVector& a)
{
  const std::size_t d = a.dimension();
  const std::string inner(d, '0');
  std::string out = inner;
  out.reserve((d + 3) * d);
  for (std::size_t i = 0; i < d; ++i) {
    out += coord_symbols(a[i]);
    out += inner;
  }
  return out;
}

void require_dimension(const BitVector& v)
{
  if (v.dimension() < 1)
    throw std::invalid_argument("gadget of a zero-dimensional vector");
}

void require_reducible(const OvInstance& inst)
{
  inst.validate();
  if (inst.m() < 2)
    throw std::invalid_argument("reduction needs |B| >= 2");
  if (inst.n() < inst.m())
    throw std::invalid_argument("reduction needs |A| >= |B|; swap A and B");
}

// Shared skeleton of both constructions.
ReductionInstance assemble(AlphabetKind kind, const OvInstance& inst,
                           const std::string& outer,
                           std::string (*p_of)(const BitVector&),
                           std::string (*s_of)(const BitVector&))
{
  require_reducible(inst);
  const auto g = expected_geometry(kind, inst.n(), inst.m(), inst.d);

  std::string p = outer;
  p.reserve(g.pattern_length);
  for (const BitVector& b : inst.B) {
    p += p_of(b);
    p += outer;
  }

  const std::string zero_block = s_of(BitVector(inst.d)) + outer;
  std::string s = outer;
  s.reserve(g.text_length);
  s += zero_block;
  for (int copy = 0; copy < 2; ++copy) {
    for (const BitVector& a : inst.A) {
      s += s_of(a);
      s += outer;
      s += zero_block;
    }
  }

  ReductionInstance r;
  r.kind = kind;
  r.S = Text(kind, std::move(s));
  r.P = Text(kind, std::move(p));
  r.threshold = g.threshold;
  r.n = inst.n();
  r.m = inst.m();
  r.d = inst.d;
  return r;
}

} // namespace

Text p_gadget_four(const BitVector& b)
{
  require_dimension(b);
  return Text(AlphabetKind::Four, joined_p_four(b));
}

Text s_gadget_four(const BitVector& a)
{
  require_dimension(a);
  return Text(AlphabetKind::Four, joined_s_four(a));
}

Text p_gadget_binary(const BitVector& b)
{
  require_dimension(b);
  return Text(AlphabetKind::Binary, joined_p_binary(b));
}

Text s_gadget_binary(const BitVector& a)
{
  require_dimension(a);
  return Text(AlphabetKind::Binary, joined_s_binary(a));
}

Text p_gadget(AlphabetKind kind, const BitVector& b)
{
  return kind == AlphabetKind::Four ? p_gadget_four(b) : p_gadget_binary(b);
}

Text s_gadget(AlphabetKind kind, const BitVector& a)
{
  return kind == AlphabetKind::Four ? s_gadget_four(a) : s_gadget_binary(a);
}

ReductionInstance build_four(const OvInstance& inst)
{
  return assemble(AlphabetKind::Four, inst, "$", joined_p_four, joined_s_four);
}

ReductionInstance build_binary(const OvInstance& inst)
{
  return assemble(AlphabetKind::Binary, inst, std::string(inst.d + 1, '1'),
                  joined_p_binary, joined_s_binary);
}

ReductionInstance build_reduction(AlphabetKind kind, const OvInstance& inst)
{
  return kind == AlphabetKind::Four ? build_four(inst) : build_binary(inst);
}

std::size_t count_blocks(const ReductionInstance& r)
{
  const std::string_view s = r.S.view();
  std::size_t separators = 0;
  if (r.kind == AlphabetKind::Four) {
    for (char c : s)
      separators += c == '$';
  } else {
    // Gadget ones are isolated between zero runs, so every maximal run of
    // exactly d+1 ones is an outer separator.
    std::size_t run = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
      if (i < s.size() && s[i] == '1') {
        ++run;
        continue;
      }
      separators += run == r.d + 1;
      run = 0;
    }
  }
  return separators == 0 ? 0 : separators - 1;
}

std::vector<std::string> geometry_violations(const ReductionInstance& r,
                                             const OvInstance& source)
{
  std::vector<std::string> out;
  auto expect = [&](const char* what, std::size_t got, std::size_t want) {
    if (got != want) {
      std::ostringstream msg;
      msg << "kind " << to_string(r.kind) << ": " << what << " is " << got
          << ", expected " << want;
      out.push_back(msg.str());
    }
  };

  const auto g = expected_geometry(r.kind, source.n(), source.m(), source.d);
  expect("n", r.n, source.n());
  expect("m", r.m, source.m());
  expect("d", r.d, source.d);
  expect("|P|", r.P.size(), g.pattern_length);
  expect("|S|", r.S.size(), g.text_length);
  expect("threshold", r.threshold, g.threshold);
  expect("block count", count_blocks(r), g.block_count);
  if (r.S.kind() != r.kind || r.P.kind() != r.kind)
    out.push_back("text alphabet differs from instance kind");
  if (!out.empty())
    return out;

  // Walk S block by block: z, a_1, z, ..., a_n, z, a_1, z, ..., a_n, z.
  const std::size_t outer_len = r.kind == AlphabetKind::Four ? 1 : r.d + 1;
  const std::string_view s = r.S.view();
  const std::string outer = r.kind == AlphabetKind::Four ? "$" : std::string(outer_len, '1');
  if (s.substr(0, outer_len) != outer)
    out.push_back("S does not open with an outer separator");
  const std::string zero = s_gadget(r.kind, BitVector(r.d)).str();
  std::vector<std::size_t> seen(source.n(), 0);
  std::size_t pos = outer_len;
  for (std::size_t block = 0; block < g.block_count; ++block, pos += g.block_length) {
    const std::string_view body = s.substr(pos, g.block_length - outer_len);
    if (s.substr(pos + body.size(), outer_len) != outer) {
      out.push_back("block " + std::to_string(block) + " is not closed by an outer separator");
      continue;
    }
    if (block % 2 == 0) {
      if (body != zero)
        out.push_back("block " + std::to_string(block) + " should be s(z)");
      continue;
    }
    const std::size_t i = (block / 2) % source.n();
    if (body != s_gadget(r.kind, source.A[i]).view())
      out.push_back("block " + std::to_string(block) + " should be s(a_" + std::to_string(i + 1) + ")");
    else
      ++seen[i];
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != 2)
      out.push_back("s(a_" + std::to_string(i + 1) + ") appears " + std::to_string(seen[i]) + " times");
  }
  return out;
}

EpisodeDecision decide_with_length(const ReductionInstance& r, Solver solver)
{
  const auto episode = solve_episode(solver, r.S, r.P);
  if (!episode)
    throw invariant_error("reduction pattern does not embed in its text");
  return EpisodeDecision{episode->length, episode->window_start,
                         episode->length < r.threshold};
}

bool decide_via_episode(const ReductionInstance& r, Solver solver)
{
  return decide_with_length(r, solver).has_pair;
}

bool lemma_check(const BitVector& a, const BitVector& b, AlphabetKind kind)
{
  const bool orthogonal = is_orthogonal(a, b); // throws on dimension mismatch
  const bool embeds = is_subsequence(p_gadget(kind, b), s_gadget(kind, a));
  if (embeds != orthogonal) {
    throw invariant_error("gadget lemma violated for a=" + a.to_string() + " b=" + b.to_string() +
                          " kind=" + std::string(to_string(kind)));
  }
  return embeds;
}

namespace {

bool within_bounds(const ReductionInstance& r, std::size_t episode, bool has_pair)
{
  const std::size_t t = r.threshold;
  const std::size_t d = r.d;
  if (r.kind == AlphabetKind::Four) {
    if (!has_pair)
      return episode == t;
    return t >= 3 * d && episode <= t - 3 * d;
  }
  const std::size_t w = t + 2 * d;
  if (!has_pair)
    return t <= episode && episode <= w;
  const std::size_t block = d * d + 4 * d + 1;
  return w >= block && episode <= w - block;
}

} // namespace

VerificationReport verify_equivalence(const OvInstance& inst, const VerifyOptions& options)
{
  VerificationReport report;
  try {
    report.ov_pair = ov_bruteforce(inst);
    report.ov_decision = report.ov_pair.has_value();

    std::vector<ReductionInstance> built;
    for (AlphabetKind kind : options.kinds) {
      ReductionInstance r = build_reduction(kind, inst);
      for (auto& v : geometry_violations(r, inst))
        report.failures.push_back(std::move(v));
      const long shifted = static_cast<long>(r.threshold) + options.threshold_offset;
      if (shifted < 1)
        throw std::invalid_argument("threshold offset leaves a non-positive threshold");
      r.threshold = static_cast<std::size_t>(shifted);
      built.push_back(std::move(r));
    }

    struct Job {
      const ReductionInstance* r;
      Solver solver;
    };
    std::vector<Job> jobs;
    for (const auto& r : built) {
      for (Solver solver : options.solvers)
        jobs.push_back({&r, solver});
    }

    auto run = [&](const Job& job) {
      const EpisodeDecision dec = decide_with_length(*job.r, job.solver);
      SolverRun out;
      out.kind = job.r->kind;
      out.solver = job.solver;
      out.episode_length = dec.episode_length;
      out.threshold = job.r->threshold;
      out.decision = dec.has_pair;
      out.decision_ok = dec.has_pair == report.ov_decision;
      out.bound_ok = within_bounds(*job.r, dec.episode_length, report.ov_decision);
      return out;
    };

    if (options.concurrent) {
      std::vector<std::future<SolverRun>> pending;
      for (const Job& job : jobs)
        pending.push_back(std::async(std::launch::async, run, job));
      for (auto& f : pending)
        report.runs.push_back(f.get());
    } else {
      for (const Job& job : jobs)
        report.runs.push_back(run(job));
    }

    for (const SolverRun& run_result : report.runs) {
      std::ostringstream where;
      where << "kind " << to_string(run_result.kind) << " solver " << to_string(run_result.solver)
            << " (episode " << run_result.episode_length << ", threshold "
            << run_result.threshold << ", ov " << (report.ov_decision ? "yes" : "no") << ")";
      if (!run_result.decision_ok)
        report.failures.push_back("decision mismatch: " + where.str());
      if (!run_result.bound_ok)
        report.failures.push_back("length bound violated: " + where.str());
    }
  } catch (const std::exception& e) {
    report.failures.push_back(std::string("error: ") + e.what());
  }
  report.passed = report.failures.empty();
  return report;
}

} // namespace episode
