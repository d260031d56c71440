// SPDX-License-Identifier: Apache-2.0

#ifndef EPISODE_REDUCTION_HPP
#define EPISODE_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "episode/episode.hpp"
#include "episode/ov.hpp"
#include "episode/text.hpp"

namespace episode {

/// An Episode Matching instance built from an OV instance. The OV instance
/// has an orthogonal pair iff the episode length of P in S is strictly less
/// than `threshold`.
struct ReductionInstance {
  Text S;
  Text P;
  AlphabetKind kind = AlphabetKind::Four;
  std::size_t threshold = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
};

/// Closed-form sizes of a construction.
struct ReductionGeometry {
  std::size_t pattern_length = 0;
  std::size_t text_length = 0;
  std::size_t block_length = 0;
  std::size_t block_count = 0;
  /// Window spanned by aligning every p(b) to consecutive s(z) copies.
  std::size_t baseline_window = 0;
  std::size_t threshold = 0;
};

ReductionGeometry expected_geometry(AlphabetKind kind, std::size_t n, std::size_t m,
                                    std::size_t d);

// Alphabet {0,1,x,$}.

/// "01" for a zero entry, "00" for a one entry.
Text coord_gadget_four(bool bit);
/// b[0] x b[1] x ... x b[d-1]
Text p_gadget_four(const BitVector& b);
/// s(a[0]) x s(a[1]) x ... x s(a[d-1])
Text s_gadget_four(const BitVector& a);

// Binary alphabet: x becomes the inner separator 0^d, which also brackets
// both gadgets; $ becomes the outer separator 1^{d+1}.

Text p_gadget_binary(const BitVector& b);
Text s_gadget_binary(const BitVector& a);

Text p_gadget(AlphabetKind kind, const BitVector& b);
Text s_gadget(AlphabetKind kind, const BitVector& a);

/// P = $ p(b_1) $ ... $ p(b_m) $ and
/// S = $ s(z) $ followed by two copies of s(a_1) $ s(z) $ ... s(a_n) $ s(z) $.
/// Requires m >= 2, n >= m, d >= 1 (std::invalid_argument otherwise).
ReductionInstance build_four(const OvInstance& inst);

/// build_four's skeleton with the binary gadgets and separators.
ReductionInstance build_binary(const OvInstance& inst);

ReductionInstance build_reduction(AlphabetKind kind, const OvInstance& inst);

/// Number of blocks in r.S, found by counting outer separators independently
/// of the builder.
std::size_t count_blocks(const ReductionInstance& r);

/// Every way `r` departs from the expected sizes, threshold and block layout
/// for `source`. Empty means well formed.
std::vector<std::string> geometry_violations(const ReductionInstance& r,
                                             const OvInstance& source);

struct EpisodeDecision {
  std::size_t episode_length = 0;
  std::size_t window_start = 0;
  bool has_pair = false;
};

/// Runs `solver` on (S, P) and compares against the threshold. Throws
/// invariant_error if P fails to embed, which only a broken build can cause.
EpisodeDecision decide_with_length(const ReductionInstance& r, Solver solver);

bool decide_via_episode(const ReductionInstance& r, Solver solver);

/// p(b) embeds in s(a) iff a and b are orthogonal. Returns the embedding
/// result; throws invariant_error if it disagrees with is_orthogonal.
bool lemma_check(const BitVector& a, const BitVector& b, AlphabetKind kind);

struct VerifyOptions {
  std::vector<Solver> solvers{std::begin(all_solvers), std::end(all_solvers)};
  std::vector<AlphabetKind> kinds{AlphabetKind::Four, AlphabetKind::Binary};
  /// Added to each built threshold before deciding. Nonzero only for
  /// negative controls.
  long threshold_offset = 0;
  /// Run the per-(kind, solver) solves on separate threads.
  bool concurrent = false;
};

struct SolverRun {
  AlphabetKind kind = AlphabetKind::Four;
  Solver solver = Solver::dp;
  std::size_t episode_length = 0;
  std::size_t threshold = 0;
  bool decision = false;
  bool decision_ok = false;
  bool bound_ok = false;
};

struct VerificationReport {
  bool ov_decision = false;
  std::optional<OvPair> ov_pair;
  std::vector<SolverRun> runs;
  std::vector<std::string> failures;
  bool passed = false;
};

/// Builds both reductions of `inst`, solves each with every selected solver
/// and checks the decision against ov_bruteforce, plus the per-case length
/// bounds relative to the threshold t:
///   four, no pair:    episode == t
///   four, pair:       episode <= t - 3d
///   binary, no pair:  t <= episode <= t + 2d
///   binary, pair:     episode <= t + 2d - (d^2 + 4d + 1)
/// Failures are collected into the report, never thrown.
VerificationReport verify_equivalence(const OvInstance& inst, const VerifyOptions& options = {});

} // namespace episode

#endif // EPISODE_REDUCTION_HPP
