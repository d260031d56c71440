// SPDX-License-Identifier: Apache-2.0

#ifndef EPISODE_EPISODE_HPP
#define EPISODE_EPISODE_HPP

#include <optional>
#include <string_view>

#include "episode/text.hpp"

namespace episode {

/// Shortest window S[start..end] containing P as a subsequence.
///
/// All three solvers share one contract: P must be nonempty and over the
/// same alphabet as S (std::invalid_argument otherwise); the result is empty
/// iff P is not a subsequence of S; among minimal windows the leftmost one is
/// reported.

/// O(|S||P|) time, O(|P|) space. For each end position keeps, per pattern
/// prefix, the largest start from which that prefix still embeds.
std::optional<EpisodeResult> episode_dp(const Text& S, const Text& P);

/// Greedy earliest match from every start with S[start] = P[0].
std::optional<EpisodeResult> episode_per_start_greedy(const Text& S, const Text& P);

/// Every window in order of increasing length, then increasing start.
/// Windows whose end symbols differ from P's cannot be minimal and are
/// skipped without a scan.
std::optional<EpisodeResult> episode_bruteforce(const Text& S, const Text& P);

enum class Solver { dp, greedy, brute };

inline constexpr Solver all_solvers[] = {Solver::dp, Solver::greedy, Solver::brute};

std::string_view to_string(Solver solver) noexcept;
Solver parse_solver(std::string_view name);

std::optional<EpisodeResult> solve_episode(Solver solver, const Text& S, const Text& P);

} // namespace episode

#endif // EPISODE_EPISODE_HPP
