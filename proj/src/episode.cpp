// SPDX-License-Identifier: Apache-2.0

#include "episode/episode.hpp"

#include <cstdint>
#include <vector>

#include "episode/subsequence.hpp"

namespace episode {

namespace {

void check_contract(const Text& S, const Text& P)
{
  require_same_alphabet(S, P);
  if (P.empty())
    throw std::invalid_argument("episode matching needs a nonempty pattern");
}

EpisodeResult make_window(std::size_t start, std::size_t end)
{
  return EpisodeResult{end - start + 1, start, end};
}

// Gives up as soon as fewer symbols remain in the window than in the pattern.
bool embeds_in_window(std::string_view p, std::string_view window) noexcept
{
  std::size_t matched = 0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window.size() - i < p.size() - matched)
      return false;
    if (window[i] == p[matched] && ++matched == p.size())
      return true;
  }
  return false;
}

} // namespace

std::optional<EpisodeResult> episode_dp(const Text& S, const Text& P)
{
  check_contract(S, P);
  const std::string_view s = S.view();
  const std::string_view p = P.view();
  const std::size_t m = p.size();

  // start[i]: largest s such that P[0..i-1] embeds in S[s..j], -1 if none.
  constexpr std::int64_t none = -1;
  std::vector<std::int64_t> start(m + 1, none);
  std::optional<EpisodeResult> best;

  for (std::size_t j = 0; j < s.size(); ++j) {
    const char c = s[j];
    start[0] = static_cast<std::int64_t>(j);
    for (std::size_t i = m; i >= 1; --i) {
      if (p[i - 1] == c)
        start[i] = start[i - 1];
    }
    if (start[m] != none) {
      const auto first = static_cast<std::size_t>(start[m]);
      if (!best || j - first + 1 < best->length)
        best = make_window(first, j);
    }
  }
  return best;
}

std::optional<EpisodeResult> episode_per_start_greedy(const Text& S, const Text& P)
{
  check_contract(S, P);
  const std::string_view s = S.view();
  const std::string_view p = P.view();
  std::optional<EpisodeResult> best;

  for (std::size_t first = 0; first < s.size(); ++first) {
    if (s[first] != p[0])
      continue;
    std::size_t matched = 1;
    std::size_t j = first;
    while (matched < p.size() && ++j < s.size()) {
      if (s[j] == p[matched])
        ++matched;
    }
    if (matched < p.size())
      break; // later starts see a suffix of this one
    if (!best || j - first + 1 < best->length)
      best = make_window(first, j);
  }
  return best;
}

std::optional<EpisodeResult> episode_bruteforce(const Text& S, const Text& P)
{
  check_contract(S, P);
  const std::string_view s = S.view();
  const std::string_view p = P.view();

  for (std::size_t len = p.size(); len <= s.size(); ++len) {
    for (std::size_t first = 0; first + len <= s.size(); ++first) {
      const std::size_t last = first + len - 1;
      if (s[first] != p.front() || s[last] != p.back())
        continue;
      if (embeds_in_window(p, s.substr(first, len)))
        return make_window(first, last);
    }
  }
  return std::nullopt;
}

std::string_view to_string(Solver solver) noexcept
{
  switch (solver) {
  case Solver::dp: return "dp";
  case Solver::greedy: return "greedy";
  case Solver::brute: return "brute";
  }
  return "?";
}

Solver parse_solver(std::string_view name)
{
  for (Solver s : all_solvers) {
    if (to_string(s) == name)
      return s;
  }
  throw std::invalid_argument("unknown solver '" + std::string(name) + "'");
}

std::optional<EpisodeResult> solve_episode(Solver solver, const Text& S, const Text& P)
{
  switch (solver) {
  case Solver::dp: return episode_dp(S, P);
  case Solver::greedy: return episode_per_start_greedy(S, P);
  case Solver::brute: return episode_bruteforce(S, P);
  }
  throw std::invalid_argument("unknown solver");
}

} // namespace episode
