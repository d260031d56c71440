// SPDX-License-Identifier: Apache-2.0

#ifndef EPISODE_SUBSEQUENCE_HPP
#define EPISODE_SUBSEQUENCE_HPP

#include <optional>
#include <string_view>

#include "episode/text.hpp"

namespace episode {

/// Single greedy left-to-right scan. Throws on alphabet mismatch.
bool is_subsequence(const Text& pattern, const Text& text);

/// Raw-byte scan used by the solvers and gadget checks; no alphabet check.
bool is_subsequence(std::string_view pattern, std::string_view text) noexcept;

/// Lexicographically least alignment (earliest match for every symbol), or
/// nullopt when `pattern` does not embed in `text`.
std::optional<Alignment> leftmost_alignment(const Text& pattern, const Text& text);

/// True iff `a` is strictly increasing, in range, and matches `pattern`
/// symbol for symbol. Malformed input yields false.
bool verify_alignment(const Text& pattern, const Text& text, const Alignment& a) noexcept;

} // namespace episode

#endif // EPISODE_SUBSEQUENCE_HPP
