// SPDX-License-Identifier: Apache-2.0

#include "episode/subsequence.hpp"

namespace episode {

bool is_subsequence(std::string_view pattern, std::string_view text) noexcept
{
  std::size_t matched = 0;
  for (std::size_t i = 0; i < text.size() && matched < pattern.size(); ++i) {
    if (text[i] == pattern[matched])
      ++matched;
  }
  return matched == pattern.size();
}

bool is_subsequence(const Text& pattern, const Text& text)
{
  require_same_alphabet(pattern, text);
  return is_subsequence(pattern.view(), text.view());
}

std::optional<Alignment> leftmost_alignment(const Text& pattern, const Text& text)
{
  require_same_alphabet(pattern, text);
  Alignment out;
  out.reserve(pattern.size());
  for (std::size_t i = 0; i < text.size() && out.size() < pattern.size(); ++i) {
    if (text[i] == pattern[out.size()])
      out.push_back(i);
  }
  if (out.size() != pattern.size())
    return std::nullopt;
  return out;
}

bool verify_alignment(const Text& pattern, const Text& text, const Alignment& a) noexcept
{
  if (a.size() != pattern.size())
    return false;
  for (std::size_t l = 0; l < a.size(); ++l) {
    if (a[l] >= text.size())
      return false;
    if (l > 0 && a[l] <= a[l - 1])
      return false;
    if (text[a[l]] != pattern[l])
      return false;
  }
  return true;
}

} // namespace episode
