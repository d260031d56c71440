// SPDX-License-Identifier: Apache-2.0

#ifndef EPISODE_TEXT_HPP
#define EPISODE_TEXT_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace episode {

/// Symbol set a Text is drawn from. Binary is {0,1}; Four is {0,1,x,$}.
enum class AlphabetKind { Binary, Four };

std::string_view to_string(AlphabetKind kind) noexcept;

/// Parses "2"/"binary" and "4"/"four".
AlphabetKind parse_alphabet_kind(std::string_view token);

bool is_symbol_of(AlphabetKind kind, char symbol) noexcept;

/// Thrown when an internal construction invariant is broken. Never a normal
/// outcome; seeing one means the implementation is wrong.
class invariant_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Immutable symbol sequence over a declared alphabet, stored as the
/// canonical ASCII bytes '0', '1', 'x', '$'.
class Text {
public:
  Text() = default;

  /// Validates every byte against `kind`; throws std::invalid_argument on a
  /// foreign symbol.
  Text(AlphabetKind kind, std::string symbols);

  /// Smallest alphabet containing every symbol of `symbols`.
  static Text infer(std::string_view symbols);

  AlphabetKind kind() const noexcept { return kind_; }
  std::string_view view() const noexcept { return symbols_; }
  const std::string& str() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  char operator[](std::size_t i) const noexcept { return symbols_[i]; }

  /// Inclusive substring [first, last].
  Text substr(std::size_t first, std::size_t last) const;

  friend bool operator==(const Text&, const Text&) = default;

private:
  AlphabetKind kind_ = AlphabetKind::Binary;
  std::string symbols_;
};

/// Strictly increasing host indices j_0 < ... < j_{|Y|-1}.
using Alignment = std::vector<std::size_t>;

/// Minimal window of S containing P as a subsequence. Bounds are inclusive.
struct EpisodeResult {
  std::size_t length = 0;
  std::size_t window_start = 0;
  std::size_t window_end = 0;

  friend bool operator==(const EpisodeResult&, const EpisodeResult&) = default;
};

/// Throws std::invalid_argument unless both texts share an alphabet.
void require_same_alphabet(const Text& a, const Text& b);

/// Reads raw alphabet bytes; a single trailing newline (LF or CRLF) is
/// dropped. With no `kind` the alphabet is inferred.
Text read_text_file(const std::filesystem::path& path,
                    std::optional<AlphabetKind> kind = std::nullopt);

void write_text_file(const std::filesystem::path& path, const Text& text);

} // namespace episode

#endif // EPISODE_TEXT_HPP
