// SPDX-License-Identifier: Apache-2.0

#include "episode/text.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace episode {

std::string_view to_string(AlphabetKind kind) noexcept
{
  return kind == AlphabetKind::Four ? "4" : "2";
}

AlphabetKind parse_alphabet_kind(std::string_view token)
{
  if (token == "2" || token == "binary")
    return AlphabetKind::Binary;
  if (token == "4" || token == "four")
    return AlphabetKind::Four;
  throw std::invalid_argument("unknown alphabet kind '" + std::string(token) + "'");
}

bool is_symbol_of(AlphabetKind kind, char symbol) noexcept
{
  if (symbol == '0' || symbol == '1')
    return true;
  return kind == AlphabetKind::Four && (symbol == 'x' || symbol == '$');
}

Text::Text(AlphabetKind kind, std::string symbols)
  : kind_(kind), symbols_(std::move(symbols))
{
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!is_symbol_of(kind_, symbols_[i])) {
      std::ostringstream msg;
      msg << "symbol at offset " << i << " is not in the alphabet of size "
          << to_string(kind_);
      throw std::invalid_argument(msg.str());
    }
  }
}

Text Text::infer(std::string_view symbols)
{
  for (char c : symbols) {
    if (c == 'x' || c == '$')
      return Text(AlphabetKind::Four, std::string(symbols));
  }
  return Text(AlphabetKind::Binary, std::string(symbols));
}

Text Text::substr(std::size_t first, std::size_t last) const
{
  if (first > last || last >= symbols_.size())
    throw std::out_of_range("Text::substr: bad inclusive range");
  Text out;
  out.kind_ = kind_;
  out.symbols_ = symbols_.substr(first, last - first + 1);
  return out;
}

void require_same_alphabet(const Text& a, const Text& b)
{
  if (a.kind() != b.kind())
    throw std::invalid_argument("alphabet mismatch between pattern and text");
}

Text read_text_file(const std::filesystem::path& path,
                    std::optional<AlphabetKind> kind)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (!bytes.empty() && bytes.back() == '\n') {
    bytes.pop_back();
    if (!bytes.empty() && bytes.back() == '\r')
      bytes.pop_back();
  }
  if (kind)
    return Text(*kind, std::move(bytes));
  return Text::infer(bytes);
}

void write_text_file(const std::filesystem::path& path, const Text& text)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << text.str() << '\n';
  if (!out)
    throw std::runtime_error("write failed for " + path.string());
}

} // namespace episode
