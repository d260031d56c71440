// SPDX-License-Identifier: Apache-2.0

#ifndef EPISODE_OV_HPP
#define EPISODE_OV_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace episode {

/// d-dimensional 0/1 vector.
class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t dimension) : bits_(dimension, 0) {}

  /// From a string of '0'/'1'; throws std::invalid_argument otherwise.
  static BitVector parse(std::string_view bits);

  std::size_t dimension() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  void set(std::size_t i, bool value) noexcept { bits_[i] = value ? 1 : 0; }

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

using VectorSet = std::vector<BitVector>;

/// Thrown on dimension mismatch.
bool is_orthogonal(const BitVector& a, const BitVector& b);

struct OvInstance {
  VectorSet A;
  VectorSet B;
  std::size_t d = 0;

  std::size_t n() const noexcept { return A.size(); }
  std::size_t m() const noexcept { return B.size(); }

  /// Nonempty sets, d >= 1, every member of dimension d.
  void validate() const;

  friend bool operator==(const OvInstance&, const OvInstance&) = default;
};

/// (index into A, index into B)
using OvPair = std::pair<std::size_t, std::size_t>;

/// First orthogonal pair in lexicographic (i, j) order.
std::optional<OvPair> ov_bruteforce(const OvInstance& inst);

/// Deterministic in `seed`. Requires n >= m >= 2 and d >= 1.
///
/// Bits are i.i.d. fair coins. A no-instance (planted = false) is then
/// repaired until ov_bruteforce finds nothing; a yes-instance gets one random
/// (a_i, b_j) overwritten with a disjoint-support pair.
OvInstance generate_instance(std::size_t n, std::size_t m, std::size_t d,
                             bool planted, std::uint64_t seed);

/// Plain text: "n m d", then n A-vectors, then m B-vectors, one per line.
OvInstance parse_ov_instance(std::istream& in);
void write_ov_instance(std::ostream& out, const OvInstance& inst);

OvInstance read_ov_file(const std::filesystem::path& path);
void write_ov_file(const std::filesystem::path& path, const OvInstance& inst);

} // namespace episode

#endif // EPISODE_OV_HPP
