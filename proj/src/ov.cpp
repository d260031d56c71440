// SPDX-License-Identifier: Apache-2.0

#include "episode/ov.hpp"
#include "episode/text.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace episode {

BitVector BitVector::parse(std::string_view bits)
{
  if (bits.empty())
    throw std::invalid_argument("empty bit vector");
  BitVector out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw std::invalid_argument("bit vector '" + std::string(bits) + "' has a non-0/1 character");
    out.set(i, bits[i] == '1');
  }
  return out;
}

std::string BitVector::to_string() const
{
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    out[i] = bits_[i] ? '1' : '0';
  return out;
}

bool is_orthogonal(const BitVector& a, const BitVector& b)
{
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("orthogonality test on vectors of different dimension");
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] && b[i])
      return false;
  }
  return true;
}

void OvInstance::validate() const
{
  if (d < 1)
    throw std::invalid_argument("OV dimension must be at least 1");
  if (A.empty() || B.empty())
    throw std::invalid_argument("OV vector sets must be nonempty");
  for (const VectorSet* set : {&A, &B}) {
    for (const BitVector& v : *set) {
      if (v.dimension() != d)
        throw std::invalid_argument("OV vector dimension differs from d");
    }
  }
}

std::optional<OvPair> ov_bruteforce(const OvInstance& inst)
{
  for (std::size_t i = 0; i < inst.A.size(); ++i) {
    for (std::size_t j = 0; j < inst.B.size(); ++j) {
      if (is_orthogonal(inst.A[i], inst.B[j]))
        return OvPair{i, j};
    }
  }
  return std::nullopt;
}

namespace {

BitVector random_vector(std::size_t d, std::mt19937_64& rng)
{
  std::bernoulli_distribution coin(0.5);
  BitVector v(d);
  for (std::size_t k = 0; k < d; ++k)
    v.set(k, coin(rng));
  return v;
}

std::size_t uniform_index(std::size_t size, std::mt19937_64& rng)
{
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

// Repairs a no-instance. Only ever adds ones (or replaces a B-vector by one
// that hits every A-vector), so no repair can create a new orthogonal pair.
void destroy_orthogonal_pairs(OvInstance& inst, std::mt19937_64& rng)
{
  std::optional<std::size_t> all_ones_coord;
  for (std::size_t k = 0; k < inst.d && !all_ones_coord; ++k) {
    bool all = true;
    for (const BitVector& a : inst.A)
      all = all && a[k];
    if (all)
      all_ones_coord = k;
  }

  while (auto pair = ov_bruteforce(inst)) {
    auto [i, j] = *pair;
    if (all_ones_coord) {
      inst.B[j] = random_vector(inst.d, rng);
      inst.B[j].set(*all_ones_coord, true);
    } else {
      const std::size_t k = uniform_index(inst.d, rng);
      inst.A[i].set(k, true);
      inst.B[j].set(k, true);
    }
  }
}

void plant_orthogonal_pair(OvInstance& inst, std::mt19937_64& rng)
{
  const std::size_t i = uniform_index(inst.n(), rng);
  const std::size_t j = uniform_index(inst.m(), rng);
  // Per coordinate one of (0,0), (1,0), (0,1).
  std::uniform_int_distribution<int> pick(0, 2);
  for (std::size_t k = 0; k < inst.d; ++k) {
    const int c = pick(rng);
    inst.A[i].set(k, c == 1);
    inst.B[j].set(k, c == 2);
  }
}

} // namespace

OvInstance generate_instance(std::size_t n, std::size_t m, std::size_t d,
                             bool planted, std::uint64_t seed)
{
  if (d < 1)
    throw std::invalid_argument("generate_instance: d must be at least 1");
  if (m < 2)
    throw std::invalid_argument("generate_instance: m must be at least 2");
  if (n < m)
    throw std::invalid_argument("generate_instance: n must be at least m (swap A and B)");

  std::mt19937_64 rng(seed);
  OvInstance inst;
  inst.d = d;
  inst.A.reserve(n);
  inst.B.reserve(m);
  for (std::size_t i = 0; i < n; ++i)
    inst.A.push_back(random_vector(d, rng));
  for (std::size_t j = 0; j < m; ++j)
    inst.B.push_back(random_vector(d, rng));

  if (planted)
    plant_orthogonal_pair(inst, rng);
  else
    destroy_orthogonal_pairs(inst, rng);

  if (ov_bruteforce(inst).has_value() != planted)
    throw invariant_error("generate_instance: label check failed");
  return inst;
}

OvInstance parse_ov_instance(std::istream& in)
{
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("OV instance: missing header line");
  std::istringstream header(line);
  long long n = 0, m = 0, d = 0;
  std::string extra;
  if (!(header >> n >> m >> d) || (header >> extra) || n < 1 || m < 1 || d < 1)
    throw std::invalid_argument("OV instance: malformed header '" + line + "'");

  OvInstance inst;
  inst.d = static_cast<std::size_t>(d);
  auto read_set = [&](VectorSet& set, long long count, const char* name) {
    for (long long k = 0; k < count; ++k) {
      if (!std::getline(in, line))
        throw std::invalid_argument(std::string("OV instance: too few ") + name + " vectors");
      if (!line.empty() && line.back() == '\r')
        line.pop_back();
      BitVector v = BitVector::parse(line);
      if (v.dimension() != inst.d)
        throw std::invalid_argument("OV instance: vector '" + line + "' does not have dimension d");
      set.push_back(std::move(v));
    }
  };
  read_set(inst.A, n, "A");
  read_set(inst.B, m, "B");
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw std::invalid_argument("OV instance: trailing content after vectors");
  }
  return inst;
}

void write_ov_instance(std::ostream& out, const OvInstance& inst)
{
  out << inst.n() << ' ' << inst.m() << ' ' << inst.d << '\n';
  for (const BitVector& a : inst.A)
    out << a.to_string() << '\n';
  for (const BitVector& b : inst.B)
    out << b.to_string() << '\n';
}

OvInstance read_ov_file(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  return parse_ov_instance(in);
}

void write_ov_file(const std::filesystem::path& path, const OvInstance& inst)
{
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  write_ov_instance(out, inst);
  if (!out)
    throw std::runtime_error("write failed for " + path.string());
}

} // namespace episode
