// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "episode/ov.hpp"
#include "oracle.hpp"

using namespace episode;

namespace {

BitVector bv(const char* s) { return BitVector::parse(s); }

OvInstance instance(std::initializer_list<const char*> a, std::initializer_list<const char*> b)
{
  OvInstance inst;
  for (const char* s : a)
    inst.A.push_back(bv(s));
  for (const char* s : b)
    inst.B.push_back(bv(s));
  inst.d = inst.A.front().dimension();
  inst.validate();
  return inst;
}

bool has_pair_double_loop(const OvInstance& inst)
{
  for (const auto& a : inst.A)
    for (const auto& b : inst.B)
      if (oracle::orthogonal(a.to_string(), b.to_string()))
        return true;
  return false;
}

} // namespace

TEST_CASE("bit vectors")
{
  CHECK(bv("10110").to_string() == "10110");
  CHECK(bv("10110").dimension() == 5);
  CHECK_THROWS_AS(bv("10a"), std::invalid_argument);
  CHECK_THROWS_AS(bv(""), std::invalid_argument);
}

TEST_CASE("is_orthogonal")
{
  CHECK(is_orthogonal(bv("10001"), bv("01010")));
  CHECK_FALSE(is_orthogonal(bv("1"), bv("1")));
  CHECK(is_orthogonal(bv("000"), bv("111")));
  CHECK_THROWS_AS(is_orthogonal(bv("10"), bv("100")), std::invalid_argument);
}

TEST_CASE("ov_bruteforce")
{
  CHECK_FALSE(ov_bruteforce(instance({"11"}, {"11"})).has_value());
  CHECK(ov_bruteforce(instance({"10", "01"}, {"01"})) == OvPair{0, 0});
  CHECK(ov_bruteforce(instance({"11", "10"}, {"11", "01"})) == OvPair{1, 1});
}

TEST_CASE("instance validation")
{
  OvInstance inst = instance({"10", "01"}, {"01"});
  inst.B.push_back(bv("011"));
  CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
  OvInstance empty;
  empty.d = 2;
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}

TEST_CASE("generate_instance honours the planted label")
{
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t d = 1 + seed % 7;
    const std::size_t m = 2 + seed % 4;
    const std::size_t n = m + seed % 3;
    for (bool planted : {false, true}) {
      const OvInstance inst = generate_instance(n, m, d, planted, seed);
      CHECK(inst.n() == n);
      CHECK(inst.m() == m);
      CHECK(inst.d == d);
      inst.validate();
      CHECK(ov_bruteforce(inst).has_value() == planted);
      CHECK(has_pair_double_loop(inst) == planted);
    }
  }
  CHECK(ov_bruteforce(generate_instance(2, 2, 2, true, 99)).has_value());
  CHECK_FALSE(ov_bruteforce(generate_instance(2, 2, 2, false, 99)).has_value());
}

TEST_CASE("generate_instance is deterministic and checks parameters")
{
  CHECK(generate_instance(6, 4, 5, false, 42) == generate_instance(6, 4, 5, false, 42));
  CHECK(generate_instance(6, 4, 5, true, 42) == generate_instance(6, 4, 5, true, 42));
  CHECK_FALSE(generate_instance(6, 4, 5, false, 42) == generate_instance(6, 4, 5, false, 43));
  CHECK_THROWS_AS(generate_instance(3, 4, 2, false, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(3, 1, 2, false, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(3, 2, 0, false, 0), std::invalid_argument);
}

TEST_CASE("OV file format")
{
  const OvInstance inst = generate_instance(4, 3, 3, true, 7);
  std::ostringstream out;
  write_ov_instance(out, inst);
  const std::string text = out.str();
  CHECK(text.rfind("4 3 3\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 8);

  std::istringstream in(text);
  CHECK(parse_ov_instance(in) == inst);

  auto parse = [](const std::string& s) {
    std::istringstream is(s);
    return parse_ov_instance(is);
  };
  CHECK(parse("1 1 2\n10\n01").d == 2); // no trailing newline
  CHECK_THROWS_AS(parse("1 1\n10\n01\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("x 1 2\n10\n01\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("1 1 2\n10\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("1 1 2\n10\n011\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("1 1 2\n10\n01\n11\n"), std::invalid_argument);
}
