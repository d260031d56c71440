// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "episode/reduction.hpp"
#include "episode/subsequence.hpp"
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
  return inst;
}

BitVector from_code(std::size_t code, std::size_t d)
{
  BitVector v(d);
  for (std::size_t k = 0; k < d; ++k)
    v.set(k, (code >> k) & 1);
  return v;
}

std::size_t episode_of(const ReductionInstance& r)
{
  const auto w = oracle::shortest_window(r.S.view(), r.P.view());
  REQUIRE(w.has_value());
  return w->length;
}

} // namespace

TEST_CASE("alphabet-4 gadgets")
{
  CHECK(coord_gadget_four(false).str() == "01");
  CHECK(coord_gadget_four(true).str() == "00");
  CHECK(s_gadget_four(bv("10001")).str() == "00x01x01x01x00");
  CHECK(s_gadget_four(bv("000")).str() == "01x01x01");
  CHECK(s_gadget_four(bv("11011")).size() == 14);
  CHECK(p_gadget_four(bv("0")).str() == "0");
  CHECK(p_gadget_four(bv("01010")).str() == "0x1x0x1x0");
  CHECK(p_gadget_four(bv("11111")).size() == 9);
}

TEST_CASE("binary gadgets")
{
  CHECK(p_gadget_binary(bv("10")).str() == "00100000");
  CHECK(p_gadget_binary(bv("01")).size() == 8);
  CHECK(p_gadget_binary(bv("1")).str() == "010");
  CHECK(s_gadget_binary(bv("10")).str() == "0000000100");
  CHECK(s_gadget_binary(bv("11")).size() == 10);
  CHECK(s_gadget_binary(bv("0")).str() == "0010");
  for (std::size_t d = 1; d <= 6; ++d) {
    CHECK(p_gadget_binary(BitVector(d)).size() == (d + 2) * d);
    CHECK(s_gadget_binary(BitVector(d)).size() == (d + 3) * d);
    CHECK(p_gadget_four(BitVector(d)).size() == 2 * d - 1);
    CHECK(s_gadget_four(BitVector(d)).size() == 3 * d - 1);
  }
}

TEST_CASE("lemma_check")
{
  CHECK(lemma_check(bv("10001"), bv("01010"), AlphabetKind::Four));
  for (AlphabetKind kind : {AlphabetKind::Four, AlphabetKind::Binary}) {
    CHECK_FALSE(lemma_check(bv("1"), bv("1"), kind));
    CHECK(lemma_check(bv("000"), bv("101"), kind));
    CHECK_THROWS_AS(lemma_check(bv("10"), bv("100"), kind), std::invalid_argument);
  }
}

TEST_CASE("lemma holds exhaustively for d <= 4")
{
  for (AlphabetKind kind : {AlphabetKind::Four, AlphabetKind::Binary}) {
    for (std::size_t d = 1; d <= 4; ++d) {
      for (std::size_t ca = 0; ca < (1u << d); ++ca) {
        for (std::size_t cb = 0; cb < (1u << d); ++cb) {
          const BitVector a = from_code(ca, d);
          const BitVector b = from_code(cb, d);
          const bool embeds = oracle::embeds(p_gadget(kind, b).view(), s_gadget(kind, a).view());
          CHECK(embeds == oracle::orthogonal(a.to_string(), b.to_string()));
          CHECK(lemma_check(a, b, kind) == embeds);
        }
      }
    }
  }
}

TEST_CASE("expected geometry")
{
  const auto four = expected_geometry(AlphabetKind::Four, 2, 2, 2);
  CHECK(four.pattern_length == 9);
  CHECK(four.text_length == 55);
  CHECK(four.threshold == 19);
  CHECK(four.block_count == 9);
  const auto binary = expected_geometry(AlphabetKind::Binary, 2, 2, 2);
  CHECK(binary.text_length == 120);
  CHECK(binary.pattern_length == 25);
  CHECK(binary.baseline_window == 42);
  CHECK(binary.threshold == 38);
  CHECK(binary.block_length == 13);
}

TEST_CASE("build_four")
{
  const auto r = build_four(instance({"10", "01"}, {"01", "10"}));
  CHECK(r.P.str() == "$0x1$1x0$");
  CHECK(r.S.str().substr(0, 13) == "$01x01$00x01$");
  CHECK(r.S.size() == 55);
  CHECK(r.P.size() == 9);
  CHECK(r.threshold == 19);
  CHECK(count_blocks(r) == 9);
  CHECK(geometry_violations(r, instance({"10", "01"}, {"01", "10"})).empty());

  // Frozen from the window oracle.
  CHECK(episode_of(r) == 13);
  CHECK(decide_with_length(r, Solver::dp).episode_length == 13);
  for (Solver s : all_solvers)
    CHECK(decide_via_episode(r, s));

  const auto no = build_four(instance({"11", "11"}, {"11", "11"}));
  CHECK(episode_of(no) == 19);
  for (Solver s : all_solvers) {
    CHECK(decide_with_length(no, s).episode_length == 19);
    CHECK_FALSE(decide_via_episode(no, s));
  }
}

TEST_CASE("build_binary")
{
  const auto yes_inst = instance({"10", "01"}, {"01", "10"});
  const auto r = build_binary(yes_inst);
  CHECK(r.S.size() == 120);
  CHECK(r.P.size() == 25);
  CHECK(r.threshold == 38);
  CHECK(r.P.str().substr(0, 3) == "111");
  CHECK(count_blocks(r) == 9);
  CHECK(geometry_violations(r, yes_inst).empty());
  CHECK(episode_of(r) == 29);
  for (Solver s : all_solvers) {
    CHECK(decide_with_length(r, s).episode_length <= 42 - 13);
    CHECK(decide_via_episode(r, s));
  }

  const auto no = build_binary(instance({"11", "11"}, {"11", "11"}));
  const std::size_t length = episode_of(no);
  CHECK(length == 41);
  for (Solver s : all_solvers) {
    CHECK(decide_with_length(no, s).episode_length == length);
    CHECK_FALSE(decide_via_episode(no, s));
  }
}

TEST_CASE("builders enforce preconditions")
{
  CHECK_THROWS_AS(build_four(instance({"10", "01"}, {"01"})), std::invalid_argument);
  CHECK_THROWS_AS(build_binary(instance({"10"}, {"01", "10"})), std::invalid_argument);
  CHECK_THROWS_AS(build_four(instance({"10", "01"}, {"01", "100"})), std::invalid_argument);
}

TEST_CASE("geometry checker catches tampering")
{
  const auto inst = instance({"10", "01", "11"}, {"01", "10"});
  for (AlphabetKind kind : {AlphabetKind::Four, AlphabetKind::Binary}) {
    auto r = build_reduction(kind, inst);
    REQUIRE(geometry_violations(r, inst).empty());

    auto bad_threshold = r;
    --bad_threshold.threshold;
    CHECK_FALSE(geometry_violations(bad_threshold, inst).empty());

    // Same length, swapped a_1 and a_2 in the first copy.
    auto swapped = inst;
    std::swap(swapped.A[0], swapped.A[1]);
    CHECK_FALSE(geometry_violations(r, swapped).empty());
  }
}

TEST_CASE("decide_via_episode rejects a pattern that cannot embed")
{
  auto r = build_four(instance({"10", "01"}, {"01", "10"}));
  r.P = Text(AlphabetKind::Four, "$$$$$$$$$$$$$$$$$$$$$$$$$$$$$$$$");
  CHECK_THROWS_AS(decide_via_episode(r, Solver::dp), invariant_error);
}

TEST_CASE("verify_equivalence, exhaustive n = m = 2, d = 2")
{
  std::size_t passed = 0;
  for (std::size_t code = 0; code < 256; ++code) {
    OvInstance inst;
    inst.d = 2;
    inst.A = {from_code(code & 3, 2), from_code((code >> 2) & 3, 2)};
    inst.B = {from_code((code >> 4) & 3, 2), from_code((code >> 6) & 3, 2)};
    const auto report = verify_equivalence(inst);
    CHECK(report.runs.size() == 6);
    passed += report.passed;
    for (const auto& f : report.failures)
      MESSAGE(f);
  }
  CHECK(passed == 256);
}

TEST_CASE("verify_equivalence on generated instances")
{
  const auto yes = verify_equivalence(generate_instance(5, 3, 4, true, 3));
  CHECK(yes.passed);
  CHECK(yes.ov_decision);
  const auto no = verify_equivalence(generate_instance(5, 3, 4, false, 3));
  CHECK(no.passed);
  CHECK_FALSE(no.ov_decision);

  VerifyOptions concurrent;
  concurrent.concurrent = true;
  const auto yes_again = verify_equivalence(generate_instance(5, 3, 4, true, 3), concurrent);
  CHECK(yes_again.passed);
  REQUIRE(yes_again.runs.size() == yes.runs.size());
  for (std::size_t i = 0; i < yes.runs.size(); ++i)
    CHECK(yes_again.runs[i].episode_length == yes.runs[i].episode_length);
}

TEST_CASE("verify_equivalence negative control")
{
  VerifyOptions corrupted;
  corrupted.threshold_offset = -1;
  const auto report = verify_equivalence(generate_instance(4, 2, 3, false, 17), corrupted);
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.failures.empty());
}

TEST_CASE("verify_equivalence reports rather than throws")
{
  const auto report = verify_equivalence(instance({"10"}, {"01", "10"}));
  CHECK_FALSE(report.passed);
  REQUIRE_FALSE(report.failures.empty());
}
