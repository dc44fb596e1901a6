#include <doctest.h>

#include <map>
#include <set>

#include "twisth/io.hpp"
#include "twisth/matching.hpp"

using namespace twisth;

namespace {

MatchingSeq ms_from(int n, const std::vector<std::string>& texts) {
  MatchingSeq ms{n, {}};
  for (const auto& t : texts) ms.deltas.emplace_back(parse_permutation(t, n));
  return ms;
}

std::vector<TranspositionSeq> factorizations(int m, const Partition& lambda) {
  std::vector<TranspositionSeq> out;
  enumerate_factorizations(m, lambda, [&](const TranspositionSeq& ts) { out.push_back(ts); });
  return out;
}

}  // namespace

TEST_CASE("chain_step_shape") {
  CHECK(chain_step_shape(2) == Partition({2}));
  CHECK(chain_step_shape(3) == Partition({2, 1}));
  CHECK(chain_step_shape(4) == Partition({2, 1, 1}));
  // for n < 2 no step can have the right shape; the sentinel matches nothing
  CHECK(chain_step_shape(1).parts().empty());
}

TEST_CASE("p_map worked example") {
  TranspositionSeq ts{2, {Transposition(1, 2)}};
  MatchingSeq ms = p_map(ts);
  REQUIRE(ms.m() == 1);
  CHECK(ms.delta(-1).perm() == Permutation::negation(2));
  CHECK(to_cycle_string(ms.delta(0).perm()) == "(1 -2)(-1 2)");

  // the negated sequence collapses onto the same image
  TranspositionSeq ts_neg{2, {Transposition(-1, -2)}};
  CHECK(p_map(ts_neg) == ms);
}

TEST_CASE("p_map image is always a valid matching sequence") {
  for (int n = 2; n <= 3; ++n) {
    for (int m = 0; m <= 2; ++m) {
      for (const auto& lambda : partitions_of(n)) {
        for (const auto& ts : factorizations(m, lambda)) {
          MatchingSeq ms = p_map(ts);
          CHECK(ms.m() == m);
          auto report = validate_matching_seq(ms, lambda);
          CHECK(report.pass());
          CHECK(report.profile == lambda);
        }
      }
    }
  }
}

TEST_CASE("validate_matching_seq flags each broken condition") {
  // valid n=2, m=1 sequence
  MatchingSeq good = ms_from(2, {"(1 -1)(2 -2)", "(1 -2)(-1 2)"});
  CHECK(is_valid_matching_seq(good));

  // wrong head
  MatchingSeq bad_head = ms_from(2, {"(1 -2)(-1 2)", "(1 -1)(2 -2)"});
  CHECK_FALSE(validate_matching_seq(bad_head, Partition({2})).starts_with_tau);

  // repeated delta: the step Lambda is [1^n], not [2, 1^{n-2}]
  MatchingSeq stalled = ms_from(2, {"(1 -1)(2 -2)", "(1 -1)(2 -2)"});
  auto report = validate_matching_seq(stalled, Partition({2}));
  CHECK(report.starts_with_tau);
  REQUIRE(report.step_ok.size() == 1);
  CHECK_FALSE(report.step_ok[0]);
  CHECK_FALSE(report.pass());

  // right steps, wrong target profile
  auto wrong_profile = validate_matching_seq(good, Partition({1, 1}));
  CHECK(wrong_profile.step_ok[0]);
  CHECK_FALSE(wrong_profile.profile_ok);
  CHECK(wrong_profile.profile == Partition({2}));
}

TEST_CASE("preimages round-trip and are distinct") {
  for (int n = 2; n <= 3; ++n) {
    for (int m = 0; m <= 2; ++m) {
      for (const auto& lambda : partitions_of(n)) {
        enumerate_matching_seqs(m, lambda, [&](const MatchingSeq& ms) {
          auto pre = p_preimages(ms);
          CHECK(pre.size() == (std::uint64_t{1} << m));
          std::set<std::vector<Transposition>> distinct;
          for (const auto& ts : pre) {
            CHECK(p_map(ts) == ms);
            for (const auto& t : ts.seq) CHECK(t.admissible());
            distinct.insert(ts.seq);
          }
          CHECK(distinct.size() == pre.size());
        });
      }
    }
  }
}

TEST_CASE("preimage fibers partition the factorization set") {
  // group factorizations by image; every fiber must equal p_preimages(image)
  for (const auto& lambda : partitions_of(3)) {
    for (int m = 0; m <= 2; ++m) {
      std::map<std::string, std::set<std::vector<Transposition>>> fibers;
      for (const auto& ts : factorizations(m, lambda))
        fibers[matching_seq_to_json(p_map(ts))].insert(ts.seq);
      std::uint64_t covered = 0;
      enumerate_matching_seqs(m, lambda, [&](const MatchingSeq& ms) {
        std::set<std::vector<Transposition>> expected;
        for (const auto& ts : p_preimages(ms)) expected.insert(ts.seq);
        auto it = fibers.find(matching_seq_to_json(ms));
        REQUIRE(it != fibers.end());
        CHECK(it->second == expected);
        covered += it->second.size();
      });
      CHECK(covered == factorizations(m, lambda).size());
    }
  }
}

TEST_CASE("preimage branch order: branch 0 first, earliest step most significant") {
  MatchingSeq ms = p_map(TranspositionSeq{2, {Transposition(1, 2), Transposition(1, -2)}});
  auto pre = p_preimages(ms);
  REQUIRE(pre.size() == 4);
  // flipping the last branch bit toggles fastest
  CHECK(pre[0].seq[0] == pre[1].seq[0]);
  CHECK(pre[0].seq[1] != pre[1].seq[1]);
  CHECK(pre[0].seq[0] != pre[2].seq[0]);
  // with identical prefixes, branch 1 negates the branch-0 entry at that step
  CHECK(pre[1].seq[1] == Transposition(-pre[0].seq[1].a, -pre[0].seq[1].b));
  CHECK(pre[2].seq[0] == Transposition(-pre[0].seq[0].a, -pre[0].seq[0].b));
}

TEST_CASE("p_preimages rejects invalid input") {
  CHECK_THROWS_AS(p_preimages(ms_from(2, {"(1 -1)(2 -2)", "(1 -1)(2 -2)"})),
                  std::invalid_argument);
}

TEST_CASE("matching counts are factorization counts over 2^m") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& lambda : partitions_of(n)) {
        std::uint64_t raw = hurwitz_number(m, lambda).raw_count;
        std::uint64_t msc = count_matching_seqs(m, lambda);
        CHECK(raw == msc << m);
      }
    }
  }
}

TEST_CASE("enumerate_matching_seqs order is deterministic") {
  std::vector<std::string> first, second;
  for (int round = 0; round < 2; ++round) {
    auto& out = round == 0 ? first : second;
    enumerate_matching_seqs(2, Partition({2}),
                            [&](const MatchingSeq& ms) { out.push_back(matching_seq_to_json(ms)); });
  }
  CHECK(first == second);
  CHECK(std::set<std::string>(first.begin(), first.end()).size() == first.size());
}
