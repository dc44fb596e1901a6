#pragma once

#include <functional>
#include <vector>

#include "twisth/factorization.hpp"
#include "twisth/perm.hpp"

namespace twisth {

// Pair-matching sequence (delta_-1 = tau, delta_0, ..., delta_{m-1}).
// External indices run -1 .. m-1; deltas[k+1] holds delta_k.
struct MatchingSeq {
  int n = 0;
  std::vector<PairMatching> deltas;

  int m() const { return static_cast<int>(deltas.size()) - 1; }
  const PairMatching& delta(int k) const { return deltas[static_cast<std::size_t>(k + 1)]; }

  bool operator==(const MatchingSeq&) const = default;
};

// Per-condition validation against a target profile lambda.
struct MatchingSeqReport {
  bool starts_with_tau = false;
  std::vector<bool> step_ok;   // Lambda(delta_k, delta_{k+1}) == [2, 1^{n-2}], k = -1..m-2
  bool profile_ok = false;     // Lambda(tau, delta_{m-1}) == lambda
  Partition profile;           // the actual Lambda(tau, delta_{m-1})

  bool pass() const;
};

// The chain-step shape [2, 1^{n-2}].
Partition chain_step_shape(int n);

// delta_k = (tau x_{k+1}) tau (tau x_{k+1})^{-1}, plus delta_-1 = tau.
MatchingSeq p_map(const TranspositionSeq& ts);

MatchingSeqReport validate_matching_seq(const MatchingSeq& ms, const Partition& lambda);

// True iff ms satisfies the chain conditions for its own profile
// Lambda(tau, delta_{m-1}).
bool is_valid_matching_seq(const MatchingSeq& ms);

// All 2^m preimages of a valid matching sequence under p_map, ordered by the
// binary branch-choice vector (first preimage formula = 0, second = 1),
// earliest step most significant.
std::vector<TranspositionSeq> p_preimages(const MatchingSeq& ms);

// Every valid matching sequence with the given profile, deterministic order.
void enumerate_matching_seqs(int m, const Partition& lambda,
                             const std::function<void(const MatchingSeq&)>& fn);

std::uint64_t count_matching_seqs(int m, const Partition& lambda);

}  // namespace twisth
