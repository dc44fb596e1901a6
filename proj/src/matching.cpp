#include "twisth/matching.hpp"

#include <algorithm>

namespace twisth {

bool MatchingSeqReport::pass() const {
  if (!starts_with_tau || !profile_ok) return false;
  return std::all_of(step_ok.begin(), step_ok.end(), [](bool b) { return b; });
}

Partition chain_step_shape(int n) {
  if (n < 2) return Partition();  // no such shape; nothing validates against it
  std::vector<int> parts(static_cast<std::size_t>(n - 1), 1);
  parts[0] = 2;
  return Partition(std::move(parts));
}

MatchingSeq p_map(const TranspositionSeq& ts) {
  Permutation tau = Permutation::negation(ts.n);
  MatchingSeq ms{ts.n, {PairMatching::tau(ts.n)}};
  Permutation x(ts.n);
  for (const auto& t : ts.seq) {
    if (!t.admissible()) throw std::invalid_argument("inadmissible transposition (i, -i)");
    x = compose(x, t.as_permutation(ts.n));
    ms.deltas.emplace_back(conjugate(tau, compose(tau, x)));
  }
  return ms;
}

MatchingSeqReport validate_matching_seq(const MatchingSeq& ms, const Partition& lambda) {
  if (lambda.weight() != ms.n)
    throw std::invalid_argument("partition weight must equal the ground-set size");
  if (ms.deltas.empty()) throw std::invalid_argument("matching sequence missing delta_-1");
  for (const auto& d : ms.deltas)
    if (d.n() != ms.n) throw std::invalid_argument("matching entry with wrong ground size");

  MatchingSeqReport report;
  report.starts_with_tau = ms.delta(-1) == PairMatching::tau(ms.n);
  Partition step = chain_step_shape(ms.n);
  for (int k = -1; k <= ms.m() - 2; ++k)
    report.step_ok.push_back(lambda_of(ms.delta(k), ms.delta(k + 1)) == step);
  report.profile = lambda_of(PairMatching::tau(ms.n), ms.delta(ms.m() - 1));
  report.profile_ok = report.profile == lambda;
  return report;
}

bool is_valid_matching_seq(const MatchingSeq& ms) {
  if (ms.deltas.empty() || ms.delta(-1) != PairMatching::tau(ms.n)) return false;
  Partition step = chain_step_shape(ms.n);
  for (int k = -1; k <= ms.m() - 2; ++k)
    if (lambda_of(ms.delta(k), ms.delta(k + 1)) != step) return false;
  return true;
}

namespace {

// The two moved pairs of delta_{k-1} * delta_k; exactly two 2-cycles plus
// fixed points, or the step condition is violated.
struct MovedPairs {
  int a, b, c, d;
};

MovedPairs moved_pairs(const Permutation& pi) {
  std::vector<std::vector<int>> two_cycles;
  for (const auto& cyc : cycles_of(pi)) {
    if (cyc.size() == 1) continue;
    if (cyc.size() != 2) throw std::invalid_argument("chain step is not a pair of 2-cycles");
    two_cycles.push_back(cyc);
  }
  if (two_cycles.size() != 2) throw std::invalid_argument("chain step is not a pair of 2-cycles");
  return MovedPairs{two_cycles[0][0], two_cycles[0][1], two_cycles[1][0], two_cycles[1][1]};
}

void preimage_dfs(const MatchingSeq& ms, int k, const Permutation& xk,
                  std::vector<Transposition>& seq, std::vector<TranspositionSeq>& out) {
  if (k == ms.m()) {
    out.push_back(TranspositionSeq{ms.n, seq});
    return;
  }
  Permutation tau = Permutation::negation(ms.n);
  Permutation pi = compose(ms.delta(k - 1).perm(), ms.delta(k).perm());
  MovedPairs mp = moved_pairs(pi);

  // branch 0: (i,j) = (x_k^{-1} tau (a), x_k^{-1} tau (b))
  // branch 1: (i,j) = (tau x_k^{-1} tau (a), tau x_k^{-1} tau (b))
  Permutation xk_inv_tau = compose(xk.inverse(), tau);
  int i0 = xk_inv_tau.apply(mp.a), j0 = xk_inv_tau.apply(mp.b);
  int i1 = -i0, j1 = -j0;

  Transposition t0(i0, j0), t1(i1, j1);
  if (t0 == t1) throw std::logic_error("preimage branches coincide");

  for (const Transposition& t : {t0, t1}) {
    if (!t.admissible()) throw std::logic_error("preimage branch produced (i, -i)");
    Permutation xk1 = compose(xk, t.as_permutation(ms.n));
    if (conjugate(tau, compose(tau, xk1)) != ms.delta(k).perm())
      throw std::logic_error("preimage branch fails to reproduce delta_k");
    seq.push_back(t);
    preimage_dfs(ms, k + 1, xk1, seq, out);
    seq.pop_back();
  }
}

}  // namespace

std::vector<TranspositionSeq> p_preimages(const MatchingSeq& ms) {
  if (!is_valid_matching_seq(ms))
    throw std::invalid_argument("matching sequence violates the chain conditions");
  std::vector<TranspositionSeq> out;
  std::vector<Transposition> seq;
  preimage_dfs(ms, 0, Permutation(ms.n), seq, out);
  return out;
}

namespace {

void matching_dfs(int m, const Partition& lambda, const std::vector<PairMatching>& pool,
                  const Partition& step, std::vector<PairMatching>& cur,
                  const std::function<void(const MatchingSeq&)>& fn) {
  int n = lambda.weight();
  if (static_cast<int>(cur.size()) - 1 == m) {
    if (lambda_of(PairMatching::tau(n), cur.back()) == lambda) fn(MatchingSeq{n, cur});
    return;
  }
  for (const auto& d : pool) {
    if (lambda_of(cur.back(), d) != step) continue;
    cur.push_back(d);
    matching_dfs(m, lambda, pool, step, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

void enumerate_matching_seqs(int m, const Partition& lambda,
                             const std::function<void(const MatchingSeq&)>& fn) {
  int n = lambda.weight();
  if (n < 1) throw std::invalid_argument("lambda must have positive weight");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  auto pool = all_pair_matchings(n);
  Partition step = chain_step_shape(n);
  std::vector<PairMatching> cur{PairMatching::tau(n)};
  matching_dfs(m, lambda, pool, step, cur, fn);
}

std::uint64_t count_matching_seqs(int m, const Partition& lambda) {
  std::uint64_t count = 0;
  enumerate_matching_seqs(m, lambda, [&](const MatchingSeq&) { count = checked_add(count, 1); });
  return count;
}

}  // namespace twisth
