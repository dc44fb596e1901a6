#include "twisth/factorization.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace twisth {

Transposition::Transposition(int x, int y) : a(x), b(y) {
  if (x == y) throw std::invalid_argument("transposition entries must differ");
  if (label_rank(a) > label_rank(b)) std::swap(a, b);
}

std::vector<Transposition> valid_transpositions(int n) {
  if (n < 1) throw std::invalid_argument("ground-set size must be >= 1");
  std::vector<Transposition> out;
  for (int r = 0; r < 2 * n; ++r) {
    for (int s = r + 1; s < 2 * n; ++s) {
      int a = label_from_rank(r), b = label_from_rank(s);
      if (b == -a) continue;
      out.emplace_back(a, b);
    }
  }
  return out;
}

Permutation twisted_product(const TranspositionSeq& ts) {
  Permutation x(ts.n);
  for (const auto& t : ts.seq) {
    if (!t.admissible()) throw std::invalid_argument("inadmissible transposition (i, -i)");
    x = compose(x, t.as_permutation(ts.n));
  }
  Permutation tau = Permutation::negation(ts.n);
  return compose(x, conjugate(x.inverse(), tau));
}

namespace {

struct DfsState {
  int n;
  int m;
  const std::vector<Transposition>* pool;
  std::vector<Transposition> seq;
  std::vector<Permutation> prefix;  // prefix[k] = x_k; prefix[0] = id
};

// Visits every admissible sequence extending the current prefix, calling
// `leaf` with the completed sequence and its prefix product x_m.
void dfs(DfsState& st, const std::function<void(const TranspositionSeq&, const Permutation&)>& leaf) {
  int depth = static_cast<int>(st.seq.size());
  if (depth == st.m) {
    leaf(TranspositionSeq{st.n, st.seq}, st.prefix.back());
    return;
  }
  for (const auto& t : *st.pool) {
    st.seq.push_back(t);
    st.prefix.push_back(compose(st.prefix.back(), t.as_permutation(st.n)));
    dfs(st, leaf);
    st.prefix.pop_back();
    st.seq.pop_back();
  }
}

// Runs the enumeration sharded by first entry; `shard_leaf(i, ts, xm)` sees
// the leaves of the subtree rooted at pool[i], each shard on one worker.
// Shard results must be merged by index to restore canonical order.
void sharded_dfs(int n, int m, int workers,
                 const std::function<void(int, const TranspositionSeq&, const Permutation&)>& shard_leaf) {
  auto pool = valid_transpositions(n);
  if (m == 0) {
    shard_leaf(0, TranspositionSeq{n, {}}, Permutation(n));
    return;
  }
  auto run_shard = [&](int i) {
    DfsState st{n, m, &pool, {}, {Permutation(n)}};
    st.seq.push_back(pool[static_cast<std::size_t>(i)]);
    st.prefix.push_back(pool[static_cast<std::size_t>(i)].as_permutation(n));
    dfs(st, [&](const TranspositionSeq& ts, const Permutation& xm) { shard_leaf(i, ts, xm); });
  };
  int shards = static_cast<int>(pool.size());
  if (workers <= 1) {
    for (int i = 0; i < shards; ++i) run_shard(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool_threads;
  for (int w = 0; w < std::min(workers, shards); ++w) {
    pool_threads.emplace_back([&] {
      for (int i = next.fetch_add(1); i < shards; i = next.fetch_add(1)) run_shard(i);
    });
  }
  for (auto& th : pool_threads) th.join();
}

Permutation twisted_from_prefix(const Permutation& xm) {
  Permutation tau = Permutation::negation(xm.n());
  return compose(xm, conjugate(xm.inverse(), tau));
}

}  // namespace

void enumerate_factorizations(int m, const Partition& lambda,
                              const std::function<void(const TranspositionSeq&)>& fn,
                              int workers) {
  int n = lambda.weight();
  if (n < 1) throw std::invalid_argument("lambda must have positive weight");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  int shards = m == 0 ? 1 : 2 * n * (n - 1);
  std::vector<std::vector<TranspositionSeq>> buckets(static_cast<std::size_t>(std::max(shards, 1)));
  sharded_dfs(n, m, workers, [&](int i, const TranspositionSeq& ts, const Permutation& xm) {
    if (is_twisted_class_member(twisted_from_prefix(xm), lambda))
      buckets[static_cast<std::size_t>(i)].push_back(ts);
  });
  for (const auto& bucket : buckets)
    for (const auto& ts : bucket) fn(ts);
}

FactorizationCount hurwitz_number(int m, const Partition& lambda, int workers) {
  int n = lambda.weight();
  std::uint64_t raw = 0;
  {
    // Counting is a pure reduction; shard totals are summed in index order.
    int shards = m == 0 ? 1 : 2 * n * (n - 1);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(std::max(shards, 1)), 0);
    sharded_dfs(n, m, workers, [&](int i, const TranspositionSeq&, const Permutation& xm) {
      if (is_twisted_class_member(twisted_from_prefix(xm), lambda))
        partial[static_cast<std::size_t>(i)] += 1;
    });
    for (std::uint64_t c : partial) raw = checked_add(raw, c);
  }
  return FactorizationCount{raw, n, Rational(raw, factorial(n))};
}

std::uint64_t CycleTypeCounts::total() const {
  std::uint64_t t = none;
  for (const auto& [k, v] : by_type) t = checked_add(t, v);
  return t;
}

CycleTypeCounts count_by_cycle_type(int m, int n, int workers) {
  if (n < 1) throw std::invalid_argument("ground-set size must be >= 1");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  CycleTypeCounts counts;
  for (const auto& mu : partitions_of(n)) counts.by_type[mu] = 0;
  int shards = m == 0 ? 1 : 2 * n * (n - 1);
  struct Tally {
    std::map<Partition, std::uint64_t> by_type;
    std::uint64_t none = 0;
  };
  std::vector<Tally> partial(static_cast<std::size_t>(std::max(shards, 1)));
  sharded_dfs(n, m, workers, [&](int i, const TranspositionSeq&, const Permutation& xm) {
    auto half = twisted_half_type(twisted_from_prefix(xm));
    auto& tally = partial[static_cast<std::size_t>(i)];
    if (half)
      tally.by_type[*half] += 1;
    else
      tally.none += 1;
  });
  for (const auto& tally : partial) {
    counts.none = checked_add(counts.none, tally.none);
    for (const auto& [mu, c] : tally.by_type)
      counts.by_type[mu] = checked_add(counts.by_type[mu], c);
  }
  return counts;
}

}  // namespace twisth
