#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "twisth/perm.hpp"
#include "twisth/rational.hpp"

namespace twisth {

// Unordered pair {a, b} of signed labels, stored with rank(a) < rank(b).
// Admissible as a factor iff b != -a.
struct Transposition {
  int a = 0;
  int b = 0;

  Transposition(int x, int y);

  bool admissible() const { return b != -a; }
  Permutation as_permutation(int n) const { return Permutation::transposition(n, a, b); }

  bool operator==(const Transposition&) const = default;
  auto operator<=>(const Transposition& other) const {
    if (auto c = label_rank(a) <=> label_rank(other.a); c != 0) return c;
    return label_rank(b) <=> label_rank(other.b);
  }
};

struct TranspositionSeq {
  int n = 0;
  std::vector<Transposition> seq;

  int m() const { return static_cast<int>(seq.size()); }
  bool operator==(const TranspositionSeq&) const = default;
};

// All admissible transpositions on the signed ground set, canonical order;
// exactly 2n(n-1) of them.
std::vector<Transposition> valid_transpositions(int n);

// sigma_1 ... sigma_m (tau sigma_m tau) ... (tau sigma_1 tau)
//   = x_m * tau * x_m^{-1} * tau  with x_m the prefix product.
// The result always satisfies tau * result * tau = result^{-1}.
Permutation twisted_product(const TranspositionSeq& ts);

// Admissible sequences whose twisted product lies in B_lambda~, yielded in
// lexicographic order over the canonical transposition list. Sharding by
// first entry keeps the stream deterministic for any worker count.
void enumerate_factorizations(int m, const Partition& lambda,
                              const std::function<void(const TranspositionSeq&)>& fn,
                              int workers = 1);

struct FactorizationCount {
  std::uint64_t raw_count = 0;
  int weight = 0;                 // n = |lambda|
  Rational value;                 // raw_count / n!, exact
};

FactorizationCount hurwitz_number(int m, const Partition& lambda, int workers = 1);

// Raw counts for every lambda |- n in one exhaustive pass; sequences whose
// twisted product lies in no B_lambda~ land in the `none` bucket. The grand
// total is (2n(n-1))^m.
struct CycleTypeCounts {
  std::map<Partition, std::uint64_t> by_type;
  std::uint64_t none = 0;

  std::uint64_t total() const;
};

CycleTypeCounts count_by_cycle_type(int m, int n, int workers = 1);

}  // namespace twisth
