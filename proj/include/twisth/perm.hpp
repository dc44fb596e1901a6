#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace twisth {

// Signed ground set {-n,...,-1,1,...,n}. The label -k encodes the barred
// element paired with k; the pairing involution tau is plain negation.
//
// Labels are ordered by rank: 1 < -1 < 2 < -2 < ... ; ranks index the
// image tables and fix every canonical ordering in the project.
inline int label_rank(int label) {
  if (label == 0) throw std::invalid_argument("signed label must be nonzero");
  int a = label > 0 ? label : -label;
  return 2 * (a - 1) + (label < 0 ? 1 : 0);
}

inline int label_from_rank(int rank) {
  int a = rank / 2 + 1;
  return (rank % 2) ? -a : a;
}

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // e.g. Partition::ones(3) == (1,1,1)
  static Partition ones(int n);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& other) const { return parts_ < other.parts_; }

 private:
  std::vector<int> parts_;  // weakly decreasing, all >= 1
};

// All partitions of n, in a fixed (reverse-lexicographic) order.
std::vector<Partition> partitions_of(int n);

// A permutation of the 2n signed labels, stored as a total image table
// indexed by rank.
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  Permutation(int n, std::vector<int> images_by_rank);

  int n() const { return n_; }
  int domain_size() const { return 2 * n_; }

  int apply(int label) const { return img_[label_rank(label)]; }
  int operator()(int label) const { return apply(label); }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;
  bool is_fixed_point_free() const;

  // Single transposition (a b); a != b required, admissibility not implied.
  static Permutation transposition(int n, int a, int b);
  // tau = (1 -1)(2 -2)...(n -n), the negation map.
  static Permutation negation(int n);

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& other) const { return img_ < other.img_; }

 private:
  int n_ = 0;
  std::vector<int> img_;
};

// (p*q)(x) = p(q(x)); the global composition convention.
Permutation compose(const Permutation& p, const Permutation& q);

// g p g^{-1}
Permutation conjugate(const Permutation& p, const Permutation& g);

// Disjoint cycles in canonical form: each cycle starts at its minimal-rank
// label, cycles sorted by that rank. Fixed points included as 1-cycles.
std::vector<std::vector<int>> cycles_of(const Permutation& p);

// Multiset of cycle lengths (fixed points included), weakly decreasing.
Partition cycle_type(const Permutation& p);

// Fixed-point-free involution on the signed ground set; a perfect matching
// of the 2n labels.
class PairMatching {
 public:
  explicit PairMatching(Permutation p);

  static PairMatching tau(int n) { return PairMatching(Permutation::negation(n)); }

  int n() const { return perm_.n(); }
  int apply(int label) const { return perm_.apply(label); }
  int operator()(int label) const { return perm_.apply(label); }
  const Permutation& perm() const { return perm_; }

  bool operator==(const PairMatching&) const = default;
  bool operator<(const PairMatching& other) const { return perm_ < other.perm_; }

 private:
  Permutation perm_;
};

// All pair matchings on the 2n labels ((2n-1)!! of them), canonical order.
std::vector<PairMatching> all_pair_matchings(int n);

// The partition Lambda(d1,d2): cycles of d1*d2 pair off as (c, d1 c^{-1} d1);
// one representative length per pair, weight n.
Partition lambda_of(const PairMatching& d1, const PairMatching& d2);

// The partition mu such that sigma lies in the twisted class B_mu~, if any:
// tau-conjugation must invert sigma, the cycles must pair off as
// (c, tau c^{-1} tau) with every cycle paired to a distinct one, and mu is
// the multiset of pair half-lengths.
std::optional<Partition> twisted_half_type(const Permutation& sigma);

// Membership in B_lambda~.
bool is_twisted_class_member(const Permutation& sigma, const Partition& lambda);

// The hyperoctahedral group B_n: signed permutations, i.e. the centralizer
// of tau in S_2n. Yields all 2^n * n! elements in a fixed order.
void for_each_hyperoctahedral(int n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> hyperoctahedral_elements(int n);

}  // namespace twisth
