#include "twisth/perm.hpp"

#include <algorithm>
#include <numeric>

namespace twisth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::ones(int n) {
  if (n < 0) throw std::invalid_argument("negative partition weight");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Permutation::Permutation(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ground-set size must be >= 1");
  img_.resize(static_cast<std::size_t>(2 * n));
  for (int r = 0; r < 2 * n; ++r) img_[static_cast<std::size_t>(r)] = label_from_rank(r);
}

Permutation::Permutation(int n, std::vector<int> images_by_rank)
    : n_(n), img_(std::move(images_by_rank)) {
  if (n < 1) throw std::invalid_argument("ground-set size must be >= 1");
  if (img_.size() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("image table has wrong size");
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x == 0 || x > n || x < -n) throw std::invalid_argument("image out of range");
    int r = label_rank(x);
    if (seen[static_cast<std::size_t>(r)]) throw std::invalid_argument("images not a bijection");
    seen[static_cast<std::size_t>(r)] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int r = 0; r < 2 * n_; ++r)
    inv[static_cast<std::size_t>(label_rank(img_[static_cast<std::size_t>(r)]))] =
        label_from_rank(r);
  return Permutation(n_, std::move(inv));
}

bool Permutation::is_identity() const {
  for (int r = 0; r < 2 * n_; ++r)
    if (img_[static_cast<std::size_t>(r)] != label_from_rank(r)) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int r = 0; r < 2 * n_; ++r) {
    int x = label_from_rank(r);
    if (apply(apply(x)) != x) return false;
  }
  return true;
}

bool Permutation::is_fixed_point_free() const {
  for (int r = 0; r < 2 * n_; ++r)
    if (img_[static_cast<std::size_t>(r)] == label_from_rank(r)) return false;
  return true;
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a == b) throw std::invalid_argument("transposition entries must differ");
  Permutation p(n);
  if (label_rank(a) >= 2 * n || label_rank(b) >= 2 * n)
    throw std::invalid_argument("transposition entry out of range");
  p.img_[static_cast<std::size_t>(label_rank(a))] = b;
  p.img_[static_cast<std::size_t>(label_rank(b))] = a;
  return p;
}

Permutation Permutation::negation(int n) {
  Permutation p(n);
  for (int r = 0; r < 2 * n; ++r) p.img_[static_cast<std::size_t>(r)] = -label_from_rank(r);
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n()) throw std::invalid_argument("composing permutations of unequal size");
  std::vector<int> img(static_cast<std::size_t>(2 * p.n()));
  for (int r = 0; r < 2 * p.n(); ++r)
    img[static_cast<std::size_t>(r)] = p.apply(q.apply(label_from_rank(r)));
  return Permutation(p.n(), std::move(img));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  if (p.n() != g.n()) throw std::invalid_argument("conjugating permutations of unequal size");
  return compose(g, compose(p, g.inverse()));
}

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(static_cast<std::size_t>(2 * p.n()), false);
  for (int r = 0; r < 2 * p.n(); ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    std::vector<int> cyc;
    int x = label_from_rank(r);
    do {
      cyc.push_back(x);
      seen[static_cast<std::size_t>(label_rank(x))] = true;
      x = p.apply(x);
    } while (x != cyc.front());
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : cycles_of(p)) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

PairMatching::PairMatching(Permutation p) : perm_(std::move(p)) {
  if (!perm_.is_involution() || !perm_.is_fixed_point_free())
    throw std::invalid_argument("pair matching must be a fixed-point-free involution");
}

namespace {

void matchings_rec(int n, std::vector<int>& img, std::vector<bool>& used,
                   std::vector<PairMatching>& out) {
  int r = 0;
  while (r < 2 * n && used[static_cast<std::size_t>(r)]) ++r;
  if (r == 2 * n) {
    out.emplace_back(Permutation(n, img));
    return;
  }
  for (int s = r + 1; s < 2 * n; ++s) {
    if (used[static_cast<std::size_t>(s)]) continue;
    used[static_cast<std::size_t>(r)] = used[static_cast<std::size_t>(s)] = true;
    img[static_cast<std::size_t>(r)] = label_from_rank(s);
    img[static_cast<std::size_t>(s)] = label_from_rank(r);
    matchings_rec(n, img, used, out);
    used[static_cast<std::size_t>(r)] = used[static_cast<std::size_t>(s)] = false;
  }
}

}  // namespace

std::vector<PairMatching> all_pair_matchings(int n) {
  if (n < 1) throw std::invalid_argument("ground-set size must be >= 1");
  std::vector<PairMatching> out;
  std::vector<int> img(static_cast<std::size_t>(2 * n), 0);
  std::vector<bool> used(static_cast<std::size_t>(2 * n), false);
  matchings_rec(n, img, used, out);
  return out;
}

namespace {

// Pair the cycles of sigma via support relabeling through `pairing`
// (support(c') = pairing(support(c))); returns one length per pair, sorted
// decreasing, or an empty optional-equivalent (throws / false) on a
// self-paired cycle depending on strictness.
bool paired_half_type(const Permutation& sigma, const Permutation& pairing,
                      bool self_pair_fatal, Partition* out) {
  auto cycles = cycles_of(sigma);
  // cycle index by minimal rank of support
  std::vector<int> cycle_at(static_cast<std::size_t>(2 * sigma.n()), -1);
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (int x : cycles[i]) cycle_at[static_cast<std::size_t>(label_rank(x))] = static_cast<int>(i);
  std::vector<bool> done(cycles.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (done[i]) continue;
    int partner = cycle_at[static_cast<std::size_t>(label_rank(pairing.apply(cycles[i][0])))];
    if (partner == static_cast<int>(i)) {
      if (self_pair_fatal)
        throw std::logic_error("cycle pairing degenerated to a self-paired cycle");
      return false;
    }
    if (done[static_cast<std::size_t>(partner)] ||
        cycles[static_cast<std::size_t>(partner)].size() != cycles[i].size())
      return false;
    done[i] = done[static_cast<std::size_t>(partner)] = true;
    lengths.push_back(static_cast<int>(cycles[i].size()));
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  *out = Partition(std::move(lengths));
  return true;
}

}  // namespace

Partition lambda_of(const PairMatching& d1, const PairMatching& d2) {
  if (d1.n() != d2.n()) throw std::invalid_argument("pair matchings of unequal size");
  Partition out;
  // For two fixed-point-free involutions the pairing c -> d1 c^{-1} d1 is
  // always proper (each union-graph cycle of length 2l splits into two
  // l-cycles swapped by d1), so a self-pair is a logic error here.
  paired_half_type(compose(d1.perm(), d2.perm()), d1.perm(), /*self_pair_fatal=*/true, &out);
  if (out.weight() != d1.n()) throw std::logic_error("lambda_of weight mismatch");
  return out;
}

std::optional<Partition> twisted_half_type(const Permutation& sigma) {
  Permutation tau = Permutation::negation(sigma.n());
  if (compose(tau, sigma) != compose(sigma.inverse(), tau)) return std::nullopt;
  Partition half;
  if (!paired_half_type(sigma, tau, /*self_pair_fatal=*/false, &half)) return std::nullopt;
  return half;
}

bool is_twisted_class_member(const Permutation& sigma, const Partition& lambda) {
  if (lambda.weight() != sigma.n())
    throw std::invalid_argument("partition weight must equal the ground-set size");
  auto half = twisted_half_type(sigma);
  return half && *half == lambda;
}

void for_each_hyperoctahedral(int n, const std::function<void(const Permutation&)>& fn) {
  if (n < 1) throw std::invalid_argument("ground-set size must be >= 1");
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> img(static_cast<std::size_t>(2 * n));
      for (int k = 1; k <= n; ++k) {
        int image = base[static_cast<std::size_t>(k - 1)];
        if (mask & (1u << (k - 1))) image = -image;
        img[static_cast<std::size_t>(label_rank(k))] = image;
        img[static_cast<std::size_t>(label_rank(-k))] = -image;
      }
      fn(Permutation(n, std::move(img)));
    }
  } while (std::next_permutation(base.begin(), base.end()));
}

std::vector<Permutation> hyperoctahedral_elements(int n) {
  std::vector<Permutation> out;
  for_each_hyperoctahedral(n, [&](const Permutation& g) { out.push_back(g); });
  return out;
}

}  // namespace twisth
