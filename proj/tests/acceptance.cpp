// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "twisth/constellation.hpp"
#include "twisth/factorization.hpp"
#include "twisth/io.hpp"
#include "twisth/matching.hpp"
#include "twisth/perm.hpp"
#include "twisth/verify.hpp"

using namespace twisth;

namespace {

int g_failures = 0;

void report(int index, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << what << '\n';
  if (!ok) ++g_failures;
}

// 1. raw factorization count = 2^m * matching sequence count, full sweep
bool two_to_m_correspondence() {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& lambda : partitions_of(n)) {
        std::uint64_t raw = hurwitz_number(m, lambda).raw_count;
        std::uint64_t seqs = count_matching_seqs(m, lambda);
        if (raw != seqs << m) return false;
      }
  return true;
}

// 2. exactly 2^m pairwise-distinct admissible preimages, each mapping back
bool preimage_exactness() {
  bool ok = true;
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& lambda : partitions_of(n))
        enumerate_matching_seqs(m, lambda, [&](const MatchingSeq& ms) {
          auto pre = p_preimages(ms);
          if (pre.size() != (std::uint64_t{1} << m)) ok = false;
          std::set<std::vector<Transposition>> distinct;
          for (const auto& ts : pre) {
            for (const auto& t : ts.seq)
              if (!t.admissible()) ok = false;
            if (!(p_map(ts) == ms)) ok = false;
            distinct.insert(ts.seq);
          }
          if (distinct.size() != pre.size()) ok = false;
        });
  return ok;
}

// 3. frozen desk-scale raw counts
bool desk_scale_counts() {
  if (hurwitz_number(1, Partition({2})).raw_count != 4) return false;
  if (hurwitz_number(1, Partition({1, 1})).raw_count != 0) return false;
  for (int m = 1; m <= 4; ++m)
    if (hurwitz_number(m, Partition({1})).raw_count != 0) return false;
  for (int n = 1; n <= 3; ++n)
    if (hurwitz_number(0, Partition::ones(n)).raw_count != 1) return false;
  return true;
}

// 4. per-class counts plus the unmatched bucket exhaust (2n(n-1))^m
bool total_count_identity() {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 4; ++m) {
      std::uint64_t expected =
          m == 0 ? 1 : checked_pow(static_cast<std::uint64_t>(2 * n * (n - 1)), m);
      if (count_by_cycle_type(m, n).total() != expected) return false;
    }
  return true;
}

// 5. each twisted class is non-empty, conjugation-closed, and a single orbit
bool class_property() {
  for (int n = 1; n <= 3; ++n) {
    auto centralizer = hyperoctahedral_elements(n);

    std::map<Partition, std::vector<Permutation>> classes;
    std::vector<int> ranks(static_cast<std::size_t>(2 * n));
    for (int r = 0; r < 2 * n; ++r) ranks[static_cast<std::size_t>(r)] = r;
    std::sort(ranks.begin(), ranks.end());
    do {
      std::vector<int> img(ranks.size());
      for (std::size_t i = 0; i < ranks.size(); ++i)
        img[i] = label_from_rank(ranks[i]);
      Permutation sigma(n, std::move(img));
      if (auto mu = twisted_half_type(sigma)) classes[*mu].push_back(sigma);
    } while (std::next_permutation(ranks.begin(), ranks.end()));

    for (const auto& lambda : partitions_of(n)) {
      auto it = classes.find(lambda);
      if (it == classes.end() || it->second.empty()) return false;
      std::set<Permutation> members(it->second.begin(), it->second.end());

      for (const auto& sigma : members)
        for (const auto& g : centralizer)
          if (members.count(conjugate(sigma, g)) == 0) return false;

      // single orbit: breadth-first closure from one representative
      std::set<Permutation> orbit{*members.begin()};
      std::vector<Permutation> frontier{*members.begin()};
      while (!frontier.empty()) {
        Permutation sigma = frontier.back();
        frontier.pop_back();
        for (const auto& g : centralizer) {
          Permutation image = conjugate(sigma, g);
          if (orbit.insert(image).second) frontier.push_back(image);
        }
      }
      if (orbit != members) return false;
    }
  }
  return true;
}

// 6. extract(build(ms)) == ms plus the surface invariants, full sweep
bool constellation_bijection() {
  bool ok = true;
  for (int n = 1; n <= 3; ++n)
    for (int m = 2; m <= 4; ++m)
      for (const auto& lambda : partitions_of(n))
        enumerate_matching_seqs(m, lambda, [&](const MatchingSeq& ms) {
          auto c = build_constellation(ms);
          if (!(extract_matchings(c) == ms)) ok = false;
          auto r = surface_report(c);
          int s = static_cast<int>(lambda.parts().size());
          if (r.vertex_count != m * (n - 1)) ok = false;
          if (r.edge_count != (m - 1) * n) ok = false;
          if (r.face_count != s) ok = false;
          if (r.euler_characteristic != n + s - m) ok = false;
          if (!(r.face_degrees == lambda_of(ms.delta(-1), ms.delta(m - 1)))) ok = false;
        });
  return ok;
}

// 7. bipartiteness orientability matches the exhaustive local-flip oracle
bool orientability_agreement() {
  bool ok = true;
  for (int n = 1; n <= 3; ++n)
    for (int m = 2; m <= 4; ++m)
      for (const auto& lambda : partitions_of(n))
        enumerate_matching_seqs(m, lambda, [&](const MatchingSeq& ms) {
          auto c = build_constellation(ms);
          if (component_orientability(c.map) != orientability_flip_oracle(c.map)) ok = false;
        });
  return ok;
}

std::string run_to_string(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  if (pclose(pipe) != 0) out += "\n<nonzero exit>";
  return out;
}

// 8. verify and table output is byte-identical across worker counts and runs
bool determinism() {
  std::string cli = TWISTH_CLI_PATH;
  std::string verify1 = run_to_string(cli + " verify --n-max 2 --m-max 3 --workers 1");
  std::string verify8 = run_to_string(cli + " verify --n-max 2 --m-max 3 --workers 8");
  std::string verify8b = run_to_string(cli + " verify --n-max 2 --m-max 3 --workers 8");
  std::string table1 = run_to_string(cli + " table --n-max 3 --m-max 3 --workers 1");
  std::string table8 = run_to_string(cli + " table --n-max 3 --m-max 3 --workers 8");
  std::string table8b = run_to_string(cli + " table --n-max 3 --m-max 3 --workers 8");
  if (verify1.empty() || table1.empty()) return false;
  if (verify1.find("<") != std::string::npos) return false;
  return verify1 == verify8 && verify8 == verify8b && table1 == table8 && table8 == table8b;
}

}  // namespace

int main() {
  report(1, "raw count = 2^m * matching count, n <= 3, m <= 4", two_to_m_correspondence());
  report(2, "exactly 2^m distinct admissible preimages, all round-trip",
         preimage_exactness());
  report(3, "desk-scale raw counts match frozen values", desk_scale_counts());
  report(4, "class counts + unmatched bucket = (2n(n-1))^m", total_count_identity());
  report(5, "twisted classes: non-empty, conjugation-closed, single orbit",
         class_property());
  report(6, "extract after build is the identity; V/E/F/chi/face degrees",
         constellation_bijection());
  report(7, "bipartiteness orientability = exhaustive flip oracle",
         orientability_agreement());
  report(8, "verify/table byte-identical across 1 and 8 workers", determinism());
  if (g_failures) {
    std::cout << "ACCEPTANCE FAIL (" << g_failures << " criteria)\n";
    return 1;
  }
  std::cout << "ACCEPTANCE PASS\n";
  return 0;
}
