#include <doctest.h>

#include <set>

#include "twisth/factorization.hpp"
#include "twisth/io.hpp"

using namespace twisth;

namespace {

std::vector<TranspositionSeq> collect(int m, const Partition& lambda, int workers = 1) {
  std::vector<TranspositionSeq> out;
  enumerate_factorizations(m, lambda, [&](const TranspositionSeq& ts) { out.push_back(ts); },
                           workers);
  return out;
}

}  // namespace

TEST_CASE("valid_transpositions") {
  CHECK(valid_transpositions(1).empty());

  auto t2 = valid_transpositions(2);
  REQUIRE(t2.size() == 4);
  CHECK(t2[0] == Transposition(1, 2));
  CHECK(t2[1] == Transposition(1, -2));
  CHECK(t2[2] == Transposition(-1, 2));
  CHECK(t2[3] == Transposition(-1, -2));

  // binomial oracle: C(2n,2) - n pairs survive the j != -i constraint
  for (int n = 1; n <= 5; ++n) {
    int expected = (2 * n) * (2 * n - 1) / 2 - n;
    CHECK(static_cast<int>(valid_transpositions(n).size()) == expected);
    CHECK(expected == 2 * n * (n - 1));
  }
}

TEST_CASE("transpositions canonicalize and reject (i,i)") {
  CHECK(Transposition(2, 1) == Transposition(1, 2));
  CHECK(Transposition(2, -1) == Transposition(-1, 2));
  CHECK_FALSE(Transposition(1, -1).admissible());
  CHECK_THROWS_AS(Transposition(1, 1), std::invalid_argument);
}

TEST_CASE("twisted product") {
  CHECK(twisted_product(TranspositionSeq{2, {}}).is_identity());
  CHECK(to_cycle_string(twisted_product(TranspositionSeq{2, {Transposition(1, 2)}})) ==
        "(1 2)(-1 -2)");
  CHECK(twisted_product(TranspositionSeq{2, {Transposition(1, 2), Transposition(1, 2)}})
            .is_identity());
  CHECK_THROWS_AS(twisted_product(TranspositionSeq{2, {Transposition(1, -1)}}),
                  std::invalid_argument);
}

TEST_CASE("twisted product is inverted by tau-conjugation, always") {
  for (int n = 2; n <= 3; ++n) {
    Permutation tau = Permutation::negation(n);
    auto pool = valid_transpositions(n);
    for (const auto& t1 : pool) {
      for (const auto& t2 : pool) {
        Permutation r = twisted_product(TranspositionSeq{n, {t1, t2}});
        CHECK(conjugate(r, tau) == r.inverse());
      }
    }
  }
}

TEST_CASE("enumerate_factorizations examples") {
  // every admissible single transposition hits lambda = (2)
  auto all4 = collect(1, Partition({2}));
  REQUIRE(all4.size() == 4);
  CHECK(all4[0].seq[0] == Transposition(1, 2));

  CHECK(collect(1, Partition({1, 1})).empty());

  for (int n = 1; n <= 3; ++n) {
    auto only_empty = collect(0, Partition::ones(n));
    REQUIRE(only_empty.size() == 1);
    CHECK(only_empty[0].seq.empty());
  }
}

TEST_CASE("hurwitz numbers at desk scale") {
  auto h = hurwitz_number(1, Partition({2}));
  CHECK(h.raw_count == 4);
  CHECK(h.value == Rational(2, 1));

  for (int m = 1; m <= 3; ++m) CHECK(hurwitz_number(m, Partition({1})).raw_count == 0);

  for (int n = 1; n <= 3; ++n) {
    auto h0 = hurwitz_number(0, Partition::ones(n));
    CHECK(h0.raw_count == 1);
    CHECK(h0.value == Rational(1, factorial(n)));
  }
}

TEST_CASE("count_by_cycle_type") {
  auto c10 = count_by_cycle_type(1, 2);
  CHECK(c10.by_type.at(Partition({2})) == 4);
  CHECK(c10.by_type.at(Partition({1, 1})) == 0);
  CHECK(c10.none == 0);

  auto c00 = count_by_cycle_type(0, 2);
  CHECK(c00.by_type.at(Partition({1, 1})) == 1);
  CHECK(c00.by_type.at(Partition({2})) == 0);
  CHECK(c00.none == 0);

  CHECK(count_by_cycle_type(2, 2).total() == 16);
}

TEST_CASE("total counts match (2n(n-1))^m") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      CHECK(count_by_cycle_type(m, n).total() ==
            (m == 0 ? 1 : checked_pow(static_cast<std::uint64_t>(2 * n * (n - 1)), m)));
}

TEST_CASE("worker count never changes the stream") {
  for (int m = 0; m <= 3; ++m) {
    auto one = collect(m, Partition({2}), 1);
    auto four = collect(m, Partition({2}), 4);
    CHECK(one == four);
    CHECK(hurwitz_number(m, Partition({2}), 1).raw_count ==
          hurwitz_number(m, Partition({2}), 8).raw_count);
  }
}

TEST_CASE("entrywise hyperoctahedral action preserves membership") {
  Partition lambda({2});
  auto members = collect(2, lambda);
  std::set<std::string> keys;
  for (const auto& ts : members) keys.insert(transposition_seq_to_string(ts));
  for (const auto& g : hyperoctahedral_elements(2)) {
    for (const auto& ts : members) {
      TranspositionSeq image{ts.n, {}};
      for (const auto& t : ts.seq)
        image.seq.emplace_back(g.apply(t.a), g.apply(t.b));
      CHECK(is_twisted_class_member(twisted_product(image), lambda));
      CHECK(keys.count(transposition_seq_to_string(image)) == 1);
    }
  }
}

TEST_CASE("raw counts fit exact rationals") {
  auto h = hurwitz_number(2, Partition({1, 1}));
  CHECK(h.value.num * factorial(2) == h.raw_count * h.value.den);
}
