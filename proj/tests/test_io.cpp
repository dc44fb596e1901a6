#include <doctest.h>

#include "twisth/io.hpp"
#include "twisth/matching.hpp"

using namespace twisth;

TEST_CASE("cycle strings") {
  CHECK(to_cycle_string(Permutation(2)) == "()");
  CHECK(to_cycle_string(Permutation::negation(2)) == "(1 -1)(2 -2)");
  CHECK(to_cycle_string(Permutation::transposition(2, -1, 2)) == "(-1 2)");
}

TEST_CASE("permutation parse round-trips") {
  for (const auto& text :
       {"()", "(1 2)", "(1 -2)(-1 2)", "(1 -1)(2 -2)", "(1 -1 2)", "(1 2 -1 -2)"}) {
    Permutation p = parse_permutation(text, 2);
    CHECK(to_cycle_string(p) == text);
    CHECK(parse_permutation(to_cycle_string(p), 2) == p);
  }
  CHECK(parse_permutation("  ( 1   2 ) ", 2) == parse_permutation("(1 2)", 2));
}

TEST_CASE("permutation parse errors") {
  CHECK_THROWS_AS(parse_permutation("(1 2", 2), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 3)", 2), ParseError);
  CHECK_THROWS_AS(parse_permutation("(0 1)", 2), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 -1)", 2), ParseError);  // 2 reused
  CHECK_THROWS_AS(parse_permutation("(1)", 2), ParseError);          // trivial cycle
  CHECK_THROWS_AS(parse_permutation("1 2", 2), ParseError);
}

TEST_CASE("partition strings") {
  CHECK(partition_to_string(Partition({2, 1, 1})) == "2,1,1");
  CHECK(parse_partition("2,1,1") == Partition({2, 1, 1}));
  CHECK(parse_partition("1,2,1") == Partition({2, 1, 1}));  // sorted on input
  CHECK(parse_partition("2^1 1^2") == Partition({2, 1, 1}));
  CHECK(parse_partition("2^2") == Partition({2, 2}));
  CHECK_THROWS_AS(parse_partition(""), ParseError);
  CHECK_THROWS_AS(parse_partition("2,0"), ParseError);
  CHECK_THROWS_AS(parse_partition("2,x"), ParseError);
}

TEST_CASE("transposition sequence strings") {
  TranspositionSeq ts{2, {Transposition(1, 2), Transposition(-1, 2)}};
  CHECK(transposition_seq_to_string(ts) == "(1 2);(-1 2)");
  CHECK(parse_transposition_seq("(1 2);(-1 2)", 2) == ts);
  CHECK(parse_transposition_seq(" (1 2) ; (-1 2) ", 2) == ts);

  TranspositionSeq empty{3, {}};
  CHECK(transposition_seq_to_string(empty).empty());
  CHECK(parse_transposition_seq("", 3) == empty);
  CHECK(parse_transposition_seq("   ", 3) == empty);

  CHECK_THROWS_AS(parse_transposition_seq("(1 -1)", 2), ParseError);   // inadmissible
  CHECK_THROWS_AS(parse_transposition_seq("(1 2 3)", 3), ParseError);  // not a 2-cycle
  CHECK_THROWS_AS(parse_transposition_seq("(1 2);", 2), ParseError);   // dangling separator
}

TEST_CASE("matching sequence json round-trips") {
  TranspositionSeq ts{2, {Transposition(1, 2)}};
  MatchingSeq ms = p_map(ts);
  std::string j = matching_seq_to_json(ms);
  CHECK(j == R"x({"n":2,"deltas":["(1 -1)(2 -2)","(1 -2)(-1 2)"]})x");
  CHECK(parse_matching_seq_json(j) == ms);

  CHECK_THROWS_AS(parse_matching_seq_json("{"), ParseError);
  CHECK_THROWS_AS(parse_matching_seq_json(R"({"n":2})"), ParseError);
  CHECK_THROWS_AS(parse_matching_seq_json(R"x({"n":2,"deltas":["(1 2)"]})x"), ParseError);
}
