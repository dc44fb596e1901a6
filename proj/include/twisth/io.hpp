#pragma once

#include <string>

#include "twisth/factorization.hpp"
#include "twisth/matching.hpp"
#include "twisth/perm.hpp"

namespace twisth {

// Parse failures carry a human-readable position.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Disjoint signed cycle notation, e.g. "(1 -2)(-1 2)"; identity is "()".
std::string to_cycle_string(const Permutation& p);
Permutation parse_permutation(const std::string& text, int n);

// Comma list "2,1,1"; parser also accepts exponent form "2^1 1^2".
std::string partition_to_string(const Partition& p);
Partition parse_partition(const std::string& text);

// One sequence per line: "(1 2);(-1 2)". The empty sequence is the empty
// string.
std::string transposition_seq_to_string(const TranspositionSeq& ts);
TranspositionSeq parse_transposition_seq(const std::string& text, int n);

// {"n": ..., "deltas": ["(1 -1)(2 -2)", ...]} with delta_-1 first.
std::string matching_seq_to_json(const MatchingSeq& ms);
MatchingSeq parse_matching_seq_json(const std::string& text);

}  // namespace twisth
