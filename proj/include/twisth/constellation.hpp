#pragma once

#include <string>
#include <vector>

#include "twisth/matching.hpp"
#include "twisth/perm.hpp"

namespace twisth {

// Flag system of an embedded colored graph: three fixed-point-free
// involutions on the flag set with s0*s2 = s2*s0. Vertices are the orbits
// of <s1,s2>, edges the size-4 orbits of <s0,s2>, faces the orbits of
// <s0,s1>. Non-orientable surfaces are encoded canonically; orientability
// is bipartiteness of the flag graph with every generator color-swapping.
struct FlagMap {
  std::vector<int> s0, s1, s2;

  int size() const { return static_cast<int>(s0.size()); }
  void validate() const;
};

// A CD-labelled simple m-constellation. Flags are (right path, gap, end)
// triples: path a runs alongside one edge per gap k = 0..m-2, and each
// edge side has a lower (color k) and an upper (color k+1) end.
//
// color[f] is the color of the vertex incident to flag f; label[f] is the
// right-path label carried by f. Color-0 corners are the s1-pairs of
// color-0 flags; the corner carrying paths {a,-a} is labelled |a|, and its
// orientation bit says the +|a| path comes first.
struct CDConstellation {
  int n = 0;
  int m = 0;
  FlagMap map;
  std::vector<int> color;
  std::vector<int> label;

  int flag_count() const { return map.size(); }
};

struct SurfaceReport {
  std::vector<int> vertex_counts;        // per color 0..m-1
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;
  int euler_characteristic = 0;
  int component_count = 0;
  std::vector<bool> component_orientable;
  Partition face_degrees;
};

// Realizes a valid matching sequence (m >= 2) as a flag-encoded
// constellation. The extracted matchings of the result equal ms.
CDConstellation build_constellation(const MatchingSeq& ms);

// Recover (tau, delta_0..delta_{m-1}) from the embedded
// graph by walking every right path from its color-0 corner. Malformed
// flag structure raises std::runtime_error.
MatchingSeq extract_matchings(const CDConstellation& c);

SurfaceReport surface_report(const CDConstellation& c);

// Orientability via flag-graph bipartiteness, per component.
std::vector<bool> component_orientability(const FlagMap& map);

std::string export_dot(const CDConstellation& c);
std::string export_structured(const CDConstellation& c);
CDConstellation import_structured(const std::string& text);

}  // namespace twisth
