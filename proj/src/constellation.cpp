#include "twisth/constellation.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace twisth {

namespace {

bool is_fpf_involution_table(const std::vector<int>& s) {
  int N = static_cast<int>(s.size());
  for (int f = 0; f < N; ++f) {
    int g = s[static_cast<std::size_t>(f)];
    if (g < 0 || g >= N || g == f) return false;
    if (s[static_cast<std::size_t>(g)] != f) return false;
  }
  return true;
}

// Orbit ids under the given generator tables, numbered in order of the
// minimal flag in each orbit.
std::vector<int> orbit_ids(int N, const std::vector<const std::vector<int>*>& gens,
                           int* orbit_count) {
  std::vector<int> id(static_cast<std::size_t>(N), -1);
  int next = 0;
  for (int f = 0; f < N; ++f) {
    if (id[static_cast<std::size_t>(f)] != -1) continue;
    std::vector<int> stack{f};
    id[static_cast<std::size_t>(f)] = next;
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      for (const auto* s : gens) {
        int h = (*s)[static_cast<std::size_t>(g)];
        if (id[static_cast<std::size_t>(h)] == -1) {
          id[static_cast<std::size_t>(h)] = next;
          stack.push_back(h);
        }
      }
    }
    ++next;
  }
  *orbit_count = next;
  return id;
}

}  // namespace

void FlagMap::validate() const {
  if (s1.size() != s0.size() || s2.size() != s0.size())
    throw std::runtime_error("flag map: involution tables of unequal size");
  if (!is_fpf_involution_table(s0) || !is_fpf_involution_table(s1) ||
      !is_fpf_involution_table(s2))
    throw std::runtime_error("flag map: generators must be fixed-point-free involutions");
  for (int f = 0; f < size(); ++f) {
    if (s0[static_cast<std::size_t>(s2[static_cast<std::size_t>(f)])] !=
        s2[static_cast<std::size_t>(s0[static_cast<std::size_t>(f)])])
      throw std::runtime_error("flag map: s0 and s2 must commute");
    if (s0[static_cast<std::size_t>(f)] == s2[static_cast<std::size_t>(f)])
      throw std::runtime_error("flag map: degenerate edge orbit");
  }
}

CDConstellation build_constellation(const MatchingSeq& ms) {
  if (ms.m() < 2) throw std::invalid_argument("constellations require m >= 2");
  if (!is_valid_matching_seq(ms))
    throw std::invalid_argument("matching sequence violates the chain conditions");

  int n = ms.n, m = ms.m();
  int paths = 2 * n;        // right paths, indexed by label rank
  int gaps = m - 1;         // edge layers between consecutive colors
  int N = 2 * paths * gaps;
  auto id = [&](int k, int end, int pr) { return (k * 2 + end) * paths + pr; };

  CDConstellation c;
  c.n = n;
  c.m = m;
  c.map.s0.resize(static_cast<std::size_t>(N));
  c.map.s1.resize(static_cast<std::size_t>(N));
  c.map.s2.resize(static_cast<std::size_t>(N));
  c.color.resize(static_cast<std::size_t>(N));
  c.label.resize(static_cast<std::size_t>(N));

  for (int k = 0; k < gaps; ++k) {
    for (int end = 0; end < 2; ++end) {
      for (int pr = 0; pr < paths; ++pr) {
        int f = id(k, end, pr);
        int a = label_from_rank(pr);
        c.color[static_cast<std::size_t>(f)] = k + end;
        c.label[static_cast<std::size_t>(f)] = a;
        c.map.s0[static_cast<std::size_t>(f)] = id(k, 1 - end, pr);
        c.map.s2[static_cast<std::size_t>(f)] = id(k, end, label_rank(ms.delta(k).apply(a)));
        if (end == 0) {
          // lower end: around the color-k vertex; at color 0 the corner
          // joins the paths a and -a
          c.map.s1[static_cast<std::size_t>(f)] =
              (k == 0) ? id(0, 0, label_rank(-a)) : id(k - 1, 1, pr);
        } else {
          // upper end: around the color-(k+1) vertex; at color m-1 the
          // corner joins a with delta_{m-1}(a)
          c.map.s1[static_cast<std::size_t>(f)] =
              (k == gaps - 1) ? id(k, 1, label_rank(ms.delta(m - 1).apply(a)))
                              : id(k + 1, 0, pr);
        }
      }
    }
  }
  return c;
}

namespace {

// The walk data of one right path: its per-gap lower flag and its top flag.
struct PathWalk {
  std::vector<int> side;  // lower flag per gap
  int top = -1;
};

struct Walked {
  int n = 0;
  int m = 0;
  std::vector<PathWalk> paths;  // indexed by label rank
};

Walked walk_paths(const CDConstellation& c) {
  c.map.validate();
  int N = c.flag_count();
  if (static_cast<int>(c.color.size()) != N || static_cast<int>(c.label.size()) != N)
    throw std::runtime_error("constellation: color/label tables of wrong size");

  int m = 0;
  for (int col : c.color) {
    if (col < 0) throw std::runtime_error("constellation: negative color");
    m = std::max(m, col + 1);
  }
  if (m < 2) throw std::runtime_error("constellation: fewer than two colors");
  int gaps = m - 1;
  if (N % (4 * gaps) != 0) throw std::runtime_error("constellation: flag count mismatch");
  int n = N / (4 * gaps);

  std::vector<int> start(static_cast<std::size_t>(2 * n), -1);
  for (int f = 0; f < N; ++f) {
    int a = c.label[static_cast<std::size_t>(f)];
    if (a == 0 || a > n || a < -n) throw std::runtime_error("constellation: label out of range");
    if (c.color[static_cast<std::size_t>(f)] == 0) {
      int r = label_rank(a);
      if (start[static_cast<std::size_t>(r)] != -1)
        throw std::runtime_error("constellation: duplicate color-0 flag on one path");
      start[static_cast<std::size_t>(r)] = f;
    }
  }

  Walked w;
  w.n = n;
  w.m = m;
  w.paths.resize(static_cast<std::size_t>(2 * n));
  for (int pr = 0; pr < 2 * n; ++pr) {
    int f = start[static_cast<std::size_t>(pr)];
    if (f == -1) throw std::runtime_error("constellation: right path missing its color-0 corner");
    int a = label_from_rank(pr);
    PathWalk& walk = w.paths[static_cast<std::size_t>(pr)];
    for (int k = 0; k < gaps; ++k) {
      if (c.color[static_cast<std::size_t>(f)] != k ||
          c.label[static_cast<std::size_t>(f)] != a)
        throw std::runtime_error("constellation: right path does not reach color m-1");
      walk.side.push_back(f);
      int upper = c.map.s0[static_cast<std::size_t>(f)];
      if (c.color[static_cast<std::size_t>(upper)] != k + 1 ||
          c.label[static_cast<std::size_t>(upper)] != a)
        throw std::runtime_error("constellation: right path does not reach color m-1");
      if (k == gaps - 1) {
        walk.top = upper;
      } else {
        f = c.map.s1[static_cast<std::size_t>(upper)];
      }
    }
  }
  return w;
}

PairMatching matching_from_images(int n, const std::vector<int>& img_by_rank) {
  return PairMatching(Permutation(n, img_by_rank));
}

}  // namespace

MatchingSeq extract_matchings(const CDConstellation& c) {
  Walked w = walk_paths(c);
  int n = w.n, m = w.m;

  // delta_-1: the two paths sharing each color-0 corner must be a, -a
  for (int pr = 0; pr < 2 * n; ++pr) {
    int f = w.paths[static_cast<std::size_t>(pr)].side[0];
    int mate = c.label[static_cast<std::size_t>(c.map.s1[static_cast<std::size_t>(f)])];
    if (mate != -label_from_rank(pr))
      throw std::runtime_error("constellation: color-0 corner does not pair a with -a");
  }

  MatchingSeq ms{n, {PairMatching::tau(n)}};
  try {
    for (int k = 0; k < m - 1; ++k) {
      std::vector<int> img(static_cast<std::size_t>(2 * n));
      for (int pr = 0; pr < 2 * n; ++pr) {
        int f = w.paths[static_cast<std::size_t>(pr)].side[static_cast<std::size_t>(k)];
        img[static_cast<std::size_t>(pr)] =
            c.label[static_cast<std::size_t>(c.map.s2[static_cast<std::size_t>(f)])];
      }
      ms.deltas.push_back(matching_from_images(n, img));
    }
    std::vector<int> img(static_cast<std::size_t>(2 * n));
    for (int pr = 0; pr < 2 * n; ++pr) {
      int top = w.paths[static_cast<std::size_t>(pr)].top;
      img[static_cast<std::size_t>(pr)] =
          c.label[static_cast<std::size_t>(c.map.s1[static_cast<std::size_t>(top)])];
    }
    ms.deltas.push_back(matching_from_images(n, img));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("constellation: extracted matching invalid: ") +
                             e.what());
  }
  return ms;
}

std::vector<bool> component_orientability(const FlagMap& map) {
  int N = map.size();
  int components = 0;
  auto comp = orbit_ids(N, {&map.s0, &map.s1, &map.s2}, &components);
  std::vector<bool> orientable(static_cast<std::size_t>(components), true);
  std::vector<int> side(static_cast<std::size_t>(N), -1);
  for (int f = 0; f < N; ++f) {
    if (side[static_cast<std::size_t>(f)] != -1) continue;
    side[static_cast<std::size_t>(f)] = 0;
    std::vector<int> stack{f};
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      for (const auto* s : {&map.s0, &map.s1, &map.s2}) {
        int h = (*s)[static_cast<std::size_t>(g)];
        int want = 1 - side[static_cast<std::size_t>(g)];
        if (side[static_cast<std::size_t>(h)] == -1) {
          side[static_cast<std::size_t>(h)] = want;
          stack.push_back(h);
        } else if (side[static_cast<std::size_t>(h)] != want) {
          orientable[static_cast<std::size_t>(comp[static_cast<std::size_t>(g)])] = false;
        }
      }
    }
  }
  return orientable;
}

SurfaceReport surface_report(const CDConstellation& c) {
  c.map.validate();
  int N = c.flag_count();
  SurfaceReport report;

  int vertex_count = 0;
  auto vid = orbit_ids(N, {&c.map.s1, &c.map.s2}, &vertex_count);
  int edge_count = 0;
  auto eid = orbit_ids(N, {&c.map.s0, &c.map.s2}, &edge_count);
  int face_count = 0;
  auto fid = orbit_ids(N, {&c.map.s0, &c.map.s1}, &face_count);

  {
    std::vector<int> esize(static_cast<std::size_t>(edge_count), 0);
    for (int f = 0; f < N; ++f) esize[static_cast<std::size_t>(eid[static_cast<std::size_t>(f)])]++;
    for (int s : esize)
      if (s != 4) throw std::runtime_error("constellation: edge orbit of size != 4");
  }

  int m = 0;
  for (int col : c.color) m = std::max(m, col + 1);
  report.vertex_counts.assign(static_cast<std::size_t>(m), 0);
  {
    std::vector<int> vcolor(static_cast<std::size_t>(vertex_count), -1);
    for (int f = 0; f < N; ++f) {
      int v = vid[static_cast<std::size_t>(f)];
      int col = c.color[static_cast<std::size_t>(f)];
      if (vcolor[static_cast<std::size_t>(v)] == -1)
        vcolor[static_cast<std::size_t>(v)] = col;
      else if (vcolor[static_cast<std::size_t>(v)] != col)
        throw std::runtime_error("constellation: vertex with inconsistent colors");
    }
    for (int col : vcolor) report.vertex_counts[static_cast<std::size_t>(col)]++;
  }

  report.vertex_count = vertex_count;
  report.edge_count = edge_count;
  report.face_count = face_count;
  report.euler_characteristic = vertex_count - edge_count + face_count;

  // face degree = number of color-0 corners = color-0 flags / 2
  {
    std::vector<int> zero_flags(static_cast<std::size_t>(face_count), 0);
    for (int f = 0; f < N; ++f)
      if (c.color[static_cast<std::size_t>(f)] == 0)
        zero_flags[static_cast<std::size_t>(fid[static_cast<std::size_t>(f)])]++;
    std::vector<int> degrees;
    for (int z : zero_flags) {
      if (z % 2 != 0) throw std::runtime_error("constellation: odd color-0 flag count in face");
      degrees.push_back(z / 2);
    }
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    report.face_degrees = Partition(std::move(degrees));
  }

  orbit_ids(N, {&c.map.s0, &c.map.s1, &c.map.s2}, &report.component_count);
  report.component_orientable = component_orientability(c.map);
  return report;
}

std::string export_dot(const CDConstellation& c) {
  c.map.validate();
  int N = c.flag_count();
  int vertex_count = 0;
  auto vid = orbit_ids(N, {&c.map.s1, &c.map.s2}, &vertex_count);
  int edge_count = 0;
  auto eid = orbit_ids(N, {&c.map.s0, &c.map.s2}, &edge_count);

  std::vector<int> vcolor(static_cast<std::size_t>(vertex_count), 0);
  std::vector<int> vsize(static_cast<std::size_t>(vertex_count), 0);
  for (int f = 0; f < N; ++f) {
    int v = vid[static_cast<std::size_t>(f)];
    vcolor[static_cast<std::size_t>(v)] = c.color[static_cast<std::size_t>(f)];
    vsize[static_cast<std::size_t>(v)]++;
  }

  struct EdgeInfo {
    int v_low = -1, v_high = -1, gap = 0;
    int path_a = 0, path_b = 0;
  };
  std::vector<EdgeInfo> edges(static_cast<std::size_t>(edge_count));
  std::vector<bool> seen(static_cast<std::size_t>(edge_count), false);
  for (int f = 0; f < N; ++f) {
    int e = eid[static_cast<std::size_t>(f)];
    if (seen[static_cast<std::size_t>(e)]) continue;
    seen[static_cast<std::size_t>(e)] = true;
    int g = c.map.s0[static_cast<std::size_t>(f)];
    int low = f, high = g;
    if (c.color[static_cast<std::size_t>(low)] > c.color[static_cast<std::size_t>(high)])
      std::swap(low, high);
    EdgeInfo& info = edges[static_cast<std::size_t>(e)];
    info.v_low = vid[static_cast<std::size_t>(low)];
    info.v_high = vid[static_cast<std::size_t>(high)];
    info.gap = c.color[static_cast<std::size_t>(low)];
    int a = c.label[static_cast<std::size_t>(f)];
    int b = c.label[static_cast<std::size_t>(c.map.s2[static_cast<std::size_t>(f)])];
    if (label_rank(a) > label_rank(b)) std::swap(a, b);
    info.path_a = a;
    info.path_b = b;
  }

  std::ostringstream out;
  out << "graph constellation {\n";
  for (int v = 0; v < vertex_count; ++v)
    out << "  v" << v << " [label=\"color=" << vcolor[static_cast<std::size_t>(v)]
        << " deg=" << vsize[static_cast<std::size_t>(v)] / 2 << "\"];\n";
  for (int e = 0; e < edge_count; ++e) {
    const EdgeInfo& info = edges[static_cast<std::size_t>(e)];
    out << "  v" << info.v_low << " -- v" << info.v_high << " [label=\"gap=" << info.gap
        << " paths=(" << info.path_a << "," << info.path_b << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_structured(const CDConstellation& c) {
  nlohmann::ordered_json j;
  j["flags"] = c.flag_count();
  j["s0"] = c.map.s0;
  j["s1"] = c.map.s1;
  j["s2"] = c.map.s2;
  j["colors"] = c.color;
  j["labels"] = c.label;
  return j.dump();
}

CDConstellation import_structured(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CDConstellation c;
  c.map.s0 = j.at("s0").get<std::vector<int>>();
  c.map.s1 = j.at("s1").get<std::vector<int>>();
  c.map.s2 = j.at("s2").get<std::vector<int>>();
  c.color = j.at("colors").get<std::vector<int>>();
  c.label = j.at("labels").get<std::vector<int>>();
  if (j.at("flags").get<int>() != c.flag_count())
    throw std::runtime_error("constellation: flag count field mismatch");
  Walked w = walk_paths(c);  // validates structure, recovers n and m
  c.n = w.n;
  c.m = w.m;
  return c;
}

}  // namespace twisth
