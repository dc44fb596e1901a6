#include "twisth/io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace twisth {

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream out;
  bool any = false;
  for (const auto& cyc : cycles_of(p)) {
    if (cyc.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out << ' ';
      out << cyc[i];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == ','))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  void expect(char ch) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ch)
      throw ParseError("expected '" + std::string(1, ch) + "' at position " +
                       std::to_string(pos));
    ++pos;
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw ParseError("expected integer at position " + std::to_string(start));
    return std::stoi(text.substr(start, pos - start));
  }
};

std::vector<std::vector<int>> parse_cycles(const std::string& text) {
  Cursor cur{text};
  std::vector<std::vector<int>> cycles;
  while (!cur.eof()) {
    cur.expect('(');
    std::vector<int> cyc;
    while (true) {
      cur.skip_ws();
      if (cur.pos < text.size() && text[cur.pos] == ')') {
        ++cur.pos;
        break;
      }
      cyc.push_back(cur.integer());
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace

Permutation parse_permutation(const std::string& text, int n) {
  Permutation p(n);
  std::vector<int> img(static_cast<std::size_t>(2 * n));
  for (int r = 0; r < 2 * n; ++r) img[static_cast<std::size_t>(r)] = label_from_rank(r);
  std::vector<bool> moved(static_cast<std::size_t>(2 * n), false);
  for (const auto& cyc : parse_cycles(text)) {
    if (cyc.size() < 2) throw ParseError("cycle of length < 2");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int x = cyc[i];
      int y = cyc[(i + 1) % cyc.size()];
      if (x == 0 || x > n || x < -n) throw ParseError("label out of range");
      int r = label_rank(x);
      if (moved[static_cast<std::size_t>(r)]) throw ParseError("cycles not disjoint");
      moved[static_cast<std::size_t>(r)] = true;
      img[static_cast<std::size_t>(r)] = y;
    }
  }
  return Permutation(n, std::move(img));
}

std::string partition_to_string(const Partition& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out << ',';
    out << p.parts()[i];
  }
  return out.str();
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  if (text.find('^') != std::string::npos) {
    // exponent form: "2^1 1^2"
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
      auto caret = token.find('^');
      if (caret == std::string::npos || caret == 0 || caret + 1 >= token.size())
        throw ParseError("bad exponent token '" + token + "'");
      int part = std::stoi(token.substr(0, caret));
      int count = std::stoi(token.substr(caret + 1));
      if (part < 1 || count < 0) throw ParseError("bad exponent token '" + token + "'");
      for (int i = 0; i < count; ++i) parts.push_back(part);
    }
  } else {
    Cursor cur{text};
    while (!cur.eof()) parts.push_back(cur.integer());
  }
  if (parts.empty()) throw ParseError("empty partition");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string transposition_seq_to_string(const TranspositionSeq& ts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ts.seq.size(); ++i) {
    if (i) out << ';';
    out << '(' << ts.seq[i].a << ' ' << ts.seq[i].b << ')';
  }
  return out.str();
}

TranspositionSeq parse_transposition_seq(const std::string& text, int n) {
  TranspositionSeq ts{n, {}};
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return ts;

  std::size_t pos = 0;
  while (true) {
    auto semi = text.find(';', pos);
    std::string chunk = text.substr(pos, semi == std::string::npos ? std::string::npos
                                                                   : semi - pos);
    auto cycles = parse_cycles(chunk);
    if (cycles.size() != 1 || cycles[0].size() != 2)
      throw ParseError("expected a single transposition, got '" + chunk + "'");
    int a = cycles[0][0], b = cycles[0][1];
    if (a == 0 || a > n || a < -n || b == 0 || b > n || b < -n)
      throw ParseError("label out of range in '" + chunk + "'");
    if (a == b || a == -b) throw ParseError("inadmissible transposition '" + chunk + "'");
    ts.seq.emplace_back(a, b);
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return ts;
}

std::string matching_seq_to_json(const MatchingSeq& ms) {
  nlohmann::ordered_json j;  // keep the documented field order
  j["n"] = ms.n;
  std::vector<std::string> deltas;
  for (const auto& d : ms.deltas) deltas.push_back(to_cycle_string(d.perm()));
  j["deltas"] = deltas;
  return j.dump();
}

MatchingSeq parse_matching_seq_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  int n = 0;
  std::vector<std::string> deltas;
  try {
    n = j.at("n").get<int>();
    deltas = j.at("deltas").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  if (deltas.empty()) throw ParseError("matching sequence needs delta_-1");
  MatchingSeq ms{n, {}};
  for (const auto& text_d : deltas) {
    try {
      ms.deltas.emplace_back(parse_permutation(text_d, n));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("entry is not a pair matching: ") + e.what());
    }
  }
  return ms;
}

}  // namespace twisth
