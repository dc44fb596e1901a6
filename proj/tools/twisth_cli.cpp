#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twisth/constellation.hpp"
#include "twisth/factorization.hpp"
#include "twisth/io.hpp"
#include "twisth/matching.hpp"
#include "twisth/verify.hpp"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBounds = 3;

constexpr int kDefaultNCap = 5;
constexpr int kDefaultMCap = 7;

struct BoundsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_bounds(int n, int m, bool force) {
  // enumeration cost is (2n(n-1))^m; refuse runaway requests without --force
  if (!force && (n > kDefaultNCap || m > kDefaultMCap))
    throw BoundsError("bounds exceeded (n <= " + std::to_string(kDefaultNCap) + ", m <= " +
                      std::to_string(kDefaultMCap) + " without --force)");
}

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

std::vector<std::string> nonblank_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

struct CountRow {
  int n, m;
  twisth::Partition lambda;
  std::uint64_t raw;
  twisth::Rational hurwitz;
  std::uint64_t matching;
};

CountRow compute_row(int m, const twisth::Partition& lambda, int workers) {
  auto fc = twisth::hurwitz_number(m, lambda, workers);
  return CountRow{lambda.weight(), m, lambda, fc.raw_count, fc.value,
                  twisth::count_matching_seqs(m, lambda)};
}

std::string row_csv(const CountRow& row) {
  std::ostringstream out;
  out << row.n << ',' << row.m << ",\"" << twisth::partition_to_string(row.lambda) << "\","
      << row.raw << ',' << row.hurwitz.num << ',' << row.hurwitz.den << ',' << row.matching
      << '\n';
  return out.str();
}

nlohmann::ordered_json row_json(const CountRow& row) {
  return {{"n", row.n},
          {"m", row.m},
          {"lambda", twisth::partition_to_string(row.lambda)},
          {"raw", row.raw},
          {"hurwitz", {{"num", row.hurwitz.num}, {"den", row.hurwitz.den}}},
          {"matching", row.matching}};
}

constexpr const char* kTableHeader =
    "n,m,lambda,raw_count,hurwitz_num,hurwitz_den,matching_count\n";

int run(int argc, char** argv) {
  CLI::App app{"twisth: purely real (twisted) Hurwitz numbers by exhaustive enumeration"};
  app.require_subcommand(1);

  int n = 0, m = 0, n_max = 2, m_max = 3, workers = 1;
  std::string lambda_text, out_path, in_path, format;
  bool force = false, inject_fault = false;

  auto add_common = [&](CLI::App* cmd, bool needs_lambda) {
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--workers", workers, "worker threads for enumeration")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--force", force, "override the n/m safety caps");
    if (needs_lambda) {
      cmd->add_option("--m", m, "number of transpositions")->required()->check(CLI::NonNegativeNumber);
      cmd->add_option("--lambda", lambda_text, "partition, e.g. 2,1,1 or 2^1 1^2")->required();
      cmd->add_option("--n", n, "ground-set size (checked against |lambda|)");
    }
  };

  auto* count_cmd = app.add_subcommand("count", "count factorizations and matching sequences");
  add_common(count_cmd, true);
  count_cmd->add_option("--format", format, "json|csv|text (default json)");

  auto* enum_cmd = app.add_subcommand("enumerate", "stream the factorizations, one per line");
  add_common(enum_cmd, true);

  auto* table_cmd = app.add_subcommand("table", "full count table over n <= n-max, m <= m-max");
  table_cmd->add_option("--n-max", n_max, "largest ground-set size")->required();
  table_cmd->add_option("--m-max", m_max, "largest sequence length")->required();
  table_cmd->add_option("--out", out_path, "output file (default stdout)");
  table_cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", format, "csv|json (default csv)");
  table_cmd->add_flag("--force", force, "override the n/m safety caps");

  auto* verify_cmd = app.add_subcommand("verify", "run every cross-module identity suite");
  verify_cmd->add_option("--n-max", n_max, "largest ground-set size");
  verify_cmd->add_option("--m-max", m_max, "largest sequence length");
  verify_cmd->add_option("--out", out_path, "output file (default stdout)");
  verify_cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--force", force, "override the n/m safety caps");
  verify_cmd->add_flag("--inject-fault", inject_fault)->group("");  // test hook, hidden

  auto* pmap_cmd = app.add_subcommand("pmap", "transposition sequences -> matching sequences");
  pmap_cmd->add_option("--n", n, "ground-set size")->required();
  pmap_cmd->add_option("--in", in_path, "input file (default stdin)");
  pmap_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* pre_cmd = app.add_subcommand("preimages", "matching sequence -> its 2^m factorizations");
  pre_cmd->add_option("--in", in_path, "input file (default stdin)");
  pre_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* build_cmd = app.add_subcommand("build", "matching sequence -> embedded constellation");
  build_cmd->add_option("--in", in_path, "input file (default stdin)");
  build_cmd->add_option("--out", out_path, "output file (default stdout)");
  build_cmd->add_option("--format", format, "dot|json (default json)");

  auto* extract_cmd = app.add_subcommand("extract", "structured constellation -> matching sequence");
  extract_cmd->add_option("--in", in_path, "input file (default stdin)");
  extract_cmd->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count_cmd->parsed() || enum_cmd->parsed()) {
      twisth::Partition lambda = twisth::parse_partition(lambda_text);
      if (n != 0 && n != lambda.weight())
        throw twisth::ParseError("--n disagrees with |lambda|");
      check_bounds(lambda.weight(), m, force);
      if (count_cmd->parsed()) {
        CountRow row = compute_row(m, lambda, workers);
        std::ostringstream out;
        if (format.empty() || format == "json") {
          nlohmann::ordered_json j = {
              {"raw", row.raw},
              {"hurwitz", {{"num", row.hurwitz.num}, {"den", row.hurwitz.den}}},
              {"matching", row.matching}};
          out << j.dump() << '\n';
        } else if (format == "csv") {
          out << kTableHeader << row_csv(row);
        } else if (format == "text") {
          out << "raw count: " << row.raw << "\nhurwitz number: " << row.hurwitz.num << "/"
              << row.hurwitz.den << "\nmatching sequences: " << row.matching << '\n';
        } else {
          throw twisth::ParseError("unknown format: " + format);
        }
        emit(out_path, out.str());
      } else {
        std::ostringstream out;
        twisth::enumerate_factorizations(
            m, lambda,
            [&](const twisth::TranspositionSeq& ts) {
              out << twisth::transposition_seq_to_string(ts) << '\n';
            },
            workers);
        emit(out_path, out.str());
      }
      return 0;
    }

    if (table_cmd->parsed()) {
      check_bounds(n_max, m_max, force);
      std::ostringstream out;
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      bool json = format == "json";
      if (!json && !format.empty() && format != "csv")
        throw twisth::ParseError("unknown format: " + format);
      if (!json) out << kTableHeader;
      for (int nn = 1; nn <= n_max; ++nn)
        for (int mm = 0; mm <= m_max; ++mm)
          for (const auto& lambda : twisth::partitions_of(nn)) {
            CountRow row = compute_row(mm, lambda, workers);
            if (json)
              rows.push_back(row_json(row));
            else
              out << row_csv(row);
          }
      if (json) out << rows.dump(2) << '\n';
      emit(out_path, out.str());
      return 0;
    }

    if (verify_cmd->parsed()) {
      check_bounds(n_max, m_max, force);
      twisth::VerifyOptions opts{n_max, m_max, workers, inject_fault};
      auto results = twisth::run_verification(opts);
      std::ostringstream out;
      for (const auto& suite : results) {
        out << (suite.pass() ? "PASS " : "FAIL ") << suite.name
            << " instances=" << suite.instances << " failures=" << suite.failures << '\n';
        for (const auto& note : suite.notes) out << "  " << note << '\n';
      }
      bool ok = twisth::all_pass(results);
      out << "RESULT " << (ok ? "PASS" : "FAIL") << '\n';
      emit(out_path, out.str());
      return ok ? 0 : kExitVerifyFail;
    }

    if (pmap_cmd->parsed()) {
      std::ostringstream out;
      for (const auto& line : nonblank_lines(slurp(in_path))) {
        auto ts = twisth::parse_transposition_seq(line, n);
        out << twisth::matching_seq_to_json(twisth::p_map(ts)) << '\n';
      }
      emit(out_path, out.str());
      return 0;
    }

    if (pre_cmd->parsed()) {
      std::ostringstream out;
      for (const auto& line : nonblank_lines(slurp(in_path))) {
        auto ms = twisth::parse_matching_seq_json(line);
        for (const auto& ts : twisth::p_preimages(ms))
          out << twisth::transposition_seq_to_string(ts) << '\n';
      }
      emit(out_path, out.str());
      return 0;
    }

    if (build_cmd->parsed()) {
      std::ostringstream out;
      for (const auto& line : nonblank_lines(slurp(in_path))) {
        auto ms = twisth::parse_matching_seq_json(line);
        if (ms.m() < 2) throw std::invalid_argument("m >= 2 required");
        auto c = twisth::build_constellation(ms);
        if (format == "dot")
          out << twisth::export_dot(c);
        else if (format.empty() || format == "json")
          out << twisth::export_structured(c) << '\n';
        else
          throw twisth::ParseError("unknown format: " + format);
      }
      emit(out_path, out.str());
      return 0;
    }

    if (extract_cmd->parsed()) {
      std::ostringstream out;
      for (const auto& line : nonblank_lines(slurp(in_path))) {
        auto c = twisth::import_structured(line);
        out << twisth::matching_seq_to_json(twisth::extract_matchings(c)) << '\n';
      }
      emit(out_path, out.str());
      return 0;
    }
  } catch (const BoundsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBounds;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBounds;
  } catch (const twisth::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
