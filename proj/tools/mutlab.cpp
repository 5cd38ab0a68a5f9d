// Command-line front end for the mutation engine.
//
// Exit codes (stable contract, used by the integration tests):
//   0  success / every checked identity holds
//   1  an identity or engine invariant failed
//   2  usage, parse or validation problem
//   3  the cyclicity pre-check rejected the input (hypothesis not met)

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutlab/cartan.hpp"
#include "mutlab/errors.hpp"
#include "mutlab/exchange.hpp"
#include "mutlab/explore.hpp"
#include "mutlab/io.hpp"
#include "mutlab/seed.hpp"
#include "mutlab/verify.hpp"

namespace {

using namespace mutlab;

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;

MutationSequence parse_sequence_flag(const std::string& text) {
  MutationSequence out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string token = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("sequence token '" + token + "' is not a vertex index");
    }
    if (token.size() > 6) {
      throw ParseError("sequence token '" + token + "' is out of range");
    }
    out.push_back(std::stoi(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<char> parse_emit_flag(const std::string& text) {
  std::vector<char> keys;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string token = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token != "b" && token != "c" && token != "g" && token != "a") {
      throw ValidationError("unknown emit key '" + token + "' (expected b, c, g or a)");
    }
    const char key = token[0];
    bool seen = false;
    for (char existing : keys) seen = seen || existing == key;
    if (!seen) keys.push_back(key);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return keys;
}

void apply_depth_cap(int depth) {
  if (depth < 1) throw ValidationError("depth must be at least 1");
  const char* cap_text = std::getenv("MUTLAB_MAX_DEPTH");
  if (cap_text == nullptr) return;
  const std::string cap_str(cap_text);
  const std::size_t digits_from = (!cap_str.empty() && cap_str[0] == '-') ? 1 : 0;
  if (cap_str.size() == digits_from || cap_str.size() > 18 ||
      cap_str.find_first_not_of("0123456789", digits_from) != std::string::npos) {
    throw ValidationError("MUTLAB_MAX_DEPTH is not an integer: '" + cap_str + "'");
  }
  if (static_cast<long long>(depth) > std::stoll(cap_str)) {
    throw ValidationError("depth " + std::to_string(depth) +
                          " exceeds the MUTLAB_MAX_DEPTH cap of " + cap_str);
  }
}

ExchangeMatrix exchange_from_document(const MatrixDocument& doc) {
  if (doc.kind != MatrixKind::exchange) {
    throw ValidationError(std::string("input document kind must be 'exchange', got '") +
                          kind_name(doc.kind) + "'");
  }
  return ExchangeMatrix::validate(doc.matrix);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open report file for writing: " + path);
  out << text;
  if (!out.good()) throw ValidationError("cannot write report file: " + path);
}

const char* label_for(char key) {
  switch (key) {
    case 'b': return "B";
    case 'c': return "C";
    case 'g': return "G";
    default: return "A";
  }
}

int run_mutate(const std::string& input_path, const std::string& seq_text,
               const std::optional<std::string>& emit_text, const std::string& format,
               bool require_reduced) {
  const MatrixDocument doc = load_matrix_document(input_path);
  const ExchangeMatrix b0 = exchange_from_document(doc);
  const MutationSequence w = parse_sequence_flag(seq_text);
  if (require_reduced && !is_reduced(w)) {
    throw NonReducedSequence("sequence " + sequence_to_string(w) + " is not reduced");
  }

  std::vector<char> keys;
  if (emit_text) {
    keys = parse_emit_flag(*emit_text);
  } else {
    keys = {'b', 'c', 'g'};
    // The companion chain is only defined along nonempty reduced sequences
    // on rank-3 inputs; emit it by default exactly when it exists.
    if (b0.rank() == 3 && !w.empty() && is_reduced(w)) keys.push_back('a');
  }

  const SeedState s = replay(b0, w);
  std::vector<std::pair<std::string, MatrixDocument>> emitted;
  for (char key : keys) {
    switch (key) {
      case 'b':
        emitted.push_back({"b", MatrixDocument{b0.rank(), MatrixKind::exchange,
                                               s.b.matrix()}});
        break;
      case 'c':
        emitted.push_back({"c", MatrixDocument{b0.rank(), MatrixKind::c, s.c}});
        break;
      case 'g':
        emitted.push_back({"g", MatrixDocument{b0.rank(), MatrixKind::g, s.g}});
        break;
      default:
        emitted.push_back({"a", MatrixDocument{b0.rank(), MatrixKind::cartan,
                                               cartan_along(b0, w).matrix()}});
        break;
    }
  }

  if (format == "json") {
    std::cout << render_mutate_report_json(doc, w, emitted) << "\n";
  } else {
    for (std::size_t i = 0; i < emitted.size(); ++i) {
      if (i > 0) std::cout << "\n";
      std::cout << label_for(emitted[i].first[0]) << "^" << sequence_to_string(w)
                << ":\n"
                << render_matrix_text(emitted[i].second.matrix);
    }
  }
  return kExitPass;
}

void print_counts_line(const char* name, const CheckCounts& c) {
  std::cout << name << ": " << c.passed << "/" << c.instances << "\n";
}

int run_verify(const std::string& input_path, int depth, std::optional<int> first,
               int jobs, const std::string& report_path, const std::string& format) {
  const MatrixDocument doc = load_matrix_document(input_path);
  const ExchangeMatrix b0 = exchange_from_document(doc);
  apply_depth_cap(depth);

  const CyclicityResult cyc = check_mutation_cyclic_bounded(b0, depth);
  if (!cyc.cyclic_to_depth) {
    SweepReport empty;
    empty.depth = depth;
    empty.first = first;
    const std::string json_text = render_sweep_report_json(doc, empty, cyc);
    if (!report_path.empty()) write_text_file(report_path, json_text + "\n");
    if (format == "json") {
      std::cout << json_text << "\n";
    } else {
      std::cout << "cyclicity pre-check: FAILED, counterexample w="
                << sequence_to_string(*cyc.counterexample) << "\n"
                << "result: HYPOTHESIS NOT MET (input is not mutation-cyclic within depth "
                << depth << ")\n";
    }
    return kExitHypothesis;
  }

  const SweepReport rep = sweep(b0, depth, first, jobs);
  const std::string json_text = render_sweep_report_json(doc, rep, cyc);
  if (!report_path.empty()) write_text_file(report_path, json_text + "\n");

  if (format == "json") {
    std::cout << json_text << "\n";
  } else {
    std::cout << "cyclicity pre-check: passed to depth " << depth << "\n"
              << "nodes visited: " << rep.total.nodes << "\n";
    print_counts_line("theorem", rep.total.theorem);
    print_counts_line("corollary", rep.total.corollary);
    print_counts_line("cvector", rep.total.cvector);
    print_counts_line("duality", rep.total.duality);
    print_counts_line("companion", rep.total.companion);
    print_counts_line("coherence", rep.total.coherence);
    std::cout << "epsilon = -1 mutations: " << rep.total.epsilon_minus_one << "\n"
              << "max |entry|: " << to_decimal(rep.total.max_abs_entry) << "\n"
              << "wall time: " << rep.wall_time_ms << " ms\n";
    if (rep.first_failure) {
      const VerificationReport& f = *rep.first_failure;
      std::cout << "first failure: " << subject_name(f.subject) << " at w="
                << sequence_to_string(f.sequence);
      if (f.m) std::cout << ", m=" << *f.m;
      std::cout << "\n  " << f.witness << "\n";
    }
    std::cout << "result: " << (rep.all_passed() ? "PASS" : "FAIL") << "\n";
  }
  return rep.all_passed() ? kExitPass : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mutlab: exact-integer engine for rank-3 quiver mutation"};
  app.require_subcommand(1);

  std::string mut_input;
  std::string mut_seq;
  std::optional<std::string> mut_emit;
  std::string mut_format = "text";
  bool mut_require_reduced = false;
  CLI::App* mutate_cmd = app.add_subcommand(
      "mutate", "Apply a mutation sequence and print the resulting matrices");
  mutate_cmd->add_option("--input", mut_input, "JSON exchange-matrix document")
      ->required();
  mutate_cmd->add_option(
      "--seq", mut_seq,
      "Comma-separated 1-based vertex indices; empty means the empty sequence");
  mutate_cmd->add_option("--emit", mut_emit,
                         "Comma-separated subset of b,c,g,a (default: b,c,g plus a "
                         "when the companion chain is defined)");
  mutate_cmd->add_option("--format", mut_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  mutate_cmd->add_flag("--require-reduced", mut_require_reduced,
                       "Reject non-reduced sequences");

  std::string ver_input;
  int ver_depth = 6;
  std::optional<int> ver_first;
  int ver_jobs = 1;
  std::string ver_report;
  std::string ver_format = "text";
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the cyclicity pre-check and the exhaustive identity sweep");
  verify_cmd->add_option("--input", ver_input, "JSON exchange-matrix document")
      ->required();
  verify_cmd->add_option("--depth", ver_depth, "Sweep depth (default 6)");
  verify_cmd->add_option("--first", ver_first,
                         "Restrict to sequences starting at this vertex");
  verify_cmd->add_option("--jobs", ver_jobs, "Worker threads (default 1)");
  verify_cmd->add_option("--report", ver_report, "Write the JSON report to this file");
  verify_cmd->add_option("--format", ver_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(mutate_cmd)) {
      return run_mutate(mut_input, mut_seq, mut_emit, mut_format, mut_require_reduced);
    }
    return run_verify(ver_input, ver_depth, ver_first, ver_jobs, ver_report,
                      ver_format);
  } catch (const InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitIdentityFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
