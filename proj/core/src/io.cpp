#include "mutlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mutlab/errors.hpp"

namespace mutlab {

using nlohmann::json;

const char* kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::exchange: return "exchange";
    case MatrixKind::cartan: return "cartan";
    case MatrixKind::c: return "c";
    case MatrixKind::g: return "g";
  }
  return "unknown";
}

MatrixKind kind_from_name(const std::string& name) {
  if (name == "exchange") return MatrixKind::exchange;
  if (name == "cartan") return MatrixKind::cartan;
  if (name == "c") return MatrixKind::c;
  if (name == "g") return MatrixKind::g;
  throw ParseError("field 'kind' must be one of exchange/cartan/c/g, got '" + name +
                   "'");
}

namespace {

Int entry_from_json(const json& e, int row, int col) {
  const std::string where =
      "matrix entry (" + std::to_string(row) + "," + std::to_string(col) + ")";
  if (e.is_string()) {
    try {
      return parse_decimal(e.get<std::string>());
    } catch (const std::exception& ex) {
      throw ParseError(where + ": " + ex.what());
    }
  }
  if (e.is_number_integer()) return Int(e.get<long long>());
  if (e.is_number_unsigned()) return Int(e.get<unsigned long long>());
  throw ParseError(where + " must be a decimal string or an integer");
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 1; i <= m.size(); ++i) {
    json row = json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(to_decimal(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json document_to_json(const MatrixDocument& doc) {
  return json{{"rank", doc.rank},
              {"kind", kind_name(doc.kind)},
              {"matrix", matrix_to_json(doc.matrix)}};
}

json sequence_to_json(const MutationSequence& w) {
  json out = json::array();
  for (int k : w) out.push_back(k);
  return out;
}

json counts_to_json(const CheckCounts& c) {
  return json{{"instances", c.instances}, {"passed", c.passed}};
}

json aggregate_to_json(const SweepAggregate& a) {
  return json{{"nodes", a.nodes},
              {"theorem", counts_to_json(a.theorem)},
              {"corollary", counts_to_json(a.corollary)},
              {"cvector", counts_to_json(a.cvector)},
              {"duality", counts_to_json(a.duality)},
              {"companion", counts_to_json(a.companion)},
              {"coherence", counts_to_json(a.coherence)},
              {"epsilon_minus_one_count", a.epsilon_minus_one},
              {"max_abs_entry", to_decimal(a.max_abs_entry)}};
}

json failure_to_json(const VerificationReport& r) {
  json out{{"subject", subject_name(r.subject)},
           {"sequence", sequence_to_json(r.sequence)},
           {"witness", r.witness}};
  if (r.m) out["m"] = *r.m;
  return out;
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace

MatrixDocument parse_matrix_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document root must be a JSON object");

  if (!doc.contains("rank") || !doc["rank"].is_number_integer()) {
    throw ParseError("field 'rank' must be present and an integer");
  }
  const long long rank_raw = doc["rank"].get<long long>();
  if (rank_raw < 1 || rank_raw > 64) {
    throw ParseError("field 'rank' must be between 1 and 64");
  }
  const int rank = static_cast<int>(rank_raw);

  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw ParseError("field 'kind' must be present and a string");
  }
  const MatrixKind kind = kind_from_name(doc["kind"].get<std::string>());

  if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw ParseError("field 'matrix' must be present and an array of rows");
  }
  const json& rows = doc["matrix"];
  if (static_cast<int>(rows.size()) != rank) {
    throw ParseError("field 'matrix' has " + std::to_string(rows.size()) +
                     " rows, expected rank " + std::to_string(rank));
  }
  IntMatrix m(rank);
  for (int i = 1; i <= rank; ++i) {
    const json& row = rows[static_cast<std::size_t>(i - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != rank) {
      throw ParseError("matrix row " + std::to_string(i) + " must be an array of " +
                       std::to_string(rank) + " entries");
    }
    for (int j = 1; j <= rank; ++j) {
      m.at(i, j) = entry_from_json(row[static_cast<std::size_t>(j - 1)], i, j);
    }
  }
  return MatrixDocument{rank, kind, std::move(m)};
}

MatrixDocument load_matrix_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) throw ParseError("cannot read input file: " + path);
  return parse_matrix_document(buffer.str());
}

std::string serialize_matrix_document(const MatrixDocument& doc, bool pretty) {
  return dump(document_to_json(doc), pretty);
}

std::string render_matrix_text(const IntMatrix& m) {
  std::size_t width = 1;
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      width = std::max(width, to_decimal(m.at(i, j)).size());
    }
  }
  std::ostringstream out;
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      const std::string entry = to_decimal(m.at(i, j));
      out << (j > 1 ? "  " : "");
      out << std::string(width - entry.size(), ' ') << entry;
    }
    out << '\n';
  }
  return out.str();
}

std::string render_mutate_report_json(
    const MatrixDocument& input, const MutationSequence& w,
    const std::vector<std::pair<std::string, MatrixDocument>>& emitted, bool pretty) {
  json out{{"input", document_to_json(input)}, {"sequence", sequence_to_json(w)}};
  for (const auto& [key, doc] : emitted) out[key] = document_to_json(doc);
  return dump(out, pretty);
}

std::string render_sweep_report_json(const MatrixDocument& input,
                                     const SweepReport& report,
                                     const CyclicityResult& cyclicity, bool pretty) {
  json out{{"input", document_to_json(input)},
           {"depth", report.depth},
           {"nodes", report.total.nodes},
           {"theorem", counts_to_json(report.total.theorem)},
           {"corollary", counts_to_json(report.total.corollary)},
           {"cvector", counts_to_json(report.total.cvector)},
           {"duality", counts_to_json(report.total.duality)},
           {"companion", counts_to_json(report.total.companion)},
           {"coherence", counts_to_json(report.total.coherence)},
           {"epsilon_minus_one_count", report.total.epsilon_minus_one},
           {"max_abs_entry", to_decimal(report.total.max_abs_entry)},
           {"cyclic_to_depth", cyclicity.cyclic_to_depth},
           {"wall_time_ms", report.wall_time_ms}};
  if (report.first) out["first"] = *report.first;
  if (cyclicity.counterexample) {
    out["cyclic_counterexample"] = sequence_to_json(*cyclicity.counterexample);
  }
  json failures = json::array();
  if (report.first_failure) failures.push_back(failure_to_json(*report.first_failure));
  out["failures"] = std::move(failures);
  json by_first = json::object();
  for (int i = 1; i <= 3; ++i) {
    if (report.first && *report.first != i) continue;
    by_first[std::to_string(i)] = aggregate_to_json(report.by_first[i - 1]);
  }
  out["by_first"] = std::move(by_first);
  return dump(out, pretty);
}

}  // namespace mutlab
