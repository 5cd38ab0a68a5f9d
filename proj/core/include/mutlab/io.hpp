#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mutlab/explore.hpp"
#include "mutlab/matrix.hpp"
#include "mutlab/verify.hpp"

namespace mutlab {

enum class MatrixKind { exchange, cartan, c, g };

const char* kind_name(MatrixKind k);

/// Inverse of kind_name; throws ParseError on anything else.
MatrixKind kind_from_name(const std::string& name);

/// Serialization unit for one matrix:
///
///   {"rank":3,"kind":"exchange","matrix":[["0","-3","3"],["3","0","-3"],["-3","3","0"]]}
///
/// Entries are emitted as decimal strings, always: they outgrow 64-bit
/// integers at modest depth and native JSON numbers silently lose precision
/// in most consumers. On input both strings and JSON integers are accepted.
struct MatrixDocument {
  int rank = 0;
  MatrixKind kind = MatrixKind::exchange;
  IntMatrix matrix;

  bool operator==(const MatrixDocument&) const = default;
};

/// Parses a document from JSON text; throws ParseError naming the offending
/// field on any malformation (bad JSON, missing field, wrong type, rank
/// mismatch, non-integer entry).
MatrixDocument parse_matrix_document(const std::string& json_text);

/// Reads the file and parses it; file-access problems also surface as
/// ParseError (the CLI maps those to exit 2).
MatrixDocument load_matrix_document(const std::string& path);

std::string serialize_matrix_document(const MatrixDocument& doc, bool pretty = true);

/// Plain-text rendering: one line per row, entries right-aligned to the
/// widest entry; trailing newline included.
std::string render_matrix_text(const IntMatrix& m);

/// JSON for the `mutate` subcommand: the input echoed, the sequence applied,
/// and the requested matrices in emission order keyed by their letter.
std::string render_mutate_report_json(
    const MatrixDocument& input, const MutationSequence& w,
    const std::vector<std::pair<std::string, MatrixDocument>>& emitted,
    bool pretty = true);

/// JSON for the `verify` subcommand: the input echoed, the cyclicity
/// pre-check outcome, total and per-first-index counters, epsilon statistics,
/// the largest entry seen (decimal string), wall time, and at most one
/// failure witness.
std::string render_sweep_report_json(const MatrixDocument& input,
                                     const SweepReport& report,
                                     const CyclicityResult& cyclicity,
                                     bool pretty = true);

}  // namespace mutlab
