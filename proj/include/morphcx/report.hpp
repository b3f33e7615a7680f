#pragma once

// Report assembly for the `ttr`, `entropy` and `compare` commands, and the TSV
// and JSON renderers. Input files are read by the caller; everything here is a
// pure function of the loaded texts and the configuration, so identical inputs
// give byte-identical output.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morphcx/complexity.hpp"
#include "morphcx/corpus.hpp"
#include "morphcx/morph_lm.hpp"
#include "morphcx/vocab_stats.hpp"

namespace morphcx {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

/// One input argument: `[LABEL[:UNIT]=]PATH`. "-" is stdin.
struct InputSpec {
  std::string label;
  std::optional<Unit> unit;
  std::string path;
  bool label_given = false;
};

/// Throws ValidationError on an empty path or unknown unit. Without LABEL the
/// label is the file name without directory and extension ("stdin" for "-").
InputSpec parse_input_spec(std::string_view arg);

struct LoadedInput {
  InputSpec spec;
  std::string text;
};

enum class ModelSelection { bigram, word_context, both };

ModelSelection parse_model_selection(std::string_view name);
std::string_view to_string(ModelSelection selection);
std::vector<ModelKind> model_kinds(ModelSelection selection);

struct ReportConfig {
  ParseOptions parse;
  /// Units used for inputs without an explicit `:UNIT`. With more than one
  /// unit, morph rows get a "_morph" label suffix.
  std::vector<Unit> units{Unit::word};
  ModelSelection models = ModelSelection::both;
  Eq1Variant eq1 = Eq1Variant::verbatim;
  /// Held-out evaluation text for `entropy`; train = eval when absent.
  std::optional<LoadedInput> eval;
};

struct RowError {
  std::string message;
  std::uint64_t event_count = 0;
  std::uint64_t skipped_words = 0;
};

struct ReportRow {
  std::string label;
  std::string source;
  VocabStats vocab_stats;
  std::optional<TypeTokenRatio> ttr;  // absent when the corpus has no tokens
  std::optional<ModelKind> model;     // set on entropy rows
  std::optional<ComplexityMeasures> measures;
  std::optional<RowError> error;
};

enum class Higher { a, b, equal, undefined };

std::string_view to_string(Higher higher);

struct Comparison {
  std::string measure;  // ttr, cross_entropy_bits, perplexity, normalized_entropy
  std::optional<ModelKind> model;
  std::string label_a;
  std::string label_b;
  std::optional<double> value_a;
  std::optional<double> value_b;
  Higher higher = Higher::undefined;
};

struct ComplexityReport {
  std::string command;
  std::string corpus_pair_id;
  std::vector<InputSpec> inputs;
  ReportConfig config;
  std::vector<ReportRow> rows;
  std::vector<Comparison> comparisons;
  std::vector<std::string> notes;
  std::string tool_version{kToolVersion};
};

/// One TTR row per (input, unit). Parse errors abort with the input named.
ComplexityReport cmd_ttr(const std::vector<LoadedInput>& inputs, const ReportConfig& config);

/// One row per (input, model) over the morph unit. Empty event streams
/// become per-row errors; other rows are still produced.
ComplexityReport cmd_entropy(const std::vector<LoadedInput>& inputs, const ReportConfig& config);

struct CompareInputs {
  LoadedInput a;
  LoadedInput b;
  std::vector<LoadedInput> a_variants;
  std::vector<LoadedInput> b_variants;
};

/// TTR rows for both sides and all variants (A, B, then variants interleaved
/// a0, b0, a1, b1, ...), entropy rows for every morph-unit input, and a
/// direction indicator for every measure both members of a pair have.
/// Throws AlignmentError unless every input has the same sentence count.
ComplexityReport cmd_compare(const CompareInputs& inputs, const ReportConfig& config);

std::string render_tsv(const ComplexityReport& report);
std::string render_json(const ComplexityReport& report);

}  // namespace morphcx
