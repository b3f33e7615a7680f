#include "morphcx/report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <filesystem>
#include <future>
#include <json.hpp>

#include "morphcx/error.hpp"

namespace morphcx {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UnitRequest {
  Unit unit;
  std::string label;
};

std::vector<UnitRequest> unit_requests(const InputSpec& spec, const std::vector<Unit>& units) {
  if (spec.unit) return {{*spec.unit, spec.label}};
  std::vector<UnitRequest> out;
  for (const auto unit : units) {
    const bool suffix = units.size() > 1 && unit == Unit::morph;
    out.push_back({unit, suffix ? spec.label + "_morph" : spec.label});
  }
  return out;
}

std::string describe(const InputSpec& spec) {
  return spec.path == spec.label ? spec.path : fmt::format("{} ({})", spec.label, spec.path);
}

SegmentedCorpus load(const LoadedInput& input, const ParseOptions& options) {
  try {
    return parse_segmented_corpus(input.text, input.spec.label, options);
  } catch (const Error& e) {
    throw Error(fmt::format("{}: {}", describe(input.spec), e.what()));
  }
}

ReportRow ttr_row(const SegmentedCorpus& corpus, const InputSpec& spec, const UnitRequest& req) {
  ReportRow row;
  row.label = req.label;
  row.source = spec.path;
  row.vocab_stats = compute_vocab_stats(corpus, req.unit);
  if (row.vocab_stats.tokens > 0) {
    row.ttr = ttr_percent(row.vocab_stats);
  } else {
    row.error = RowError{"TTR is undefined for an empty corpus"};
  }
  return row;
}

ReportRow entropy_row(const SegmentedCorpus& train, const SegmentedCorpus& eval,
                      const InputSpec& spec, const std::string& label, ModelKind kind,
                      const ReportConfig& config) {
  ReportRow row = ttr_row(train, spec, {Unit::morph, label});
  row.error.reset();
  row.model = kind;
  try {
    row.measures = evaluate(train, eval, kind, EvaluateOptions{config.eq1});
  } catch (const EmptyEventStreamError& e) {
    row.error = RowError{"0 events", 0, e.skipped_words()};
  } catch (const ModelError& e) {
    row.error = RowError{e.what()};
  }
  return row;
}

struct InputResult {
  std::vector<ReportRow> rows;
  std::size_t sentence_count = 0;
  ParseDiagnostics diagnostics;
};

// parse -> vocab -> (optional) fit/evaluate for one input.
InputResult process(const LoadedInput& input, const ReportConfig& config, bool ttr_rows,
                    bool entropy_rows, const SegmentedCorpus* eval) {
  InputResult result;
  const SegmentedCorpus corpus = load(input, config.parse);
  result.sentence_count = corpus.sentence_count();
  result.diagnostics = corpus.diagnostics();
  if (ttr_rows) {
    for (const auto& req : unit_requests(input.spec, config.units)) {
      result.rows.push_back(ttr_row(corpus, input.spec, req));
    }
  }
  if (entropy_rows) {
    for (const auto kind : model_kinds(config.models)) {
      result.rows.push_back(
          entropy_row(corpus, eval ? *eval : corpus, input.spec, input.spec.label, kind, config));
    }
  }
  return result;
}

// Runs `process` for every input concurrently; results come back in input order.
template <typename Fn>
std::vector<InputResult> run_all(const std::vector<const LoadedInput*>& inputs, Fn&& fn) {
  std::vector<std::future<InputResult>> futures;
  futures.reserve(inputs.size());
  for (const auto* input : inputs) {
    futures.push_back(std::async(std::launch::async, [&fn, input] { return fn(*input); }));
  }
  std::vector<InputResult> results;
  results.reserve(inputs.size());
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

void add_diagnostic_notes(ComplexityReport& report, const InputSpec& spec,
                          const ParseDiagnostics& d) {
  if (d.empty_lines > 0) {
    report.notes.push_back(fmt::format("{}: {} empty line(s) skipped", spec.label, d.empty_lines));
  }
  if (d.stripped_tokens > 0) {
    report.notes.push_back(
        fmt::format("{}: {} punctuation token(s) stripped", spec.label, d.stripped_tokens));
  }
}

std::string join_labels(const std::vector<InputSpec>& inputs, std::string_view sep) {
  std::string out;
  for (const auto& spec : inputs) {
    if (!out.empty()) out += sep;
    out += spec.label;
  }
  return out;
}

Higher compare_values(double a, double b) {
  if (a > b) return Higher::a;
  if (b > a) return Higher::b;
  return Higher::equal;
}

Higher compare_ttr(const TypeTokenRatio& a, const TypeTokenRatio& b) {
  __extension__ using uint128 = unsigned __int128;
  const auto lhs = static_cast<uint128>(a.types) * b.tokens;
  const auto rhs = static_cast<uint128>(b.types) * a.tokens;
  if (lhs > rhs) return Higher::a;
  if (rhs > lhs) return Higher::b;
  return Higher::equal;
}

const ReportRow* find_row(const std::vector<ReportRow>& rows, const std::string& label,
                          std::optional<ModelKind> model) {
  for (const auto& row : rows) {
    if (row.label == label && row.model == model) return &row;
  }
  return nullptr;
}

void compare_pair(ComplexityReport& report, const std::string& label_a,
                  const std::string& label_b) {
  const auto* ta = find_row(report.rows, label_a, std::nullopt);
  const auto* tb = find_row(report.rows, label_b, std::nullopt);
  if (ta && tb) {
    Comparison c{"ttr", std::nullopt, label_a, label_b, std::nullopt, std::nullopt, Higher::undefined};
    if (ta->ttr) c.value_a = ta->ttr->exact;
    if (tb->ttr) c.value_b = tb->ttr->exact;
    c.higher = ta->ttr && tb->ttr ? compare_ttr(*ta->ttr, *tb->ttr) : Higher::undefined;
    report.comparisons.push_back(std::move(c));
  }
  for (const auto kind : model_kinds(report.config.models)) {
    const auto* ea = find_row(report.rows, label_a, kind);
    const auto* eb = find_row(report.rows, label_b, kind);
    if (!ea || !eb) continue;
    const auto& ma = ea->measures;
    const auto& mb = eb->measures;
    auto add = [&](const char* name, auto getter) {
      Comparison c{name, kind, label_a, label_b, std::nullopt, std::nullopt, Higher::undefined};
      if (ma) c.value_a = getter(*ma);
      if (mb) c.value_b = getter(*mb);
      c.higher = c.value_a && c.value_b ? compare_values(*c.value_a, *c.value_b) : Higher::undefined;
      report.comparisons.push_back(std::move(c));
    };
    add("cross_entropy_bits",
        [](const ComplexityMeasures& m) -> std::optional<double> { return m.cross_entropy_bits; });
    add("perplexity",
        [](const ComplexityMeasures& m) -> std::optional<double> { return m.perplexity; });
    add("normalized_entropy",
        [](const ComplexityMeasures& m) -> std::optional<double> { return m.normalized_entropy; });
  }
}

std::string fixed3(double v) { return fmt::format("{:.3f}", v); }

}  // namespace

InputSpec parse_input_spec(std::string_view arg) {
  InputSpec spec;
  const auto eq = arg.find('=');
  std::string_view path = arg;
  if (eq != std::string_view::npos) {
    std::string_view head = arg.substr(0, eq);
    path = arg.substr(eq + 1);
    const auto colon = head.find(':');
    if (colon != std::string_view::npos) {
      spec.unit = parse_unit(head.substr(colon + 1));
      head = head.substr(0, colon);
    }
    spec.label = std::string(head);
    spec.label_given = !spec.label.empty();
  }
  if (path.empty()) throw ValidationError(fmt::format("input '{}' has an empty path", arg));
  spec.path = std::string(path);
  if (spec.label.empty()) {
    spec.label = spec.path == "-" ? "stdin" : std::filesystem::path(spec.path).stem().string();
  }
  return spec;
}

ModelSelection parse_model_selection(std::string_view name) {
  if (name == "both") return ModelSelection::both;
  return parse_model_kind(name) == ModelKind::bigram ? ModelSelection::bigram
                                                     : ModelSelection::word_context;
}

std::string_view to_string(ModelSelection selection) {
  switch (selection) {
    case ModelSelection::bigram:
      return "bigram";
    case ModelSelection::word_context:
      return "word-context";
    case ModelSelection::both:
      return "both";
  }
  return "both";
}

std::vector<ModelKind> model_kinds(ModelSelection selection) {
  switch (selection) {
    case ModelSelection::bigram:
      return {ModelKind::bigram};
    case ModelSelection::word_context:
      return {ModelKind::word_context};
    case ModelSelection::both:
      return {ModelKind::word_context, ModelKind::bigram};
  }
  return {};
}

std::string_view to_string(Higher higher) {
  switch (higher) {
    case Higher::a:
      return "a";
    case Higher::b:
      return "b";
    case Higher::equal:
      return "equal";
    case Higher::undefined:
      return "undefined";
  }
  return "undefined";
}

ComplexityReport cmd_ttr(const std::vector<LoadedInput>& inputs, const ReportConfig& config) {
  ComplexityReport report;
  report.command = "ttr";
  report.config = config;
  report.config.eval.reset();
  std::vector<const LoadedInput*> ptrs;
  for (const auto& in : inputs) {
    report.inputs.push_back(in.spec);
    ptrs.push_back(&in);
  }
  report.corpus_pair_id = join_labels(report.inputs, "+");
  auto results = run_all(ptrs, [&](const LoadedInput& in) {
    return process(in, config, true, false, nullptr);
  });
  for (std::size_t i = 0; i < results.size(); ++i) {
    add_diagnostic_notes(report, inputs[i].spec, results[i].diagnostics);
    for (auto& row : results[i].rows) report.rows.push_back(std::move(row));
  }
  return report;
}

ComplexityReport cmd_entropy(const std::vector<LoadedInput>& inputs, const ReportConfig& config) {
  ComplexityReport report;
  report.command = "entropy";
  report.config = config;
  std::vector<const LoadedInput*> ptrs;
  for (const auto& in : inputs) {
    report.inputs.push_back(in.spec);
    ptrs.push_back(&in);
  }
  report.corpus_pair_id = join_labels(report.inputs, "+");

  std::optional<SegmentedCorpus> eval;
  if (config.eval) {
    eval = load(*config.eval, config.parse);
    report.notes.push_back(fmt::format("models evaluated on held-out text {}", config.eval->spec.path));
  }
  auto results = run_all(ptrs, [&](const LoadedInput& in) {
    return process(in, config, false, true, eval ? &*eval : nullptr);
  });
  for (std::size_t i = 0; i < results.size(); ++i) {
    add_diagnostic_notes(report, inputs[i].spec, results[i].diagnostics);
    for (auto& row : results[i].rows) report.rows.push_back(std::move(row));
  }
  return report;
}

ComplexityReport cmd_compare(const CompareInputs& inputs, const ReportConfig& base_config) {
  ReportConfig config = base_config;
  config.eval.reset();
  // Each side is reported at a single unit.
  config.units.resize(1);

  ComplexityReport report;
  report.command = "compare";
  report.config = config;

  std::vector<const LoadedInput*> ordered{&inputs.a, &inputs.b};
  const auto pairs = std::max(inputs.a_variants.size(), inputs.b_variants.size());
  for (std::size_t i = 0; i < pairs; ++i) {
    if (i < inputs.a_variants.size()) ordered.push_back(&inputs.a_variants[i]);
    if (i < inputs.b_variants.size()) ordered.push_back(&inputs.b_variants[i]);
  }
  for (const auto* in : ordered) report.inputs.push_back(in->spec);
  report.corpus_pair_id = inputs.a.spec.label + "-" + inputs.b.spec.label;

  auto results = run_all(ordered, [&](const LoadedInput& in) {
    const Unit unit = in.spec.unit.value_or(config.units.front());
    return process(in, config, true, unit == Unit::morph, nullptr);
  });

  // Every rendering of the parallel text must have the same line count.
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].sentence_count != results[0].sentence_count) {
      throw AlignmentError(
          results[0].sentence_count, results[i].sentence_count,
          fmt::format("{} and {} are not line-aligned: {} != {} sentences", inputs.a.spec.label,
                      ordered[i]->spec.label, results[0].sentence_count,
                      results[i].sentence_count));
    }
  }

  for (std::size_t i = 0; i < results.size(); ++i) {
    add_diagnostic_notes(report, ordered[i]->spec, results[i].diagnostics);
    for (auto& row : results[i].rows) report.rows.push_back(std::move(row));
  }

  compare_pair(report, inputs.a.spec.label, inputs.b.spec.label);
  for (std::size_t i = 0; i < std::min(inputs.a_variants.size(), inputs.b_variants.size()); ++i) {
    compare_pair(report, inputs.a_variants[i].spec.label, inputs.b_variants[i].spec.label);
  }
  return report;
}

// --- Rendering -------------------------------------------------------------------

namespace {

std::string config_line(const ComplexityReport& r) {
  std::string units;
  for (const auto u : r.config.units) {
    if (!units.empty()) units += ',';
    units += to_string(u);
  }
  return fmt::format(
      "# config morph_sep={} lowercase={} strip_punct={} nfc={} unit={} model={} eq1={} "
      "boundary=line-start entropy=bits-per-event eval_file={}",
      encode_utf8(r.config.parse.morph_delimiter), r.config.parse.lowercase,
      r.config.parse.strip_punct, r.config.parse.nfc, units, to_string(r.config.models),
      to_string(r.config.eq1), r.config.eval ? r.config.eval->spec.path : "-");
}

ordered_json config_json(const ComplexityReport& r) {
  ordered_json units = ordered_json::array();
  for (const auto u : r.config.units) units.push_back(std::string(to_string(u)));
  ordered_json inputs = ordered_json::array();
  for (const auto& spec : r.inputs) {
    inputs.push_back({{"label", spec.label},
                      {"unit", spec.unit ? ordered_json(std::string(to_string(*spec.unit)))
                                         : ordered_json(nullptr)},
                      {"path", spec.path}});
  }
  return {
      {"morph_sep", encode_utf8(r.config.parse.morph_delimiter)},
      {"lowercase", r.config.parse.lowercase},
      {"strip_punct", r.config.parse.strip_punct},
      {"nfc", r.config.parse.nfc},
      {"units", units},
      {"model", std::string(to_string(r.config.models))},
      {"eq1_variant", std::string(to_string(r.config.eq1))},
      {"boundary", "line-start"},
      {"entropy_unit", "bits-per-event"},
      {"eval_file", r.config.eval ? ordered_json(r.config.eval->spec.path) : ordered_json(nullptr)},
      {"inputs", inputs},
  };
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

std::string render_tsv(const ComplexityReport& r) {
  std::string out = fmt::format("# morphcx {} {} corpus_pair={}\n", r.tool_version, r.command,
                                r.corpus_pair_id);
  out += config_line(r) + '\n';
  for (const auto& note : r.notes) out += "# note: " + note + '\n';
  out +=
      "label\tunit\ttokens\ttypes\tttr\tmodel\tevents\tvocab\tskipped_words\tH_bits\tperplexity"
      "\tH_norm\tstatus\n";
  for (const auto& row : r.rows) {
    std::string model = "-", events = "-", vocab = "-", skipped = "-", h = "-", pp = "-",
                hn = "-";
    if (row.model) model = std::string(to_string(*row.model));
    if (row.measures) {
      const auto& m = *row.measures;
      events = std::to_string(m.event_count);
      vocab = std::to_string(m.vocab_size);
      skipped = std::to_string(m.skipped_words);
      h = fixed3(m.cross_entropy_bits);
      pp = fixed3(m.perplexity);
      hn = m.normalized_entropy ? fixed3(*m.normalized_entropy) : "undefined";
    } else if (row.error && row.model) {
      events = std::to_string(row.error->event_count);
      skipped = std::to_string(row.error->skipped_words);
    }
    const std::string status = row.error ? "error: " + row.error->message : "ok";
    out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", row.label,
                       to_string(row.vocab_stats.unit), row.vocab_stats.tokens,
                       row.vocab_stats.types, row.ttr ? row.ttr->display : "-", model, events,
                       vocab, skipped, h, pp, hn, status);
  }
  if (!r.comparisons.empty()) {
    out += "\n# comparisons\nmeasure\tmodel\tlabel_a\tlabel_b\tvalue_a\tvalue_b\thigher\n";
    for (const auto& c : r.comparisons) {
      auto show = [&](const std::optional<double>& v, const std::string& label) -> std::string {
        if (!v) return "-";
        if (c.measure == "ttr") {
          const auto* row = find_row(r.rows, label, std::nullopt);
          return row && row->ttr ? row->ttr->display : "-";
        }
        return fixed3(*v);
      };
      out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\n", c.measure,
                         c.model ? std::string(to_string(*c.model)) : "-", c.label_a, c.label_b,
                         show(c.value_a, c.label_a), show(c.value_b, c.label_b),
                         to_string(c.higher));
    }
  }
  return out;
}

std::string render_json(const ComplexityReport& r) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json j;
    j["label"] = row.label;
    j["source"] = row.source;
    j["unit"] = std::string(to_string(row.vocab_stats.unit));
    j["tokens"] = row.vocab_stats.tokens;
    j["types"] = row.vocab_stats.types;
    j["ttr"] = row.ttr ? ordered_json{{"exact", row.ttr->exact}, {"display", row.ttr->display}}
                       : ordered_json(nullptr);
    j["model"] = row.model ? ordered_json(std::string(to_string(*row.model))) : ordered_json(nullptr);
    if (row.measures) {
      const auto& m = *row.measures;
      j["measures"] = {
          {"cross_entropy_bits", m.cross_entropy_bits},
          {"perplexity", m.perplexity},
          {"normalized_entropy", optional_number(m.normalized_entropy)},
          {"vocab_size", m.vocab_size},
          {"event_count", m.event_count},
          {"skipped_words", m.skipped_words},
          {"display",
           {{"cross_entropy_bits", fixed3(m.cross_entropy_bits)},
            {"perplexity", fixed3(m.perplexity)},
            {"normalized_entropy",
             m.normalized_entropy ? ordered_json(fixed3(*m.normalized_entropy))
                                  : ordered_json(nullptr)}}},
      };
    } else {
      j["measures"] = nullptr;
    }
    j["error"] = row.error ? ordered_json{{"message", row.error->message},
                                          {"event_count", row.error->event_count},
                                          {"skipped_words", row.error->skipped_words}}
                           : ordered_json(nullptr);
    rows.push_back(std::move(j));
  }
  ordered_json comparisons = ordered_json::array();
  for (const auto& c : r.comparisons) {
    comparisons.push_back({
        {"measure", c.measure},
        {"model", c.model ? ordered_json(std::string(to_string(*c.model))) : ordered_json(nullptr)},
        {"label_a", c.label_a},
        {"label_b", c.label_b},
        {"value_a", optional_number(c.value_a)},
        {"value_b", optional_number(c.value_b)},
        {"higher", std::string(to_string(c.higher))},
    });
  }
  ordered_json doc = {
      {"schema", "morphcx.report"},
      {"schema_version", kReportSchemaVersion},
      {"tool_version", r.tool_version},
      {"command", r.command},
      {"corpus_pair_id", r.corpus_pair_id},
      {"config", config_json(r)},
      {"rows", rows},
      {"comparisons", comparisons},
      {"notes", r.notes},
  };
  return doc.dump(2) + '\n';
}

}  // namespace morphcx
