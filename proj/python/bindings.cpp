#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "morphcx/complexity.hpp"
#include "morphcx/corpus.hpp"
#include "morphcx/error.hpp"
#include "morphcx/json_io.hpp"
#include "morphcx/morph_lm.hpp"
#include "morphcx/report.hpp"
#include "morphcx/synthlang.hpp"
#include "morphcx/vocab_stats.hpp"

namespace py = pybind11;
using namespace morphcx;

namespace {

ParseOptions make_options(const std::string& morph_sep, bool lowercase, bool strip_punct,
                          bool nfc) {
  ParseOptions o;
  o.morph_delimiter = parse_delimiter(morph_sep);
  o.lowercase = lowercase;
  o.strip_punct = strip_punct;
  o.nfc = nfc;
  return o;
}

std::vector<std::vector<std::vector<std::string>>> nested(const SegmentedCorpus& c) {
  std::vector<std::vector<std::vector<std::string>>> out;
  out.reserve(c.sentence_count());
  for (const auto& s : c.sentences()) {
    auto& line = out.emplace_back();
    for (const auto& w : s.words) line.push_back(w.morphs());
  }
  return out;
}

std::vector<LoadedInput> load_inputs(const std::vector<std::pair<std::string, std::string>>& in) {
  std::vector<LoadedInput> out;
  for (const auto& [spec, text] : in) out.push_back({parse_input_spec(spec), text});
  return out;
}

ReportConfig make_config(const std::string& morph_sep, bool lowercase, bool strip_punct, bool nfc,
                         const std::vector<std::string>& units, const std::string& model,
                         bool eq1_standard_laplace) {
  ReportConfig config;
  config.parse = make_options(morph_sep, lowercase, strip_punct, nfc);
  if (!units.empty()) {
    config.units.clear();
    for (const auto& u : units) config.units.push_back(parse_unit(u));
  }
  config.models = parse_model_selection(model);
  config.eq1 = eq1_standard_laplace ? Eq1Variant::standard_laplace : Eq1Variant::verbatim;
  return config;
}

std::string render(const ComplexityReport& report, const std::string& format) {
  if (format == "json") return render_json(report);
  if (format == "tsv") return render_tsv(report);
  throw ValidationError("format must be 'tsv' or 'json'");
}

#define MORPHCX_REPORT_ARGS                                                           \
  py::kw_only(), py::arg("format") = "json", py::arg("morph_sep") = "|",              \
      py::arg("lowercase") = false, py::arg("strip_punct") = false,                   \
      py::arg("nfc") = false, py::arg("units") = std::vector<std::string>{},          \
      py::arg("model") = "both", py::arg("eq1_standard_laplace") = false

}  // namespace

PYBIND11_MODULE(_morphcx, m) {
  m.doc() = "Type/token ratio and morph-model complexity measures";

  auto error = py::register_exception<Error>(m, "Error");
  auto undefined = py::register_exception<UndefinedMeasureError>(m, "UndefinedMeasureError", error);
  py::register_exception<EmptyEventStreamError>(m, "EmptyEventStreamError", undefined);
  py::register_exception<DecodeError>(m, "DecodeError", error);
  py::register_exception<ValidationError>(m, "ValidationError", error);
  py::register_exception<AlignmentError>(m, "AlignmentError", error);
  py::register_exception<ModelError>(m, "ModelError", error);

  py::class_<SegmentedCorpus>(m, "Corpus")
      .def_property_readonly("sentences", &nested)
      .def_property_readonly("language_tag", &SegmentedCorpus::language_tag)
      .def_property_readonly("sentence_count", &SegmentedCorpus::sentence_count)
      .def_property_readonly("token_count", &SegmentedCorpus::token_count)
      .def_property_readonly("morph_count", &SegmentedCorpus::morph_count)
      .def_property_readonly("empty_lines",
                             [](const SegmentedCorpus& c) { return c.diagnostics().empty_lines; })
      .def_property_readonly(
          "stripped_tokens", [](const SegmentedCorpus& c) { return c.diagnostics().stripped_tokens; })
      .def("serialize", &serialize)
      .def("__len__", &SegmentedCorpus::sentence_count)
      .def("__eq__", [](const SegmentedCorpus& a, const SegmentedCorpus& b) { return a == b; });

  m.def(
      "parse_tokens",
      [](const std::string& text, std::string tag, bool lowercase, bool strip_punct, bool nfc) {
        return parse_token_corpus(text, std::move(tag), make_options("|", lowercase, strip_punct, nfc));
      },
      py::arg("text"), py::arg("language_tag") = "", py::kw_only(), py::arg("lowercase") = false,
      py::arg("strip_punct") = false, py::arg("nfc") = false);
  m.def(
      "parse_segmented",
      [](const std::string& text, std::string tag, const std::string& morph_sep, bool lowercase,
         bool strip_punct, bool nfc) {
        return parse_segmented_corpus(text, std::move(tag),
                                      make_options(morph_sep, lowercase, strip_punct, nfc));
      },
      py::arg("text"), py::arg("language_tag") = "", py::kw_only(), py::arg("morph_sep") = "|",
      py::arg("lowercase") = false, py::arg("strip_punct") = false, py::arg("nfc") = false);

  py::class_<VocabStats>(m, "VocabStats")
      .def_property_readonly("unit", [](const VocabStats& s) { return std::string(to_string(s.unit)); })
      .def_readonly("tokens", &VocabStats::tokens)
      .def_readonly("types", &VocabStats::types);
  m.def(
      "vocab_stats",
      [](const SegmentedCorpus& c, const std::string& unit) {
        return compute_vocab_stats(c, parse_unit(unit));
      },
      py::arg("corpus"), py::arg("unit") = "word");

  py::class_<TypeTokenRatio>(m, "TypeTokenRatio")
      .def_readonly("types", &TypeTokenRatio::types)
      .def_readonly("tokens", &TypeTokenRatio::tokens)
      .def_readonly("exact", &TypeTokenRatio::exact)
      .def_readonly("display", &TypeTokenRatio::display);
  m.def("ttr_percent", py::overload_cast<std::uint64_t, std::uint64_t>(&ttr_percent),
        py::arg("types"), py::arg("tokens"));

  py::class_<BigramModel>(m, "BigramModel")
      .def_property_readonly("vocab_size", &BigramModel::vocab_size)
      .def(
          "count",
          [](const BigramModel& b, std::optional<std::string> ctx, const std::string& t) {
            return ctx ? b.count(*ctx, t) : b.count(boundary, t);
          },
          py::arg("context"), py::arg("target"), "context None means the line start")
      .def(
          "prob",
          [](const BigramModel& b, std::optional<std::string> ctx, const std::string& t) {
            return ctx ? b.prob(*ctx, t) : b.prob(boundary, t);
          },
          py::arg("context"), py::arg("target"))
      .def("to_json", [](const BigramModel& b) { return to_json(b).dump(); });

  py::class_<WordContextModel>(m, "WordContextModel")
      .def_property_readonly("vocab_size", &WordContextModel::vocab_size)
      .def_property_readonly("variant",
                             [](const WordContextModel& w) { return std::string(to_string(w.variant())); })
      .def("cooccurrence", &WordContextModel::cooccurrence, py::arg("x"), py::arg("y"))
      .def("marginal", &WordContextModel::marginal, py::arg("y"))
      .def("prob", &WordContextModel::prob, py::arg("x"), py::arg("y"))
      .def("to_json", [](const WordContextModel& w) { return to_json(w).dump(); });

  m.def("fit_bigram", &fit_bigram, py::arg("corpus"));
  m.def(
      "fit_word_context",
      [](const SegmentedCorpus& c, bool standard) {
        return fit_word_context(c, standard ? Eq1Variant::standard_laplace : Eq1Variant::verbatim);
      },
      py::arg("corpus"), py::kw_only(), py::arg("eq1_standard_laplace") = false);

  py::class_<ComplexityMeasures>(m, "ComplexityMeasures")
      .def_property_readonly("model",
                             [](const ComplexityMeasures& c) { return std::string(to_string(c.kind)); })
      .def_readonly("cross_entropy_bits", &ComplexityMeasures::cross_entropy_bits)
      .def_readonly("perplexity", &ComplexityMeasures::perplexity)
      .def_readonly("normalized_entropy", &ComplexityMeasures::normalized_entropy)
      .def_readonly("vocab_size", &ComplexityMeasures::vocab_size)
      .def_readonly("event_count", &ComplexityMeasures::event_count)
      .def_readonly("skipped_words", &ComplexityMeasures::skipped_words);
  m.def(
      "evaluate",
      [](const SegmentedCorpus& train, const std::string& model,
         const std::optional<SegmentedCorpus>& eval, bool standard) {
        EvaluateOptions opts{standard ? Eq1Variant::standard_laplace : Eq1Variant::verbatim};
        const auto kind = parse_model_kind(model);
        return eval ? evaluate(train, *eval, kind, opts) : evaluate(train, kind, opts);
      },
      py::arg("corpus"), py::arg("model"), py::kw_only(), py::arg("eval") = py::none(),
      py::arg("eq1_standard_laplace") = false);

  m.def(
      "generate_corpus",
      [](std::uint64_t stems, std::uint64_t slots, std::uint64_t affixes_per_slot, double fill,
         double fusion, std::uint64_t sentences, std::uint64_t words, std::uint64_t seed) {
        SynthSpec s;
        s.stem_count = stems;
        s.affix_slots = slots;
        s.affixes_per_slot = affixes_per_slot;
        s.slot_fill_probability = fill;
        s.fusion_rate = fusion;
        s.sentence_count = sentences;
        s.words_per_sentence = words;
        s.seed = seed;
        return generate_corpus(s);
      },
      py::kw_only(), py::arg("stem_count") = SynthSpec{}.stem_count,
      py::arg("affix_slots") = SynthSpec{}.affix_slots,
      py::arg("affixes_per_slot") = SynthSpec{}.affixes_per_slot,
      py::arg("slot_fill_probability") = SynthSpec{}.slot_fill_probability,
      py::arg("fusion_rate") = SynthSpec{}.fusion_rate,
      py::arg("sentence_count") = SynthSpec{}.sentence_count,
      py::arg("words_per_sentence") = SynthSpec{}.words_per_sentence,
      py::arg("seed") = SynthSpec{}.seed);

  // Reports take (input spec, text) pairs, e.g. ("NA_morph:morph=na.seg", text).
  m.def(
      "ttr_report",
      [](const std::vector<std::pair<std::string, std::string>>& inputs, const std::string& format,
         const std::string& sep, bool lc, bool sp, bool nfc, const std::vector<std::string>& units,
         const std::string& model, bool eq1) {
        return render(cmd_ttr(load_inputs(inputs), make_config(sep, lc, sp, nfc, units, model, eq1)),
                      format);
      },
      py::arg("inputs"), MORPHCX_REPORT_ARGS);
  m.def(
      "entropy_report",
      [](const std::vector<std::pair<std::string, std::string>>& inputs,
         std::optional<std::pair<std::string, std::string>> eval, const std::string& format,
         const std::string& sep, bool lc, bool sp, bool nfc, const std::vector<std::string>& units,
         const std::string& model, bool eq1) {
        auto config = make_config(sep, lc, sp, nfc, units, model, eq1);
        if (eval) config.eval = LoadedInput{parse_input_spec(eval->first), eval->second};
        return render(cmd_entropy(load_inputs(inputs), config), format);
      },
      py::arg("inputs"), py::arg("eval") = py::none(), MORPHCX_REPORT_ARGS);
  m.def(
      "compare_report",
      [](const std::pair<std::string, std::string>& a, const std::pair<std::string, std::string>& b,
         const std::vector<std::pair<std::string, std::string>>& a_variants,
         const std::vector<std::pair<std::string, std::string>>& b_variants,
         const std::string& format, const std::string& sep, bool lc, bool sp, bool nfc,
         const std::vector<std::string>& units, const std::string& model, bool eq1) {
        CompareInputs in{{parse_input_spec(a.first), a.second},
                         {parse_input_spec(b.first), b.second},
                         load_inputs(a_variants),
                         load_inputs(b_variants)};
        return render(cmd_compare(in, make_config(sep, lc, sp, nfc, units, model, eq1)), format);
      },
      py::arg("a"), py::arg("b"), py::arg("a_variants") = std::vector<std::pair<std::string, std::string>>{},
      py::arg("b_variants") = std::vector<std::pair<std::string, std::string>>{}, MORPHCX_REPORT_ARGS);

  m.attr("__version__") = std::string(kToolVersion);
}
