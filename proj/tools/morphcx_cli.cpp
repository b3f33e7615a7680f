// morphcx: type/token and morph-model complexity measures over corpora.
//
//   morphcx ttr      [opts] [LABEL[:UNIT]=]FILE...
//   morphcx entropy  [opts] [LABEL=]FILE...
//   morphcx compare  [opts] A B [--a-variant SPEC]... [--b-variant SPEC]...
//   morphcx synth    [--spec JSON] [generator flags] [-o FILE]
//
// Exit codes: 0 ok, 1 usage, 2 data error.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "morphcx/corpus.hpp"
#include "morphcx/error.hpp"
#include "morphcx/json_io.hpp"
#include "morphcx/report.hpp"
#include "morphcx/synthlang.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

class FileError : public morphcx::Error {
 public:
  using Error::Error;
};

class TextSource {
 public:
  std::string read(const std::string& path) {
    if (path == "-") {
      if (!stdin_) {
        stdin_ = std::string(std::istreambuf_iterator<char>(std::cin), {});
      }
      return *stdin_;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError(fmt::format("cannot open '{}'", path));
    return {std::istreambuf_iterator<char>(in), {}};
  }

  morphcx::LoadedInput load(const std::string& arg) {
    auto spec = morphcx::parse_input_spec(arg);
    auto text = read(spec.path);
    return {std::move(spec), std::move(text)};
  }

 private:
  std::optional<std::string> stdin_;
};

struct CommonOptions {
  std::string morph_sep = "|";
  std::vector<std::string> units;
  std::string model = "both";
  std::string format = "tsv";
  bool lowercase = false;
  bool strip_punct = false;
  bool nfc = false;
  bool eq1_standard = false;
  std::string eval_file;
  std::string output;
};

void add_parse_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--morph-sep", o.morph_sep, "Morph delimiter (one character)")
      ->capture_default_str();
  cmd->add_flag("--lowercase", o.lowercase, "Lowercase every token before counting");
  cmd->add_flag("--strip-punct", o.strip_punct, "Drop tokens made only of punctuation");
  cmd->add_flag("--nfc", o.nfc, "NFC-normalize every morph");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", o.output, "Write the report here instead of stdout");
}

void add_model_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--model", o.model, "Model(s) to evaluate")
      ->check(CLI::IsMember({"bigram", "word-context", "both"}))
      ->capture_default_str();
  cmd->add_flag("--eq1-standard-laplace", o.eq1_standard,
                "Use fr(y)+V instead of fr(x,y)+V in the word-context denominator");
}

void add_unit_flag(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--unit", o.units, "Counting unit; repeat for several")
      ->check(CLI::IsMember({"word", "morph"}));
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

morphcx::ReportConfig make_config(const CommonOptions& o) try {
  morphcx::ReportConfig config;
  config.parse.morph_delimiter = morphcx::parse_delimiter(o.morph_sep);
  config.parse.lowercase = o.lowercase;
  config.parse.strip_punct = o.strip_punct;
  config.parse.nfc = o.nfc;
  if (!o.units.empty()) {
    config.units.clear();
    for (const auto& u : o.units) config.units.push_back(morphcx::parse_unit(u));
  }
  config.models = morphcx::parse_model_selection(o.model);
  config.eq1 = o.eq1_standard ? morphcx::Eq1Variant::standard_laplace
                              : morphcx::Eq1Variant::verbatim;
  return config;
} catch (const morphcx::ValidationError& e) {
  throw UsageError(e.what());
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw FileError(fmt::format("cannot write '{}'", output));
  out << text;
}

void emit_report(const morphcx::ComplexityReport& report, const CommonOptions& o) {
  emit(o.format == "json" ? morphcx::render_json(report) : morphcx::render_tsv(report), o.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morphological complexity measures: TTR, morph-model entropy and perplexity"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(morphcx::kToolVersion));

  CommonOptions ttr_opts, entropy_opts, compare_opts;
  std::vector<std::string> ttr_inputs, entropy_inputs, compare_sides, a_variants, b_variants;

  auto* ttr = app.add_subcommand("ttr", "Type/token counts and TTR per input and unit");
  add_parse_flags(ttr, ttr_opts);
  add_unit_flag(ttr, ttr_opts);
  ttr->add_option("inputs", ttr_inputs, "[LABEL[:UNIT]=]FILE, '-' for stdin")->required();

  auto* entropy = app.add_subcommand("entropy", "Cross-entropy and perplexity of morph models");
  add_parse_flags(entropy, entropy_opts);
  add_model_flags(entropy, entropy_opts);
  entropy->add_option("--eval-file", entropy_opts.eval_file,
                      "Score this held-out file instead of the training text");
  entropy->add_option("inputs", entropy_inputs, "[LABEL=]FILE (segmented)")->required();

  auto* compare = app.add_subcommand("compare", "Juxtapose both sides of a parallel corpus");
  add_parse_flags(compare, compare_opts);
  add_model_flags(compare, compare_opts);
  add_unit_flag(compare, compare_opts);
  compare->add_option("sides", compare_sides, "[LABEL[:UNIT]=]FILE for side A and side B")
      ->required()
      ->expected(2);
  compare->add_option("--a-variant", a_variants, "Extra rendering of side A, [LABEL[:UNIT]=]FILE");
  compare->add_option("--b-variant", b_variants, "Extra rendering of side B, [LABEL[:UNIT]=]FILE");

  morphcx::SynthSpec synth_spec;
  std::string synth_spec_file, synth_output;
  bool print_spec = false;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic segmented corpus");
  synth->add_option("--spec", synth_spec_file, "JSON spec; flags given explicitly override it");
  synth->add_option("--stems", synth_spec.stem_count, "Number of stems")->capture_default_str();
  synth->add_option("--slots", synth_spec.affix_slots, "Affix slots per word (0 = analytic)")
      ->capture_default_str();
  synth->add_option("--affixes-per-slot", synth_spec.affixes_per_slot)->capture_default_str();
  synth->add_option("--fill", synth_spec.slot_fill_probability, "Slot fill probability")
      ->capture_default_str();
  synth->add_option("--fusion", synth_spec.fusion_rate, "Portmanteau probability per word")
      ->capture_default_str();
  synth->add_option("--sentences", synth_spec.sentence_count)->capture_default_str();
  synth->add_option("--words", synth_spec.words_per_sentence, "Words per sentence")
      ->capture_default_str();
  synth->add_option("--seed", synth_spec.seed)->capture_default_str();
  synth->add_option("-o,--output", synth_output, "Write the corpus here instead of stdout");
  synth->add_flag("--print-spec", print_spec, "Print the effective spec as JSON and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    TextSource source;
    if (ttr->parsed()) {
      const auto config = make_config(ttr_opts);
      std::vector<morphcx::LoadedInput> inputs;
      for (const auto& arg : ttr_inputs) inputs.push_back(source.load(arg));
      emit_report(morphcx::cmd_ttr(inputs, config), ttr_opts);
    } else if (entropy->parsed()) {
      auto config = make_config(entropy_opts);
      std::vector<morphcx::LoadedInput> inputs;
      for (const auto& arg : entropy_inputs) inputs.push_back(source.load(arg));
      if (!entropy_opts.eval_file.empty()) config.eval = source.load(entropy_opts.eval_file);
      emit_report(morphcx::cmd_entropy(inputs, config), entropy_opts);
    } else if (compare->parsed()) {
      const auto config = make_config(compare_opts);
      morphcx::CompareInputs inputs{source.load(compare_sides.at(0)),
                                    source.load(compare_sides.at(1)), {}, {}};
      for (const auto& arg : a_variants) inputs.a_variants.push_back(source.load(arg));
      for (const auto& arg : b_variants) inputs.b_variants.push_back(source.load(arg));
      emit_report(morphcx::cmd_compare(inputs, config), compare_opts);
    } else if (synth->parsed()) {
      morphcx::SynthSpec spec = synth_spec;
      if (!synth_spec_file.empty()) {
        spec = morphcx::synth_spec_from_json(nlohmann::json::parse(source.read(synth_spec_file)));
        // Explicit flags win over the file.
        std::map<std::string, std::function<void()>> overrides = {
            {"--stems", [&] { spec.stem_count = synth_spec.stem_count; }},
            {"--slots", [&] { spec.affix_slots = synth_spec.affix_slots; }},
            {"--affixes-per-slot", [&] { spec.affixes_per_slot = synth_spec.affixes_per_slot; }},
            {"--fill", [&] { spec.slot_fill_probability = synth_spec.slot_fill_probability; }},
            {"--fusion", [&] { spec.fusion_rate = synth_spec.fusion_rate; }},
            {"--sentences", [&] { spec.sentence_count = synth_spec.sentence_count; }},
            {"--words", [&] { spec.words_per_sentence = synth_spec.words_per_sentence; }},
            {"--seed", [&] { spec.seed = synth_spec.seed; }},
        };
        for (const auto& [flag, apply] : overrides) {
          if (synth->count(flag) > 0) apply();
        }
      }
      morphcx::validate(spec);
      if (print_spec) {
        emit(morphcx::to_json(spec).dump(2) + '\n', synth_output);
      } else {
        emit(morphcx::serialize(morphcx::generate_corpus(spec)), synth_output);
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "morphcx: " << e.what() << '\n';
    return kExitUsage;
  } catch (const morphcx::Error& e) {
    std::cerr << "morphcx: " << e.what() << '\n';
    return kExitData;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "morphcx: invalid JSON: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
