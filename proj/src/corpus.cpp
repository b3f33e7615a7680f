#include "morphcx/corpus.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <fmt/format.h>

#include <utility>

#include "morphcx/error.hpp"

namespace morphcx {

namespace {

// Throws DecodeError at the first ill-formed sequence.
void validate_utf8(std::string_view text) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 cp;
    U8_NEXT(bytes, i, length, cp);
    if (cp < 0) {
      throw DecodeError(static_cast<std::size_t>(start),
                        fmt::format("invalid UTF-8 at byte offset {}", start));
    }
  }
}

struct CodePoint {
  char32_t value;
  std::size_t begin;
  std::size_t end;
};

std::vector<CodePoint> decode(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 cp;
    U8_NEXT(bytes, i, length, cp);
    out.push_back({static_cast<char32_t>(cp), static_cast<std::size_t>(start),
                   static_cast<std::size_t>(i)});
  }
  return out;
}

bool is_space(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

bool all_punct(const std::vector<std::string>& morphs) {
  for (const auto& m : morphs) {
    for (const auto& cp : decode(m)) {
      if (!u_ispunct(static_cast<UChar32>(cp.value))) return false;
    }
  }
  return true;
}

std::string transform_morph(std::string_view morph, const ParseOptions& options) {
  if (!options.nfc && !options.lowercase) return std::string(morph);
  auto ustr = icu::UnicodeString::fromUTF8(
      icu::StringPiece(morph.data(), static_cast<int32_t>(morph.size())));
  if (options.nfc) {
    UErrorCode status = U_ZERO_ERROR;
    const auto* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_SUCCESS(status)) ustr = nfc->normalize(ustr, status);
    if (U_FAILURE(status)) {
      throw Error(fmt::format("NFC normalization failed: {}", u_errorName(status)));
    }
  }
  if (options.lowercase) ustr.toLower(icu::Locale::getRoot());
  std::string out;
  ustr.toUTF8String(out);
  return out;
}

std::vector<std::string> split_token(std::string_view token, std::optional<char32_t> delimiter,
                                     std::size_t line_number) {
  if (!delimiter) return {std::string(token)};
  std::vector<std::string> morphs;
  std::size_t morph_begin = 0;
  for (const auto& cp : decode(token)) {
    if (cp.value == *delimiter) {
      morphs.emplace_back(token.substr(morph_begin, cp.begin - morph_begin));
      morph_begin = cp.end;
    }
  }
  morphs.emplace_back(token.substr(morph_begin));
  for (const auto& m : morphs) {
    if (m.empty()) {
      throw ValidationError(
          fmt::format("line {}: token '{}' has an empty morph", line_number, token));
    }
  }
  return morphs;
}

SegmentedCorpus parse(std::string_view text, std::string language_tag,
                      std::optional<char32_t> delimiter, const ParseOptions& options) {
  validate_utf8(text);
  if (delimiter) parse_delimiter(encode_utf8(*delimiter));

  ParseDiagnostics diagnostics;
  std::vector<Sentence> sentences;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string_view> tokens;
    std::optional<std::size_t> token_begin;
    for (const auto& cp : decode(line)) {
      if (is_space(cp.value)) {
        if (token_begin) tokens.push_back(line.substr(*token_begin, cp.begin - *token_begin));
        token_begin.reset();
      } else if (!token_begin) {
        token_begin = cp.begin;
      }
    }
    if (token_begin) tokens.push_back(line.substr(*token_begin));

    if (tokens.empty()) {
      ++diagnostics.empty_lines;
      continue;
    }

    Sentence sentence;
    sentence.line_number = line_number;
    for (auto token : tokens) {
      auto morphs = split_token(token, delimiter, line_number);
      if (options.strip_punct && all_punct(morphs)) {
        ++diagnostics.stripped_tokens;
        continue;
      }
      for (auto& m : morphs) m = transform_morph(m, options);
      sentence.words.emplace_back(std::move(morphs));
    }
    sentences.push_back(std::move(sentence));
  }
  diagnostics.lines_read = line_number;
  return SegmentedCorpus(std::move(sentences), std::move(language_tag), delimiter, diagnostics);
}

}  // namespace

SegmentedWord::SegmentedWord(std::vector<std::string> morphs) : morphs_(std::move(morphs)) {
  if (morphs_.empty()) throw ValidationError("a word needs at least one morph");
  for (const auto& m : morphs_) {
    if (m.empty()) throw ValidationError("empty morph");
  }
}

std::string SegmentedWord::joined(std::string_view delimiter) const {
  std::string out = morphs_.front();
  for (std::size_t i = 1; i < morphs_.size(); ++i) {
    out += delimiter;
    out += morphs_[i];
  }
  return out;
}

std::string SegmentedWord::surface() const {
  std::string out;
  for (const auto& m : morphs_) out += m;
  return out;
}

SegmentedCorpus::SegmentedCorpus(std::vector<Sentence> sentences, std::string language_tag,
                                 std::optional<char32_t> delimiter, ParseDiagnostics diagnostics)
    : sentences_(std::move(sentences)),
      language_tag_(std::move(language_tag)),
      delimiter_(delimiter),
      diagnostics_(diagnostics) {
  std::size_t previous_line = 0;
  for (const auto& s : sentences_) {
    if (s.line_number <= previous_line) {
      throw ValidationError(fmt::format("line numbers must increase (saw {} after {})",
                                        s.line_number, previous_line));
    }
    previous_line = s.line_number;
    token_count_ += s.words.size();
    for (const auto& w : s.words) morph_count_ += w.size();
  }
}

SegmentedCorpus parse_token_corpus(std::string_view text, std::string language_tag,
                                   const ParseOptions& options) {
  return parse(text, std::move(language_tag), std::nullopt, options);
}

SegmentedCorpus parse_segmented_corpus(std::string_view text, std::string language_tag,
                                       const ParseOptions& options) {
  return parse(text, std::move(language_tag), options.morph_delimiter, options);
}

ParallelCorpus align_parallel(SegmentedCorpus a, SegmentedCorpus b) {
  if (a.sentence_count() != b.sentence_count()) {
    throw AlignmentError(a.sentence_count(), b.sentence_count(),
                         fmt::format("sentence counts differ: {} != {}", a.sentence_count(),
                                     b.sentence_count()));
  }
  return {std::move(a), std::move(b)};
}

std::string serialize(const SegmentedCorpus& corpus) {
  const std::string delimiter = encode_utf8(corpus.delimiter().value_or(kDefaultMorphDelimiter));
  std::string out;
  for (const auto& sentence : corpus.sentences()) {
    for (std::size_t i = 0; i < sentence.words.size(); ++i) {
      if (i > 0) out += ' ';
      out += sentence.words[i].joined(delimiter);
    }
    out += '\n';
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  char buffer[U8_MAX_LENGTH];
  int32_t length = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buffer), length, U8_MAX_LENGTH,
            static_cast<UChar32>(cp), error);
  if (error) throw ValidationError(fmt::format("U+{:04X} is not encodable", uint32_t{cp}));
  return {buffer, static_cast<std::size_t>(length)};
}

char32_t parse_delimiter(std::string_view utf8) {
  validate_utf8(utf8);
  const auto cps = decode(utf8);
  if (cps.size() != 1) {
    throw ValidationError(fmt::format("morph delimiter must be one character, got '{}'", utf8));
  }
  if (is_space(cps.front().value)) {
    throw ValidationError("morph delimiter must not be whitespace");
  }
  return cps.front().value;
}

}  // namespace morphcx
