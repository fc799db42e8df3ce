#include "gradesim/tokenizer.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "gradesim/error.hpp"

namespace gradesim {
namespace {

constexpr UChar32 kApostrophe = 0x02BB;

constexpr bool is_apostrophe_variant(UChar32 c) {
  switch (c) {
    case 0x0027:  // APOSTROPHE
    case 0x0060:  // GRAVE ACCENT
    case 0x2018:  // LEFT SINGLE QUOTATION MARK
    case 0x2019:  // RIGHT SINGLE QUOTATION MARK
    case 0x02BB:  // MODIFIER LETTER TURNED COMMA
    case 0x02BC:  // MODIFIER LETTER APOSTROPHE
      return true;
    default:
      return false;
  }
}

struct Decoded {
  icu::UnicodeString text;
  std::size_t code_points = 0;
};

// Strict UTF-8 decode with the apostrophe mapping folded in.
Decoded decode(std::string_view raw) {
  Decoded out;
  const auto* bytes = reinterpret_cast<const uint8_t*>(raw.data());
  const auto length = static_cast<int32_t>(raw.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) throw DecodeError(static_cast<std::size_t>(start), "");
    out.text.append(is_apostrophe_variant(c) ? kApostrophe : c);
    ++out.code_points;
  }
  return out;
}

icu::UnicodeString fold_and_compose(icu::UnicodeString text) {
  text.toLower(icu::Locale::getRoot());
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("ICU NFC unavailable: ") +
                             u_errorName(status));
  }
  icu::UnicodeString composed = nfc->normalize(text, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("ICU normalization failed: ") +
                             u_errorName(status));
  }
  return composed;
}

bool is_word_char(UChar32 c) { return c == kApostrophe || u_isalpha(c); }

void flush_run(const icu::UnicodeString& text, int32_t begin, int32_t end,
               std::vector<std::string>& tokens) {
  while (begin < end && text.char32At(begin) == kApostrophe) ++begin;
  while (end > begin && text.char32At(end - 1) == kApostrophe) --end;
  if (begin == end) return;
  std::string token;
  text.tempSubStringBetween(begin, end).toUTF8String(token);
  tokens.push_back(std::move(token));
}

}  // namespace

void validate_utf8(std::string_view bytes, std::string_view context) {
  const auto* data = reinterpret_cast<const uint8_t*>(bytes.data());
  const auto length = static_cast<int32_t>(bytes.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(data, i, length, c);
    if (c < 0) {
      throw DecodeError(static_cast<std::size_t>(start), std::string(context));
    }
  }
}

std::string normalize(std::string_view raw) {
  std::string out;
  fold_and_compose(decode(raw).text).toUTF8String(out);
  return out;
}

TokenSequence tokenize(std::string_view raw) {
  Decoded decoded = decode(raw);
  const icu::UnicodeString text = fold_and_compose(std::move(decoded.text));

  TokenSequence seq;
  seq.source_len = decoded.code_points;

  int32_t run_begin = -1;
  int32_t i = 0;
  const int32_t n = text.length();
  while (i < n) {
    const UChar32 c = text.char32At(i);
    const int32_t next = i + U16_LENGTH(c);
    if (is_word_char(c)) {
      if (run_begin < 0) run_begin = i;
    } else if (run_begin >= 0) {
      flush_run(text, run_begin, i, seq.tokens);
      run_begin = -1;
    }
    i = next;
  }
  if (run_begin >= 0) flush_run(text, run_begin, n, seq.tokens);
  return seq;
}

}  // namespace gradesim
