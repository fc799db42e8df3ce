#ifndef GRADESIM_TOKENIZER_HPP
#define GRADESIM_TOKENIZER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gradesim {

/// U+02BB MODIFIER LETTER TURNED COMMA, the canonical Uzbek Latin apostrophe.
inline constexpr std::string_view kCanonicalApostrophe = "\xCA\xBB";

/// Normalized tokens of one document, in input order with duplicates kept.
struct TokenSequence {
  std::vector<std::string> tokens;
  /// Number of code points in the raw input.
  std::size_t source_len = 0;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }

  bool operator==(const TokenSequence&) const = default;
};

/// Throws DecodeError (prefixed with `context`) on malformed UTF-8.
void validate_utf8(std::string_view bytes, std::string_view context = {});

// Maps every apostrophe-like character (' ‘ ’ ʻ ʼ `) to U+02BB, lowercases
// and NFC-composes. Throws DecodeError on malformed UTF-8.
std::string normalize(std::string_view raw);

// Maximal runs of letters or U+02BB in normalize(raw), with apostrophes
// stripped from both ends of each run. Everything else separates.
TokenSequence tokenize(std::string_view raw);

}  // namespace gradesim

#endif  // GRADESIM_TOKENIZER_HPP
