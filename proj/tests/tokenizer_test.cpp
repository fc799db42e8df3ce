#include "gradesim/tokenizer.hpp"

#include <random>
#include <string>
#include <vector>

#include "gradesim/error.hpp"
#include "gtest/gtest.h"

namespace gradesim {
namespace {

using Tokens = std::vector<std::string>;

TEST(NormalizeTest, FoldsCaseOfCanonicalApostrophe) {
  EXPECT_EQ("oʻzbek", normalize("Oʻzbek"));
}

TEST(NormalizeTest, UnifiesApostropheVariants) {
  EXPECT_EQ("oʻzbek", normalize("O'zbek"));
  for (const char* variant : {"'", "`", "‘", "’", "ʻ", "ʼ"}) {
    EXPECT_EQ("gʻisht", normalize(std::string("G") + variant + "isht"))
        << variant;
  }
}

TEST(NormalizeTest, EmptyInput) { EXPECT_EQ("", normalize("")); }

TEST(NormalizeTest, ComposesCanonically) {
  // e + COMBINING ACUTE ACCENT -> U+00E9
  EXPECT_EQ("é", normalize("é"));
  EXPECT_EQ("é", normalize("É"));
}

TEST(NormalizeTest, RejectsMalformedUtf8WithOffset) {
  try {
    normalize("ab\xFF" "cd");
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(2u, e.offset());
    EXPECT_EQ(ErrorCode::kDecode, e.code());
  }
  // Truncated two-byte sequence at the end.
  EXPECT_THROW(normalize("olma\xC3"), DecodeError);
  // Overlong encoding of '/'.
  EXPECT_THROW(normalize("\xC0\xAF"), DecodeError);
}

TEST(TokenizeTest, SentenceWithPunctuation) {
  EXPECT_EQ((Tokens{"men", "maktabga", "boraman"}),
            tokenize("Men maktabga boraman.").tokens);
}

TEST(TokenizeTest, ApostropheIsWordInternal) {
  EXPECT_EQ((Tokens{"gʻoʻza", "gʻoʻza"}),
            tokenize("gʻoʻza, gʻoʻza!").tokens);
  EXPECT_EQ((Tokens{"oʻzbek", "tili"}), tokenize("O'zbek tili").tokens);
}

TEST(TokenizeTest, DigitsAndSymbolsOnly) {
  EXPECT_TRUE(tokenize("12345 …").empty());
  EXPECT_TRUE(tokenize("").empty());
}

TEST(TokenizeTest, DigitsSeparateLetters) {
  EXPECT_EQ((Tokens{"abc", "def"}), tokenize("abc123def").tokens);
}

TEST(TokenizeTest, StripsEdgeApostrophes) {
  EXPECT_EQ((Tokens{"salom", "dunyo"}), tokenize("'salom' ‘dunyo’").tokens);
  EXPECT_TRUE(tokenize("' `` ’").empty());
}

TEST(TokenizeTest, HyphenSeparates) {
  EXPECT_EQ((Tokens{"bir", "biri"}), tokenize("bir-biri").tokens);
}

TEST(TokenizeTest, CyrillicWithoutTransliteration) {
  EXPECT_EQ((Tokens{"ўзбекистон"}),
            tokenize("Ўзбекистон!").tokens);
}

TEST(TokenizeTest, SourceLengthCountsCodePoints) {
  EXPECT_EQ(6u, tokenize("Oʻzbek").source_len);
  EXPECT_EQ(0u, tokenize("").source_len);
}

TEST(TokenizeTest, DuplicatesAndOrderPreserved) {
  EXPECT_EQ((Tokens{"b", "a", "b"}), tokenize("B a b").tokens);
}

// Random text over letters, apostrophe variants, digits and separators.
class TokenizerProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20230415};

  const std::vector<std::string> word_chars{
      "a", "b", "o", "g", "z", "Q", "ʻ", "'", "’", "ш", "é"};
  const std::vector<std::string> separators{" ", ",", ".", "!", "-", "7", "\n",
                                            "\t", "?", "…", "(", ")"};

  std::string pick(const std::vector<std::string>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  }

  std::string random_text() {
    std::string s;
    const int n = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int i = 0; i < n; ++i) {
      s += std::bernoulli_distribution(0.7)(rng) ? pick(word_chars) : pick(separators);
    }
    return s;
  }
};

TEST_F(TokenizerProperties, TokenInvariants) {
  for (int i = 0; i < 500; ++i) {
    for (const auto& tok : tokenize(random_text()).tokens) {
      ASSERT_FALSE(tok.empty());
      EXPECT_EQ(tok, normalize(tok));
      EXPECT_EQ(std::string::npos, tok.find_first_of(" \t\n,.!?-()'0123456789"));
      EXPECT_FALSE(tok.starts_with("ʻ")) << tok;
      EXPECT_FALSE(tok.ends_with("ʻ")) << tok;
    }
  }
}

TEST_F(TokenizerProperties, IdempotentOverSpaceJoin) {
  for (int i = 0; i < 500; ++i) {
    const auto first = tokenize(random_text());
    std::string joined;
    for (const auto& t : first.tokens) joined += t + " ";
    EXPECT_EQ(first.tokens, tokenize(joined).tokens);
  }
}

TEST_F(TokenizerProperties, Deterministic) {
  for (int i = 0; i < 200; ++i) {
    const auto text = random_text();
    EXPECT_EQ(tokenize(text), tokenize(text));
  }
}

TEST_F(TokenizerProperties, SeparatorInsensitive) {
  for (int i = 0; i < 500; ++i) {
    std::string a, b;
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    for (int k = 0; k < n; ++k) {
      if (std::bernoulli_distribution(0.6)(rng)) {
        const auto c = pick(word_chars);
        a += c;
        b += c;
      } else {
        a += pick(separators);
        b += pick(separators);
      }
    }
    EXPECT_EQ(tokenize(a).tokens, tokenize(b).tokens) << a << " | " << b;
  }
}

}  // namespace
}  // namespace gradesim
