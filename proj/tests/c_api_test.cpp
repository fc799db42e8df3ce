#include "gradesim/gradesim.h"

#include <array>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "gtest/gtest.h"

namespace {

const std::string kMini = std::string(GRADESIM_TEST_DATA) + "/mini/";

class CApiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ASSERT_EQ(GRADESIM_OK,
              gradesim_corpus_open((kMini + "manifest.tsv").c_str(), &corpus_));
  }
  void TearDown() override { gradesim_corpus_free(corpus_); }

  gradesim_corpus* corpus_ = nullptr;
};

TEST(CApiBasics, VersionAndStatusStrings) {
  EXPECT_STRNE("", gradesim_version());
  EXPECT_STREQ("ok", gradesim_status_string(GRADESIM_OK));
  EXPECT_STREQ("incomplete corpus",
               gradesim_status_string(GRADESIM_ERR_INCOMPLETE_CORPUS));
}

TEST(CApiBasics, Tokenize) {
  const char text[] = "Oʻzbek tili, O'zbek!";
  gradesim_tokens* tokens = nullptr;
  ASSERT_EQ(GRADESIM_OK, gradesim_tokenize(text, std::strlen(text), &tokens));
  ASSERT_EQ(3u, gradesim_tokens_count(tokens));
  EXPECT_STREQ("oʻzbek", gradesim_tokens_at(tokens, 0));
  EXPECT_STREQ("tili", gradesim_tokens_at(tokens, 1));
  EXPECT_STREQ("oʻzbek", gradesim_tokens_at(tokens, 2));
  EXPECT_EQ(nullptr, gradesim_tokens_at(tokens, 3));
  gradesim_tokens_free(tokens);
}

TEST(CApiBasics, TokenizeDecodeError) {
  gradesim_tokens* tokens = nullptr;
  EXPECT_EQ(GRADESIM_ERR_DECODE, gradesim_tokenize("ok\x80", 3, &tokens));
  EXPECT_EQ(nullptr, tokens);
  EXPECT_NE(nullptr, std::strstr(gradesim_last_error(), "byte offset 2"));
}

TEST(CApiBasics, OpenErrors) {
  gradesim_corpus* corpus = nullptr;
  EXPECT_EQ(GRADESIM_ERR_INCOMPLETE_CORPUS,
            gradesim_corpus_open((kMini + "incomplete.tsv").c_str(), &corpus));
  EXPECT_EQ(nullptr, corpus);
  EXPECT_NE(nullptr, std::strstr(gradesim_last_error(), "3"));
  EXPECT_EQ(GRADESIM_ERR_IO, gradesim_corpus_open("/nonexistent/m.tsv", &corpus));
  EXPECT_EQ(GRADESIM_ERR_INVALID_ARGUMENT, gradesim_corpus_open(nullptr, &corpus));
  EXPECT_EQ(GRADESIM_ERR_INVALID_ARGUMENT, gradesim_corpus_open("x", nullptr));
}

TEST_F(CApiTest, Stats) {
  const std::array<std::array<uint64_t, 2>, 4> expected{{{3, 2}, {4, 3}, {1, 1}, {1, 1}}};
  for (int g = 1; g <= 4; ++g) {
    gradesim_grade_stats s{};
    ASSERT_EQ(GRADESIM_OK, gradesim_corpus_grade_stats(corpus_, g, &s));
    EXPECT_EQ(expected[g - 1][0], s.total_tokens);
    EXPECT_EQ(expected[g - 1][1], s.unique_tokens);
  }
  uint64_t overall = 0;
  ASSERT_EQ(GRADESIM_OK, gradesim_corpus_overall_unique(corpus_, &overall));
  EXPECT_EQ(6u, overall);

  gradesim_grade_stats s{};
  EXPECT_EQ(GRADESIM_ERR_RANGE, gradesim_corpus_grade_stats(corpus_, 5, &s));
  EXPECT_EQ(GRADESIM_ERR_INVALID_ARGUMENT,
            gradesim_corpus_grade_stats(nullptr, 1, &s));
}

TEST_F(CApiTest, Matrix) {
  std::array<gradesim_pair_similarity, 16> cells{};
  ASSERT_EQ(GRADESIM_OK, gradesim_class_matrix(corpus_, cells.data()));
  const uint64_t own[] = {2, 3, 1, 1};
  for (int r = 0; r < 4; ++r) {
    EXPECT_EQ(1.0, cells[r * 4 + r].score);
    EXPECT_EQ(own[r], cells[r * 4 + r].shared_unique);
    for (int c = 0; c < 4; ++c) {
      EXPECT_EQ(cells[r * 4 + c].score, cells[c * 4 + r].score);
    }
  }
  EXPECT_EQ(1u, cells[0 * 4 + 1].shared_unique);
  EXPECT_EQ(0.0, cells[2 * 4 + 3].score);
}

TEST_F(CApiTest, ClassifyText) {
  gradesim_classification r{};
  ASSERT_EQ(GRADESIM_OK, gradesim_classify_text(corpus_, "olma behi", 9, &r));
  EXPECT_EQ(1, r.chosen_grade);
  EXPECT_EQ(GRADESIM_DECISION_COSINE_ARGMAX, r.decision);
  EXPECT_NEAR(0.44588919211136047, r.scores[0], 1e-12);
  EXPECT_NEAR(0.15965237601031118, r.scores[1], 1e-12);
  EXPECT_EQ(1u, r.shared_unique[0]);

  EXPECT_EQ(GRADESIM_ERR_EMPTY_QUERY, gradesim_classify_text(corpus_, "42", 2, &r));
  EXPECT_STRNE("", gradesim_last_error());
}

TEST_F(CApiTest, ClassifyFile) {
  gradesim_classification r{};
  ASSERT_EQ(GRADESIM_OK,
            gradesim_classify_file(corpus_, (kMini + "grade3.txt").c_str(), &r));
  EXPECT_EQ(3, r.chosen_grade);
  EXPECT_EQ(GRADESIM_DECISION_CONTAINMENT, r.decision);
  EXPECT_EQ(1.0, r.scores[2]);
  EXPECT_STREQ("", gradesim_last_error());

  EXPECT_EQ(GRADESIM_ERR_EMPTY_QUERY,
            gradesim_classify_file(corpus_, (kMini + "empty.txt").c_str(), &r));
  EXPECT_EQ(GRADESIM_ERR_IO,
            gradesim_classify_file(corpus_, (kMini + "missing.txt").c_str(), &r));
}

TEST_F(CApiTest, ConcurrentClassification) {
  std::vector<std::thread> threads;
  std::vector<gradesim_classification> results(8);
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&, i] {
      gradesim_classify_text(corpus_, "olma behi", 9, &results[i]);
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) {
    EXPECT_EQ(1, r.chosen_grade);
    EXPECT_EQ(results[0].scores[0], r.scores[0]);
  }
}

}  // namespace
