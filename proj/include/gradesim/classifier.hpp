#ifndef GRADESIM_CLASSIFIER_HPP
#define GRADESIM_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "gradesim/corpus.hpp"
#include "gradesim/grade.hpp"
#include "gradesim/tokenizer.hpp"
#include "gradesim/vocabulary.hpp"

namespace gradesim {

enum class Decision {
  kContainment,
  kCosineArgmax,
};

std::string_view to_string(Decision d) noexcept;

struct ClassificationResult {
  Grade chosen_grade{1};
  Decision decision = Decision::kCosineArgmax;
  PerGrade<double> scores{};
  PerGrade<std::uint64_t> shared_unique{};
};

/// Lowest grade whose vocabulary contains every query term, if any.
std::optional<Grade> containment_class(const Vocabulary& query_vocab,
                                       const GradedCorpus& corpus);

/// Assigns a grade to the text.
///
/// If the query vocabulary is contained in some grade's vocabulary, the
/// lowest such grade is chosen and reported with score 1. Otherwise every
/// grade is scored by cosine over its pair dictionary, with IDF taken over
/// the four class documents plus the query, and the highest score wins
/// (lowest grade on ties). Scores for all grades are always filled in.
///
/// Throws Error(kEmptyQuery) if the text has no tokens.
ClassificationResult classify(const TokenSequence& query,
                              const GradedCorpus& corpus);
ClassificationResult classify(std::string_view raw_text,
                              const GradedCorpus& corpus);

}  // namespace gradesim

#endif  // GRADESIM_CLASSIFIER_HPP
