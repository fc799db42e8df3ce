#include "gradesim/gradesim.h"

#include <exception>
#include <new>
#include <string>
#include <utility>

#include "gradesim/classifier.hpp"
#include "gradesim/corpus.hpp"
#include "gradesim/error.hpp"
#include "gradesim/similarity.hpp"
#include "gradesim/tokenizer.hpp"

struct gradesim_corpus {
  gradesim::GradedCorpus corpus;
};

struct gradesim_tokens {
  gradesim::TokenSequence seq;
};

namespace {

thread_local std::string last_error;

gradesim_status fail(gradesim_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `fn`, mapping any exception to a status and the thread's message.
template <typename Fn>
gradesim_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    last_error.clear();
    return GRADESIM_OK;
  } catch (const gradesim::Error& e) {
    return fail(static_cast<gradesim_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GRADESIM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GRADESIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GRADESIM_ERR_INTERNAL, "unknown error");
  }
}

gradesim_status null_argument(const char* name) {
  return fail(GRADESIM_ERR_INVALID_ARGUMENT,
              std::string(name) + " must not be NULL");
}

bool valid_grade(int grade) {
  return grade >= gradesim::Grade::kMin && grade <= gradesim::Grade::kMax;
}

void fill(const gradesim::ClassificationResult& r, gradesim_classification* out) {
  out->chosen_grade = r.chosen_grade.value();
  out->decision = r.decision == gradesim::Decision::kContainment
                      ? GRADESIM_DECISION_CONTAINMENT
                      : GRADESIM_DECISION_COSINE_ARGMAX;
  for (std::size_t i = 0; i < gradesim::Grade::kCount; ++i) {
    out->scores[i] = r.scores[i];
    out->shared_unique[i] = r.shared_unique[i];
  }
}

}  // namespace

extern "C" {

const char* gradesim_version(void) { return GRADESIM_VERSION; }

const char* gradesim_status_string(gradesim_status status) {
  switch (status) {
    case GRADESIM_OK: return "ok";
    case GRADESIM_ERR_DECODE: return "decode error";
    case GRADESIM_ERR_IO: return "I/O error";
    case GRADESIM_ERR_PARSE: return "parse error";
    case GRADESIM_ERR_RANGE: return "range error";
    case GRADESIM_ERR_INCOMPLETE_CORPUS: return "incomplete corpus";
    case GRADESIM_ERR_EMPTY_CLASS: return "empty class";
    case GRADESIM_ERR_EMPTY_QUERY: return "empty query";
    case GRADESIM_ERR_DOMAIN: return "domain error";
    case GRADESIM_ERR_ALIGNMENT: return "alignment error";
    case GRADESIM_ERR_UNDEFINED_SIMILARITY: return "undefined similarity";
    case GRADESIM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GRADESIM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gradesim_last_error(void) { return last_error.c_str(); }

gradesim_status gradesim_tokenize(const char* text, size_t len,
                                  gradesim_tokens** out) {
  if (!out) return null_argument("out");
  if (!text && len != 0) return null_argument("text");
  *out = nullptr;
  return guarded([&] {
    auto seq = gradesim::tokenize(std::string_view(text ? text : "", len));
    *out = new gradesim_tokens{std::move(seq)};
  });
}

size_t gradesim_tokens_count(const gradesim_tokens* tokens) {
  return tokens ? tokens->seq.size() : 0;
}

const char* gradesim_tokens_at(const gradesim_tokens* tokens, size_t index) {
  if (!tokens || index >= tokens->seq.size()) return nullptr;
  return tokens->seq.tokens[index].c_str();
}

void gradesim_tokens_free(gradesim_tokens* tokens) { delete tokens; }

gradesim_status gradesim_corpus_open(const char* manifest_path,
                                     gradesim_corpus** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!manifest_path) return null_argument("manifest_path");
  return guarded([&] {
    auto manifest = gradesim::load_manifest(manifest_path);
    *out = new gradesim_corpus{gradesim::build_corpus(manifest)};
  });
}

void gradesim_corpus_free(gradesim_corpus* corpus) { delete corpus; }

gradesim_status gradesim_corpus_grade_stats(const gradesim_corpus* corpus,
                                            int grade,
                                            gradesim_grade_stats* out) {
  if (!corpus) return null_argument("corpus");
  if (!out) return null_argument("out");
  if (!valid_grade(grade)) {
    return fail(GRADESIM_ERR_RANGE,
                "grade " + std::to_string(grade) + " outside 1..4");
  }
  const auto& s = corpus->corpus.stats().grades[gradesim::Grade(grade).index()];
  out->total_tokens = s.total_tokens;
  out->unique_tokens = s.unique_tokens;
  last_error.clear();
  return GRADESIM_OK;
}

gradesim_status gradesim_corpus_overall_unique(const gradesim_corpus* corpus,
                                               uint64_t* out) {
  if (!corpus) return null_argument("corpus");
  if (!out) return null_argument("out");
  *out = corpus->corpus.stats().overall_unique;
  last_error.clear();
  return GRADESIM_OK;
}

gradesim_status gradesim_class_matrix(
    const gradesim_corpus* corpus,
    gradesim_pair_similarity out[GRADESIM_NUM_GRADES * GRADESIM_NUM_GRADES]) {
  if (!corpus) return null_argument("corpus");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto m = gradesim::class_similarity_matrix(corpus->corpus);
    for (std::size_t r = 0; r < gradesim::Grade::kCount; ++r) {
      for (std::size_t c = 0; c < gradesim::Grade::kCount; ++c) {
        const auto& cell = m.cells[r][c];
        out[r * GRADESIM_NUM_GRADES + c] = {cell.score, cell.shared_unique,
                                            cell.pair_vocab_size};
      }
    }
  });
}

gradesim_status gradesim_classify_text(const gradesim_corpus* corpus,
                                       const char* text, size_t len,
                                       gradesim_classification* out) {
  if (!corpus) return null_argument("corpus");
  if (!out) return null_argument("out");
  if (!text && len != 0) return null_argument("text");
  return guarded([&] {
    fill(gradesim::classify(std::string_view(text ? text : "", len),
                            corpus->corpus),
         out);
  });
}

gradesim_status gradesim_classify_file(const gradesim_corpus* corpus,
                                       const char* path,
                                       gradesim_classification* out) {
  if (!corpus) return null_argument("corpus");
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    const std::string bytes = gradesim::read_file(path);
    gradesim::TokenSequence query;
    try {
      query = gradesim::tokenize(bytes);
    } catch (const gradesim::DecodeError& e) {
      throw gradesim::DecodeError(e.offset(), path);
    }
    if (query.empty()) {
      throw gradesim::Error(gradesim::ErrorCode::kEmptyQuery,
                            std::string(path) + ": no tokens after tokenization");
    }
    fill(gradesim::classify(query, corpus->corpus), out);
  });
}

}  // extern "C"
