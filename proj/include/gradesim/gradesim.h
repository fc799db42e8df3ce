/*
 * gradesim C API.
 *
 * Every function returning gradesim_status leaves a human-readable message
 * for the calling thread in gradesim_last_error() when it fails. Handles are
 * opaque; a corpus handle is immutable once opened and may be shared across
 * threads.
 */
#ifndef GRADESIM_H
#define GRADESIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GRADESIM_BUILDING)
#    define GRADESIM_API __declspec(dllexport)
#  else
#    define GRADESIM_API __declspec(dllimport)
#  endif
#else
#  define GRADESIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gradesim_status {
  GRADESIM_OK = 0,
  GRADESIM_ERR_DECODE = 1,
  GRADESIM_ERR_IO = 2,
  GRADESIM_ERR_PARSE = 3,
  GRADESIM_ERR_RANGE = 4,
  GRADESIM_ERR_INCOMPLETE_CORPUS = 5,
  GRADESIM_ERR_EMPTY_CLASS = 6,
  GRADESIM_ERR_EMPTY_QUERY = 7,
  GRADESIM_ERR_DOMAIN = 8,
  GRADESIM_ERR_ALIGNMENT = 9,
  GRADESIM_ERR_UNDEFINED_SIMILARITY = 10,
  GRADESIM_ERR_INVALID_ARGUMENT = 11,
  GRADESIM_ERR_INTERNAL = 12
} gradesim_status;

typedef enum gradesim_decision {
  GRADESIM_DECISION_CONTAINMENT = 0,
  GRADESIM_DECISION_COSINE_ARGMAX = 1
} gradesim_decision;

#define GRADESIM_NUM_GRADES 4

typedef struct gradesim_corpus gradesim_corpus;
typedef struct gradesim_tokens gradesim_tokens;

typedef struct gradesim_grade_stats {
  uint64_t total_tokens;
  uint64_t unique_tokens;
} gradesim_grade_stats;

typedef struct gradesim_pair_similarity {
  double score;
  uint64_t shared_unique;
  uint64_t pair_vocab_size;
} gradesim_pair_similarity;

typedef struct gradesim_classification {
  int chosen_grade;
  gradesim_decision decision;
  /* Indexed by grade - 1. */
  double scores[GRADESIM_NUM_GRADES];
  uint64_t shared_unique[GRADESIM_NUM_GRADES];
} gradesim_classification;

GRADESIM_API const char* gradesim_version(void);
GRADESIM_API const char* gradesim_status_string(gradesim_status status);
/* Message of the last failed call on this thread; "" if none. */
GRADESIM_API const char* gradesim_last_error(void);

/* Tokenization. */
GRADESIM_API gradesim_status gradesim_tokenize(const char* text, size_t len,
                                               gradesim_tokens** out);
GRADESIM_API size_t gradesim_tokens_count(const gradesim_tokens* tokens);
/* Null-terminated UTF-8; valid until gradesim_tokens_free. NULL if out of range. */
GRADESIM_API const char* gradesim_tokens_at(const gradesim_tokens* tokens,
                                            size_t index);
GRADESIM_API void gradesim_tokens_free(gradesim_tokens* tokens);

/* Corpus. */
GRADESIM_API gradesim_status gradesim_corpus_open(const char* manifest_path,
                                                  gradesim_corpus** out);
GRADESIM_API void gradesim_corpus_free(gradesim_corpus* corpus);
GRADESIM_API gradesim_status gradesim_corpus_grade_stats(
    const gradesim_corpus* corpus, int grade, gradesim_grade_stats* out);
GRADESIM_API gradesim_status gradesim_corpus_overall_unique(
    const gradesim_corpus* corpus, uint64_t* out);

/* Row-major 4x4: out[(row - 1) * 4 + (col - 1)]. */
GRADESIM_API gradesim_status gradesim_class_matrix(
    const gradesim_corpus* corpus,
    gradesim_pair_similarity out[GRADESIM_NUM_GRADES * GRADESIM_NUM_GRADES]);

/* Classification. */
GRADESIM_API gradesim_status gradesim_classify_text(
    const gradesim_corpus* corpus, const char* text, size_t len,
    gradesim_classification* out);
GRADESIM_API gradesim_status gradesim_classify_file(
    const gradesim_corpus* corpus, const char* path,
    gradesim_classification* out);

#ifdef __cplusplus
}
#endif

#endif /* GRADESIM_H */
