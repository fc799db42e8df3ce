// gradesim: grade-level similarity of Uzbek texts against a graded corpus.
//
//   gradesim stats    --manifest corpus.tsv
//   gradesim matrix   --manifest corpus.tsv --format tsv
//   gradesim classify --manifest corpus.tsv --input text.txt --format json

#include <array>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "gradesim/gradesim.h"
#include "report.hpp"

namespace {

using gradesim::cli::Format;
using gradesim::cli::OutputSpec;

struct CorpusDeleter {
  void operator()(gradesim_corpus* c) const { gradesim_corpus_free(c); }
};
using CorpusHandle = std::unique_ptr<gradesim_corpus, CorpusDeleter>;

int report_failure(gradesim_status status) {
  std::cerr << "gradesim: " << gradesim_status_string(status) << ": "
            << gradesim_last_error() << '\n';
  return static_cast<int>(status) + 1;
}

int run_stats(const gradesim_corpus* corpus, const OutputSpec& spec) {
  gradesim::cli::GradeStatsTable grades{};
  for (int g = 1; g <= GRADESIM_NUM_GRADES; ++g) {
    if (auto st = gradesim_corpus_grade_stats(corpus, g, &grades[g - 1])) {
      return report_failure(st);
    }
  }
  uint64_t overall = 0;
  if (auto st = gradesim_corpus_overall_unique(corpus, &overall)) {
    return report_failure(st);
  }
  std::cout << gradesim::cli::render_stats(grades, overall, spec);
  return 0;
}

int run_matrix(const gradesim_corpus* corpus, const OutputSpec& spec) {
  std::array<gradesim_pair_similarity, GRADESIM_NUM_GRADES * GRADESIM_NUM_GRADES>
      cells{};
  if (auto st = gradesim_class_matrix(corpus, cells.data())) {
    return report_failure(st);
  }
  std::cout << gradesim::cli::render_matrix(cells, spec);
  return 0;
}

int run_classify(const gradesim_corpus* corpus, const std::string& input,
                 const OutputSpec& spec) {
  gradesim_classification result{};
  if (auto st = gradesim_classify_file(corpus, input.c_str(), &result)) {
    return report_failure(st);
  }
  std::cout << gradesim::cli::render_classification(result, spec);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grade-level text similarity over a graded school corpus"};
  app.set_version_flag("--version", std::string(gradesim_version()));
  app.require_subcommand(1);

  std::string manifest;
  std::string input;
  OutputSpec spec;
  const std::map<std::string, Format> formats{
      {"table", Format::kTable}, {"tsv", Format::kTsv}, {"json", Format::kJson}};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--manifest", manifest,
                    "Corpus manifest: <grade><TAB><path> per line")
        ->required();
    cmd->add_option("--format", spec.format, "Output format: table, tsv, json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--precision", spec.precision, "Decimal places for scores")
        ->check(CLI::Range(1, gradesim::cli::kMaxPrecision));
  };

  auto* stats = app.add_subcommand("stats", "Token and vocabulary counts per grade");
  add_common(stats);
  auto* matrix = app.add_subcommand("matrix", "Pairwise class similarity matrix");
  add_common(matrix);
  auto* classify = app.add_subcommand("classify", "Assign a grade to a text");
  add_common(classify);
  classify->add_option("--input", input, "UTF-8 text to classify")->required();

  CLI11_PARSE(app, argc, argv);

  gradesim_corpus* raw = nullptr;
  if (auto st = gradesim_corpus_open(manifest.c_str(), &raw)) {
    return report_failure(st);
  }
  CorpusHandle corpus(raw);

  try {
    if (stats->parsed()) return run_stats(corpus.get(), spec);
    if (matrix->parsed()) return run_matrix(corpus.get(), spec);
    return run_classify(corpus.get(), input, spec);
  } catch (const std::exception& e) {
    std::cerr << "gradesim: " << e.what() << '\n';
    return 1;
  }
}
