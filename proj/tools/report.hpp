#ifndef GRADESIM_TOOLS_REPORT_HPP
#define GRADESIM_TOOLS_REPORT_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "gradesim/gradesim.h"

namespace gradesim::cli {

enum class Format { kTable, kTsv, kJson };

struct OutputSpec {
  Format format = Format::kTable;
  /// Decimal places for scores, at least 1.
  int precision = 2;
};

inline constexpr int kMaxPrecision = 17;

/// Rounds half away from zero to `precision` decimals.
double round_score(double value, int precision);

/// Score text: "1" for an exact 1, otherwise fixed-point at `precision`.
std::string format_score(double value, int precision);

using GradeStatsTable = std::array<gradesim_grade_stats, GRADESIM_NUM_GRADES>;

std::string render_stats(const GradeStatsTable& grades,
                         std::uint64_t overall_unique, const OutputSpec& spec);

/// `cells` is the row-major 4x4 matrix filled by gradesim_class_matrix.
std::string render_matrix(std::span<const gradesim_pair_similarity> cells,
                          const OutputSpec& spec);

std::string render_classification(const gradesim_classification& result,
                                  const OutputSpec& spec);

}  // namespace gradesim::cli

#endif  // GRADESIM_TOOLS_REPORT_HPP
