#ifndef GRADESIM_GRADE_HPP
#define GRADESIM_GRADE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <string>

#include "gradesim/error.hpp"

namespace gradesim {

/// Primary-school grade, always in [1, 4].
class Grade {
 public:
  static constexpr int kMin = 1;
  static constexpr int kMax = 4;
  static constexpr std::size_t kCount = 4;

  constexpr explicit Grade(int value) : value_(value) {
    if (value < kMin || value > kMax) {
      throw Error(ErrorCode::kRange,
                  "grade " + std::to_string(value) + " outside 1..4");
    }
  }

  static constexpr Grade from_index(std::size_t index) {
    return Grade(static_cast<int>(index) + kMin);
  }

  constexpr int value() const noexcept { return value_; }
  constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(value_ - kMin);
  }

  constexpr auto operator<=>(const Grade&) const = default;

 private:
  int value_;
};

inline constexpr std::array<Grade, Grade::kCount> kAllGrades{
    Grade(1), Grade(2), Grade(3), Grade(4)};

/// Fixed-size table indexed by grade.
template <typename T>
using PerGrade = std::array<T, Grade::kCount>;

}  // namespace gradesim

#endif  // GRADESIM_GRADE_HPP
