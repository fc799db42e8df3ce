#ifndef GRADESIM_ERROR_HPP
#define GRADESIM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradesim {

// Values mirror gradesim_status in gradesim.h.
enum class ErrorCode {
  kDecode = 1,
  kIo = 2,
  kParse = 3,
  kRange = 4,
  kIncompleteCorpus = 5,
  kEmptyClass = 6,
  kEmptyQuery = 7,
  kDomain = 8,
  kAlignment = 9,
  kUndefinedSimilarity = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised for malformed UTF-8; offset is the byte index of the first bad byte.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t offset, const std::string& context)
      : Error(ErrorCode::kDecode,
              (context.empty() ? std::string() : context + ": ") +
                  "invalid UTF-8 at byte offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gradesim

#endif  // GRADESIM_ERROR_HPP
