#ifndef HOOPWORK_ERRORS_HPP
#define HOOPWORK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hoopwork {

// Base class for everything this library throws on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected text in the term, equation, or builder language.
// `offset` is the byte position of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Semantic misuse: foreign elements, absent symbols, signature mismatch,
// uncertified inputs to certified-only constructions, symbolic carriers
// where finite ones are required.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace hoopwork

#endif
