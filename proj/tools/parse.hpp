#pragma once

// Text grammar shared by the CLI and its tests:
//
//   elem   := '0' | ['-'] term (('+'|'-') term)*
//   term   := [INT '*'] basis
//   basis  := 'D' '(' INT ';' [part (',' part)*] ')'
//   part   := word ['^' INT]
//   word   := letter ('.' letter)* | '1'
//   letter := 'x' INT
//
// Free-algebra elements use  free := ['-'] fterm (('+'|'-') fterm)*  with
// fterm := [INT '*'] word.

#include <cstddef>
#include <string>
#include <string_view>

#include "divpow/gamma.hpp"

namespace divpow::cli {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses an element of Gamma^n(F) over x1..xm. Repeated words inside one
/// D(...) merge with the divided-power rule.
GammaElem parse_element(std::string_view src, std::uint32_t n, std::uint32_t m);

FreeElem parse_free(std::string_view src, std::uint32_t m);

}  // namespace divpow::cli
