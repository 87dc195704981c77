#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "biq/cayley_table.hpp"
#include "biq/error.hpp"

namespace biq {

// Text format: '#' comment lines anywhere; the first other line is the order
// n, followed by n rows of n whitespace-separated integers (row i lists
// i∘0 ... i∘(n-1)). A biquasigroup file holds two such blocks separated by
// a blank line, ∘ first.

/// Thrown for malformed text; line and column are 1-based.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads one or more blocks. Latin-ness is not checked here.
std::vector<CayleyTable> read_magma_blocks(std::istream& in);

CayleyTable read_magma(std::istream& in);
CayleyTable read_magma(std::string_view text);

std::string format_magma(const CayleyTable& table);

/// Two blocks separated by one blank line.
std::string format_magma_pair(const CayleyTable& circ, const CayleyTable& star);

}  // namespace biq
