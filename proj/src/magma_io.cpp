#include "biq/magma_io.hpp"

#include <charconv>
#include <sstream>

namespace biq {

FormatError::FormatError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
            ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::size_t column;
  std::string_view text;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back({start + 1, line.substr(start, i - start)});
  }
  return tokens;
}

std::size_t to_number(const Token& token, std::size_t line_no) {
  std::size_t value = 0;
  const auto* first = token.text.data();
  const auto* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw FormatError(line_no, token.column,
                      "expected a non-negative integer, got '" + std::string(token.text) + "'");
  }
  return value;
}

}  // namespace

std::vector<CayleyTable> read_magma_blocks(std::istream& in) {
  std::vector<CayleyTable> blocks;
  std::string line;
  std::size_t line_no = 0;

  std::size_t order = 0;           // 0: waiting for a header line
  std::size_t header_line = 0;
  std::vector<Element> entries;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split(line);
    if (!tokens.empty() && tokens.front().text.front() == '#') continue;
    if (tokens.empty()) {
      if (order != 0) {
        throw FormatError(line_no, 1,
                          "blank line inside a block: expected " + std::to_string(order) +
                              " rows after the header on line " + std::to_string(header_line));
      }
      continue;
    }
    if (order == 0) {
      if (tokens.size() != 1) {
        throw FormatError(line_no, tokens[1].column, "header line must hold only the order");
      }
      order = to_number(tokens[0], line_no);
      if (order == 0) throw FormatError(line_no, tokens[0].column, "order must be at least 1");
      header_line = line_no;
      entries.clear();
      continue;
    }
    if (tokens.size() != order) {
      const std::size_t column = tokens.size() > order ? tokens[order].column : line.size() + 1;
      throw FormatError(line_no, column,
                        "row has " + std::to_string(tokens.size()) + " entries, expected " +
                            std::to_string(order));
    }
    for (const auto& token : tokens) {
      const std::size_t v = to_number(token, line_no);
      if (v >= order) {
        throw FormatError(line_no, token.column,
                          "entry " + std::to_string(v) + " out of range 0.." +
                              std::to_string(order - 1));
      }
      entries.push_back(static_cast<Element>(v));
    }
    if (entries.size() == order * order) {
      blocks.emplace_back(order, std::move(entries));
      entries = {};
      order = 0;
    }
  }
  if (order != 0) {
    throw FormatError(line_no + 1, 1,
                      "unexpected end of input: block started on line " +
                          std::to_string(header_line) + " is incomplete");
  }
  return blocks;
}

CayleyTable read_magma(std::istream& in) {
  auto blocks = read_magma_blocks(in);
  if (blocks.size() != 1) {
    throw FormatError(1, 1, "expected exactly one table block, found " +
                                std::to_string(blocks.size()));
  }
  return std::move(blocks.front());
}

CayleyTable read_magma(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_magma(in);
}

std::string format_magma(const CayleyTable& table) {
  std::ostringstream out;
  out << table.order() << '\n';
  for (Element x = 0; x < table.order(); ++x) {
    for (Element y = 0; y < table.order(); ++y) {
      if (y) out << ' ';
      out << table(x, y);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_magma_pair(const CayleyTable& circ, const CayleyTable& star) {
  return format_magma(circ) + "\n" + format_magma(star);
}

}  // namespace biq
