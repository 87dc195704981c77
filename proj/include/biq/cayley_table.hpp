#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace biq {

/// Carrier elements are always the indices 0..n-1.
using Element = std::uint32_t;

/// An n x n operation table over {0, ..., n-1}, stored row-major:
/// entry (x, y) holds x ∘ y.
class CayleyTable {
 public:
  /// Throws biq::Error if order is zero, the entry count is not order²,
  /// or an entry is outside the carrier.
  CayleyTable(std::size_t order, std::vector<Element> entries);

  /// Builds the table of `op(x, y)` for all x, y.
  template <typename Op>
  static CayleyTable generate(std::size_t order, Op&& op) {
    std::vector<Element> entries;
    entries.reserve(order * order);
    for (Element x = 0; x < order; ++x) {
      for (Element y = 0; y < order; ++y) {
        entries.push_back(static_cast<Element>(op(x, y)));
      }
    }
    return CayleyTable(order, std::move(entries));
  }

  std::size_t order() const noexcept { return order_; }

  Element operator()(Element x, Element y) const noexcept {
    return entries_[x * order_ + y];
  }

  std::span<const Element> entries() const noexcept { return entries_; }

  std::span<const Element> row(Element x) const noexcept {
    return std::span<const Element>(entries_).subspan(x * order_, order_);
  }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
  friend auto operator<=>(const CayleyTable&, const CayleyTable&) = default;

 private:
  std::size_t order_;
  std::vector<Element> entries_;
};

CayleyTable make_table(std::size_t order, std::span<const Element> entries);

/// The first repeated symbol found while scanning rows, then columns.
struct LatinViolation {
  bool in_row;     // false: the repetition is in a column
  Element line;    // row or column index
  Element value;   // the repeated symbol
};

std::optional<LatinViolation> find_latin_violation(const CayleyTable& table);

bool is_latin_square(const CayleyTable& table);

}  // namespace biq
