#include "biq/cayley_table.hpp"

#include <string>

#include "biq/error.hpp"

namespace biq {

CayleyTable::CayleyTable(std::size_t order, std::vector<Element> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ == 0) throw Error("table order must be at least 1");
  if (entries_.size() != order_ * order_) {
    throw Error("table of order " + std::to_string(order_) + " needs " +
                std::to_string(order_ * order_) + " entries, got " +
                std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] >= order_) {
      throw Error("entry " + std::to_string(entries_[i]) + " at index " +
                  std::to_string(i) + " out of range 0.." +
                  std::to_string(order_ - 1));
    }
  }
}

CayleyTable make_table(std::size_t order, std::span<const Element> entries) {
  return CayleyTable(order, std::vector<Element>(entries.begin(), entries.end()));
}

std::optional<LatinViolation> find_latin_violation(const CayleyTable& table) {
  const std::size_t n = table.order();
  std::vector<bool> seen(n);
  for (Element r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (Element c = 0; c < n; ++c) {
      const Element v = table(r, c);
      if (seen[v]) return LatinViolation{true, r, v};
      seen[v] = true;
    }
  }
  for (Element c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (Element r = 0; r < n; ++r) {
      const Element v = table(r, c);
      if (seen[v]) return LatinViolation{false, c, v};
      seen[v] = true;
    }
  }
  return std::nullopt;
}

bool is_latin_square(const CayleyTable& table) {
  return !find_latin_violation(table).has_value();
}

}  // namespace biq
