#pragma once

#include <compare>
#include <span>
#include <vector>

#include "biq/cayley_table.hpp"

namespace biq {

/// A bijection of {0, ..., n-1}.
class Permutation {
 public:
  /// Throws biq::Error unless `images` is a bijection of 0..size-1.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t order);

  std::size_t order() const noexcept { return images_.size(); }
  Element operator()(Element x) const noexcept { return images_[x]; }
  std::span<const Element> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  /// (*this ∘ inner)(x) = (*this)(inner(x)).
  Permutation after(const Permutation& inner) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

}  // namespace biq
