#include "biq/permutation.hpp"

#include <numeric>
#include <string>

#include "biq/error.hpp"

namespace biq {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Element v = images_[i];
    if (v >= images_.size() || hit[v]) {
      throw Error("not a bijection: image " + std::to_string(v) + " at position " +
                  std::to_string(i));
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t order) {
  std::vector<Element> images(order);
  std::iota(images.begin(), images.end(), Element{0});
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::after(const Permutation& inner) const {
  if (inner.order() != order()) throw Error("composing permutations of different orders");
  std::vector<Element> images(order());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = images_[inner(i)];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Element> images(order());
  for (std::size_t i = 0; i < images.size(); ++i) images[images_[i]] = static_cast<Element>(i);
  return Permutation(std::move(images));
}

}  // namespace biq
