#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "biq/biquasigroup.hpp"
#include "biq/group.hpp"
#include "biq/permutation.hpp"

namespace biq {

/// Where the constant sits in a linear operation:
///   middle: x∘y = φx + a + ψy
///   end:    x∘y = φx + ψy + a
enum class SpecKind { middle, end };

std::string_view to_string(SpecKind kind);
std::optional<SpecKind> parse_spec_kind(std::string_view text);

/// Value of a linear operation at (x, y) over `group`.
inline Element linear_value(const FiniteGroup& group, SpecKind kind,
                            const Permutation& left, Element constant,
                            const Permutation& right, Element x, Element y) {
  if (kind == SpecKind::middle) {
    return group.add(group.add(left(x), constant), right(y));
  }
  return group.add(group.add(left(x), right(y)), constant);
}

CayleyTable linear_table(const FiniteGroup& group, SpecKind kind,
                         const Permutation& left, Element constant,
                         const Permutation& right);

/// A biquasigroup linear over a group: ∘ uses (φ, a, ψ), * uses (α, b, β).
class LinearSpec {
 public:
  /// Throws biq::Error if a map is not an automorphism of `group` (the
  /// message names the map and a violating pair) or a constant is outside
  /// the carrier.
  LinearSpec(std::shared_ptr<const FiniteGroup> group, Permutation phi,
             Permutation psi, Element a, Permutation alpha, Permutation beta,
             Element b, SpecKind kind = SpecKind::middle);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept {
    return group_;
  }
  const Permutation& phi() const noexcept { return phi_; }
  const Permutation& psi() const noexcept { return psi_; }
  const Permutation& alpha() const noexcept { return alpha_; }
  const Permutation& beta() const noexcept { return beta_; }
  Element a() const noexcept { return a_; }
  Element b() const noexcept { return b_; }
  SpecKind kind() const noexcept { return kind_; }

  Element circ(Element x, Element y) const noexcept {
    return linear_value(*group_, kind_, phi_, a_, psi_, x, y);
  }
  Element star(Element x, Element y) const noexcept {
    return linear_value(*group_, kind_, alpha_, b_, beta_, x, y);
  }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  Permutation phi_, psi_;
  Element a_;
  Permutation alpha_, beta_;
  Element b_;
  SpecKind kind_;
};

Biquasigroup realize(const LinearSpec& spec);

}  // namespace biq
