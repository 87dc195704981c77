#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "biq/cayley_table.hpp"
#include "biq/permutation.hpp"

namespace biq {

/// A group written additively: x + y is table()(x, y). Possibly non-abelian.
///
/// Instances only come out of group_structure(), so the group axioms hold
/// for every FiniteGroup value.
class FiniteGroup {
 public:
  const CayleyTable& table() const noexcept { return table_; }
  std::size_t order() const noexcept { return table_.order(); }
  Element identity() const noexcept { return identity_; }
  Element inverse(Element x) const noexcept { return inverse_[x]; }
  bool commutative() const noexcept { return commutative_; }

  Element add(Element x, Element y) const noexcept { return table_(x, y); }
  /// x - y := x + (-y)
  Element subtract(Element x, Element y) const noexcept {
    return table_(x, inverse_[y]);
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  friend std::optional<FiniteGroup> group_structure(const CayleyTable& table);

  FiniteGroup(CayleyTable table, Element identity, std::vector<Element> inverse,
              bool commutative)
      : table_(std::move(table)),
        identity_(identity),
        inverse_(std::move(inverse)),
        commutative_(commutative) {}

  CayleyTable table_;
  Element identity_;
  std::vector<Element> inverse_;
  bool commutative_;
};

/// The group view of `table`, or nothing if it is not a group.
std::optional<FiniteGroup> group_structure(const CayleyTable& table);

/// Elements commuting with everything, ascending.
std::vector<Element> center(const FiniteGroup& group);

/// First pair (x, y) with p(x + y) != p(x) + p(y), if any.
std::optional<std::pair<Element, Element>> find_homomorphism_violation(
    const FiniteGroup& group, const Permutation& p);

bool is_automorphism(const FiniteGroup& group, const Permutation& p);

/// Aut(group), sorted lexicographically by image array (so the identity map
/// comes first). Enumerates images of a greedy generating set and keeps the
/// ones that extend to a bijective homomorphism.
std::vector<Permutation> automorphisms(const FiniteGroup& group);

/// x ↦ -p(x). A bijection always; an automorphism only on abelian groups.
Permutation negated(const FiniteGroup& group, const Permutation& p);

}  // namespace biq
