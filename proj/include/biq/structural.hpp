#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biq/group.hpp"
#include "biq/identity.hpp"

namespace biq {

/// Structural consequences of the Ward-type identities, checked over every
/// pair of Latin squares of a small order.
enum class StructuralClaim {
  T11form,       // e2  ⟺ x∘y = x−βy, x*y = α(x−y) for a group and bijections α, β
  T24unipotent,  // e4  ⇒ common diagonal q, x*y = (x∘y)∘q = q∘(y∘x)
  T25neutral,    // e5  ⇒ single common idempotent e, right neutral for both; * unipotent
  T26ward,       // e6  ⟺ x∘y = (αx)⁻¹(αy), x*y = xy⁻¹ for a group and a bijection α
  T26unipotent,  // e6  ⇒ both tables unipotent with one constant
  T29idem,       // e9  ⇒ at most one idempotent, a common right neutral element
  P8idem,        // e8  ⇒ at most one *-idempotent, right neutral for *; ∘ unipotent adds more
};

std::string_view to_string(StructuralClaim claim);
std::optional<StructuralClaim> parse_structural_claim(std::string_view name);
std::span<const StructuralClaim> all_structural_claims();
Builtin claim_identity(StructuralClaim claim);

/// All Latin squares of order n <= 4, lexicographic by row-major entries.
std::vector<CayleyTable> enumerate_quasigroups(std::size_t n);

/// Every group table on {0..n-1}, n <= 4, in the same order.
std::vector<FiniteGroup> carrier_groups(std::size_t n);

/// x∘y = x−βy and x*y = α(x−y) over `group` for some bijections α, β.
bool has_t11_form(const CayleyTable& circ, const CayleyTable& star, const FiniteGroup& group);

/// Decides the existential of the e6 characterization: with e the
/// *-diagonal and x·y = x*(e*y), ∘ must equal (αx)⁻¹·(αy) for α x = e∘x and
/// * must equal x·y⁻¹. Any witnessing (group, α) can be normalized to this one.
bool has_t26_form(const CayleyTable& circ, const CayleyTable& star);

/// Conclusion check for a pair already known to satisfy the claim's
/// identity. Returns a description of the first failed conclusion.
/// T11form needs the groups on the carrier.
std::optional<std::string> claim_violation(StructuralClaim claim, const CayleyTable& circ,
                                           const CayleyTable& star,
                                           std::span<const FiniteGroup> groups = {});

/// For e8 models with a constant ∘-diagonal u: does x∘y = x*(y*x) hold? The
/// claim itself checks x∘y = u*(y*x).
bool p8_printed_form_holds(const CayleyTable& circ, const CayleyTable& star);

struct StructuralReport {
  StructuralClaim claim;
  std::size_t order = 0;
  std::uint64_t pairs_examined = 0;
  std::uint64_t satisfying_pairs = 0;
  std::uint64_t converse_checks = 0;  // constructions tested in the reverse direction
  std::uint64_t violation_count = 0;
  std::uint64_t printed_form_failures = 0;  // P8idem only, informational
  std::vector<std::string> violations;      // first few, described
};

/// Exhaustive over all Latin-square pairs of order n <= 4.
StructuralReport verify_structural(StructuralClaim claim, std::size_t n);

}  // namespace biq
