#pragma once

#include <optional>
#include <vector>

#include "biq/biquasigroup.hpp"
#include "biq/group.hpp"

namespace biq {

/// { a : a∘a = a }, ascending.
std::vector<Element> idempotents(const CayleyTable& table);

struct NeutralElements {
  std::optional<Element> left;   // e∘x = x for all x
  std::optional<Element> right;  // x∘e = x for all x
};

NeutralElements neutral_elements(const CayleyTable& table);

/// The common value of the diagonal, if it is constant.
std::optional<Element> unipotency(const CayleyTable& table);

bool is_commutative(const CayleyTable& table);

/// Satisfies (x∘z)∘(y∘z) = x∘y. Throws biq::Error for non-Latin input.
bool is_ward(const CayleyTable& table);

// Single-table identity checks on (Q,∘,∘).
bool is_medial(const CayleyTable& table);
bool is_paramedial(const CayleyTable& table);
bool is_left_modular(const CayleyTable& table);

/// Commutative with x + x = 0 throughout.
bool is_boolean_group(const FiniteGroup& group);

/// Per-table structure of a biquasigroup. `medial_*` and `paramedial_*`
/// are the single-table identities; the stronger notion for a pair (both
/// linear over one commutative group) needs a linear representation and is
/// only decided by the census.
struct PropertyReport {
  std::vector<Element> idempotents_circ;
  std::vector<Element> idempotents_star;
  std::optional<Element> left_neutral_circ;
  std::optional<Element> left_neutral_star;
  std::optional<Element> right_neutral_circ;
  std::optional<Element> right_neutral_star;
  std::optional<Element> unipotent_circ;
  std::optional<Element> unipotent_star;
  bool commutative_circ = false;
  bool commutative_star = false;
  bool ward_circ = false;
  bool ward_star = false;
  bool medial_circ = false;
  bool medial_star = false;
  bool paramedial_circ = false;
  bool paramedial_star = false;
  bool left_modular_circ = false;
  bool tables_equal = false;
};

PropertyReport full_report(const Biquasigroup& biq);

}  // namespace biq
