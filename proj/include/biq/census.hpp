#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biq/identity.hpp"
#include "biq/linear_spec.hpp"
#include "biq/structural.hpp"

namespace biq {

/// Index tuple of a linear spec: automorphisms are positions in the sorted
/// automorphism list. `tag` separates identities inside one multi-identity
/// check (the identity number, 0 otherwise). In circ-only censuses alpha,
/// beta and b are 0.
struct SpecDigest {
  std::uint8_t tag = 0;
  SpecKind kind = SpecKind::middle;
  std::uint32_t phi = 0;
  std::uint32_t psi = 0;
  Element a = 0;
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  Element b = 0;

  friend bool operator==(const SpecDigest&, const SpecDigest&) = default;
  friend auto operator<=>(const SpecDigest&, const SpecDigest&) = default;
};

/// "(phi,psi,a,alpha,beta,b)"
std::string to_string(const SpecDigest& digest);

/// Every linear operation φx ⊕ a ⊕ ψy over one group with its table
/// precomputed. Operation index = (φ·|Aut| + ψ)·n + a, so index order is
/// lexicographic in (φ, ψ, a). Throws biq::Error when the tables would
/// exceed 2^26 cells in total.
class SpecSpace {
 public:
  SpecSpace(FiniteGroup group, SpecKind kind);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept { return group_; }
  SpecKind kind() const noexcept { return kind_; }
  const std::vector<Permutation>& automorphisms() const noexcept { return aut_; }

  std::size_t operation_count() const noexcept { return op_count_; }
  /// |Aut|²·n when circ_only, else (|Aut|²·n)².
  std::uint64_t size(bool circ_only) const noexcept;

  const CayleyTable& operation(std::size_t index) const noexcept { return tables_[index]; }

  std::size_t operation_index(std::uint32_t left, std::uint32_t right, Element constant) const;
  SpecDigest digest(std::size_t circ_index, std::optional<std::size_t> star_index) const;
  LinearSpec spec(const SpecDigest& digest) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  SpecKind kind_;
  std::vector<Permutation> aut_;
  std::size_t op_count_ = 0;
  std::vector<CayleyTable> tables_;
};

std::uint64_t linear_spec_count(const FiniteGroup& group, bool circ_only);

/// Visits every spec in sorted index order until `visit` returns false.
void enumerate_linear_specs(const SpecSpace& space, bool circ_only,
                            const std::function<bool(const LinearSpec&)>& visit);

/// BIQ_WORKERS if set to a positive integer, else the hardware concurrency.
unsigned default_worker_count();

struct CensusOptions {
  unsigned workers = 0;  // 0: default_worker_count()
  std::string group_label;
};

struct CensusReport {
  std::string group;
  std::string identity;  // canonical rendering
  SpecKind kind = SpecKind::middle;
  bool circ_only = false;  // identity never uses *: only (φ, ψ, a) is enumerated
  std::uint64_t total_specs = 0;
  std::vector<SpecDigest> satisfying;  // sorted
  std::chrono::nanoseconds elapsed{0};
};

/// Checks every realized spec against `identity`. The circ index range is
/// split into contiguous chunks, one per worker, and the results are
/// concatenated, so the output does not depend on the worker count.
/// Throws biq::Error for spaces of more than 2^31 specs.
CensusReport run_census(const SpecSpace& space, const Equation& identity,
                        const CensusOptions& options = {});
CensusReport run_census(const FiniteGroup& group, const Equation& identity, SpecKind kind,
                        const CensusOptions& options = {});

enum class TheoremId {
  T11, T22, T23, T24, T24a, T25, T26, T26lin, T27, T28,
  T29struct, T29lin, P5lin, MED7, MED7zn, BOOL, SEC10,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);
std::span<const TheoremId> all_theorems();

/// The identity a theorem characterizes; none for BOOL (all of e1..e9) and
/// SEC10 (each of e2..e9).
std::optional<Builtin> theorem_identity(TheoremId id);

/// Whether the theorem's conclusion forces a commutative group.
bool requires_commutative(TheoremId id);

/// Membership of `spec` in the theorem's family, with all automorphism and
/// constant equations evaluated pointwise. For the implication-only tags
/// (T24, T25, T29struct) this is "satisfies the identity and meets the
/// conclusion". Throws biq::Error for SEC10, which compares whole censuses,
/// and for MED7zn over anything but the canonical Z_n.
bool predicate(TheoremId id, const LinearSpec& spec);

struct TheoremCheck {
  TheoremId theorem;
  std::string group;
  std::vector<SpecDigest> census_set;
  std::vector<SpecDigest> predicate_set;
  std::vector<SpecDigest> witnesses;  // symmetric difference
  bool agree = false;
};

struct VerifyOptions {
  unsigned workers = 0;
  std::string group_label;
  std::optional<Builtin> identity;  // SEC10: restrict to one of e2..e9
};

/// census_set: specs whose realization satisfies the theorem's identity
/// (intersected with per-table mediality for MED7/MED7zn). predicate_set:
/// specs passing predicate(). For SEC10 both kinds are enumerated; a spec
/// is in census_set when it satisfies the identity and in predicate_set when
/// its tables occur among the satisfying tables of the other kind.
TheoremCheck verify_theorem(TheoremId id, const FiniteGroup& group,
                            const VerifyOptions& options = {});

}  // namespace biq
