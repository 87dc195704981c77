#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biq/biquasigroup.hpp"
#include "biq/group.hpp"
#include "biq/identity.hpp"

namespace biq {

/// Compact group syntax: zn:K | z2xz2 | z2xz4 | z2cube | s3 | d4 | q8 | file:PATH.
struct GroupName {
  enum class Tag { zn, z2xz2, z2xz4, z2cube, s3, d4, q8, file };
  Tag tag = Tag::zn;
  std::size_t k = 1;  // zn only
  std::string path;   // file only

  friend bool operator==(const GroupName&, const GroupName&) = default;
};

GroupName parse_group_name(std::string_view text);
std::string to_string(const GroupName& name);

/// Canonical tables, element 0 always the identity:
///   zn:K     addition mod K
///   products lexicographic pairing, e.g. (a,b) in Z2xZ4 is 4a+b
///   s3       permutations of {0,1,2} in lexicographic order of their image
///            lists; x·y applies y first
///   d4       r^i s^j is i+4j, with s r = r^-1 s
///   q8       1,i,j,k,-1,-i,-j,-k are 0..7
FiniteGroup catalog(const GroupName& name);

/// zn:1 .. zn:8 followed by the named groups of order <= 8.
std::vector<GroupName> catalog_groups();

/// x ∘ y = x · y⁻¹
CayleyTable ward_from_group(const FiniteGroup& group);

/// The group x·y = x∘(e∘y) of a Ward quasigroup, e its diagonal constant.
FiniteGroup derived_group(const CayleyTable& ward);

/// (Q,∘,*) with x*y = (x∘y)∘q for a medial unipotent ∘ with diagonal q.
Biquasigroup extend_e4(const CayleyTable& q_table);

/// x∘y = (αx)⁻¹·(αy), x*y = x·y⁻¹; alpha is any bijection.
Biquasigroup t26_construct(const FiniteGroup& group, const Permutation& alpha);

/// * is the (commutative) group, x∘y = x*y⁻¹.
Biquasigroup inverse_op_biq(const FiniteGroup& group);

/// ∘ is the group, x*y = y⁻¹·x.
Biquasigroup e5_example(const FiniteGroup& group);

/// Over a commutative group: x∘y = y−x, x*y = x+y.
Biquasigroup e7_example(const FiniteGroup& group);

/// Over Z_n: x∘y = ax+(1−a)y, x*y = a²x+(1−a²)y, requires a²−a ≡ 1.
Biquasigroup family_c71(long long n, long long a);

/// Order n = a²−a−1, a >= 3.
///   variant 1: x∘y = ax+(1−a)y,  x*y = (a+1)x−ay
///   variant 2: x∘y = (1−a)x+ay,  x*y = (2−a)x+(a−1)y
Biquasigroup family_c72(long long a, int variant);

/// Over Z_n with gcd(a,n) = 1: x∘y = ax−y+c, x*y = x−y+d.
Biquasigroup family_e8_zn(long long n, long long a, long long c, long long d);

/// Over Z_n with gcd(a,n) = 1: x∘y = x−a²y−ab, x*y = x+ay+b.
Biquasigroup family_e9_zn(long long n, long long a, long long b);

/// Over Z_n, n = a²+1 > 4: x∘y = x+y, x*y = x+ay.
Biquasigroup e9_example(long long a);

enum class Family {
  ward,
  derived_group,
  e4_extension,
  t26,
  inverse_op,
  e5_example,
  e7_example,
  c71,
  c72_v1,
  c72_v2,
  e8_zn,
  e9_zn,
  e9_example,
};

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family family);
std::span<const Family> all_families();

/// The identity each family is built to satisfy; none for derived_group.
std::optional<Builtin> target_identity(Family family);

struct FamilyParams {
  Family family = Family::ward;
  std::optional<GroupName> group;
  std::optional<CayleyTable> table;  // derived_group / e4_extension input
  std::optional<long long> a, b, c, d, n;
  std::optional<int> variant;  // c72 only; overrides the family's variant
};

/// Dispatches to the constructor for params.family. t26 uses the label
/// shift x ↦ x+a mod n as alpha; e4_extension without a table extends
/// x∘y = x−y+a over the (commutative) group.
Biquasigroup construct(const FamilyParams& params);

}  // namespace biq
