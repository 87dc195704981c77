#include "biq/constructors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <numeric>

#include "biq/error.hpp"
#include "biq/magma_io.hpp"
#include "biq/properties.hpp"

namespace biq {

namespace {

FiniteGroup as_group(const CayleyTable& table, const std::string& what) {
  auto g = group_structure(table);
  if (!g) throw Error(what + " is not a group table");
  return std::move(*g);
}

CayleyTable cyclic_table(std::size_t k) {
  return CayleyTable::generate(k, [k](Element x, Element y) { return (x + y) % k; });
}

// Lexicographic pairing of Z_m1 x ... x Z_mr.
CayleyTable product_table(std::initializer_list<std::size_t> moduli) {
  const std::vector<std::size_t> m(moduli);
  std::size_t n = 1;
  for (auto k : m) n *= k;
  return CayleyTable::generate(n, [&](Element x, Element y) {
    std::size_t result = 0;
    std::size_t place = 1;
    for (std::size_t i = m.size(); i-- > 0;) {
      const std::size_t xi = (x / place) % m[i];
      const std::size_t yi = (y / place) % m[i];
      result += ((xi + yi) % m[i]) * place;
      place *= m[i];
    }
    return result;
  });
}

CayleyTable s3_table() {
  std::vector<std::array<Element, 3>> perms;
  std::array<Element, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return CayleyTable::generate(6, [&](Element x, Element y) {
    std::array<Element, 3> composed{};
    for (int i = 0; i < 3; ++i) composed[i] = perms[x][perms[y][i]];
    return std::find(perms.begin(), perms.end(), composed) - perms.begin();
  });
}

CayleyTable d4_table() {
  return CayleyTable::generate(8, [](Element x, Element y) {
    const int i = x % 4, j = x / 4, k = y % 4, l = y / 4;
    const int rot = ((j == 0 ? i + k : i - k) % 4 + 4) % 4;
    return rot + 4 * ((j + l) % 2);
  });
}

CayleyTable q8_table() {
  // unit products among 1, i, j, k as (sign, unit)
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return CayleyTable::generate(8, [](Element x, Element y) {
    const int sx = x / 4, ux = x % 4, sy = y / 4, uy = y % 4;
    const int sign = sx ^ sy ^ kSign[ux][uy];
    return 4 * sign + kUnit[ux][uy];
  });
}

long long mod(long long value, long long n) { return ((value % n) + n) % n; }

CayleyTable zn_linear(long long n, long long cx, long long cy, long long c) {
  return CayleyTable::generate(static_cast<std::size_t>(n), [=](Element x, Element y) {
    return mod(mod(cx, n) * x + mod(cy, n) * y + mod(c, n), n);
  });
}

void require_modulus(long long n) {
  if (n < 1) throw Error("modulus n must be at least 1, got " + std::to_string(n));
  if (n > 4096) throw Error("modulus n = " + std::to_string(n) + " is too large (max 4096)");
}

void require_coprime(long long a, long long n) {
  const long long g = std::gcd(mod(a, n), n);
  if (g != 1) {
    throw Error("gcd(" + std::to_string(a) + "," + std::to_string(n) + ") = " +
                std::to_string(g) + ", must be 1");
  }
}

std::size_t parse_size(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error("bad group name '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

GroupName parse_group_name(std::string_view text) {
  GroupName name;
  if (text.substr(0, 3) == "zn:") {
    name.tag = GroupName::Tag::zn;
    name.k = parse_size(text.substr(3), text);
    if (name.k < 1) throw Error("zn needs k >= 1");
    return name;
  }
  if (text.substr(0, 5) == "file:") {
    name.tag = GroupName::Tag::file;
    name.path = std::string(text.substr(5));
    if (name.path.empty()) throw Error("file: needs a path");
    return name;
  }
  if (text == "z2xz2") name.tag = GroupName::Tag::z2xz2;
  else if (text == "z2xz4") name.tag = GroupName::Tag::z2xz4;
  else if (text == "z2cube") name.tag = GroupName::Tag::z2cube;
  else if (text == "s3") name.tag = GroupName::Tag::s3;
  else if (text == "d4") name.tag = GroupName::Tag::d4;
  else if (text == "q8") name.tag = GroupName::Tag::q8;
  else {
    throw Error("unknown group '" + std::string(text) +
                "' (expected zn:K, z2xz2, z2xz4, z2cube, s3, d4, q8 or file:PATH)");
  }
  return name;
}

std::string to_string(const GroupName& name) {
  switch (name.tag) {
    case GroupName::Tag::zn: return "zn:" + std::to_string(name.k);
    case GroupName::Tag::z2xz2: return "z2xz2";
    case GroupName::Tag::z2xz4: return "z2xz4";
    case GroupName::Tag::z2cube: return "z2cube";
    case GroupName::Tag::s3: return "s3";
    case GroupName::Tag::d4: return "d4";
    case GroupName::Tag::q8: return "q8";
    case GroupName::Tag::file: return "file:" + name.path;
  }
  return "?";
}

FiniteGroup catalog(const GroupName& name) {
  switch (name.tag) {
    case GroupName::Tag::zn:
      if (name.k < 1 || name.k > 4096) throw Error("zn order must be in 1..4096");
      return as_group(cyclic_table(name.k), "zn");
    case GroupName::Tag::z2xz2: return as_group(product_table({2, 2}), "z2xz2");
    case GroupName::Tag::z2xz4: return as_group(product_table({2, 4}), "z2xz4");
    case GroupName::Tag::z2cube: return as_group(product_table({2, 2, 2}), "z2cube");
    case GroupName::Tag::s3: return as_group(s3_table(), "s3");
    case GroupName::Tag::d4: return as_group(d4_table(), "d4");
    case GroupName::Tag::q8: return as_group(q8_table(), "q8");
    case GroupName::Tag::file: {
      std::ifstream in(name.path);
      if (!in) throw Error("cannot open group file '" + name.path + "'");
      return as_group(read_magma(in), "'" + name.path + "'");
    }
  }
  throw Error("unknown group tag");
}

std::vector<GroupName> catalog_groups() {
  std::vector<GroupName> names;
  for (std::size_t k = 1; k <= 8; ++k) names.push_back({GroupName::Tag::zn, k, {}});
  for (auto tag : {GroupName::Tag::z2xz2, GroupName::Tag::z2xz4, GroupName::Tag::z2cube,
                   GroupName::Tag::s3, GroupName::Tag::d4, GroupName::Tag::q8}) {
    names.push_back({tag, 0, {}});
  }
  return names;
}

CayleyTable ward_from_group(const FiniteGroup& group) {
  return CayleyTable::generate(group.order(),
                               [&](Element x, Element y) { return group.subtract(x, y); });
}

FiniteGroup derived_group(const CayleyTable& ward) {
  if (!is_latin_square(ward) || !is_ward(ward)) {
    throw Error("input is not a Ward quasigroup");
  }
  const Element e = ward(0, 0);
  const CayleyTable product =
      CayleyTable::generate(ward.order(), [&](Element x, Element y) { return ward(x, ward(e, y)); });
  auto group = group_structure(product);
  if (!group || group->identity() != e) {
    throw std::logic_error("derived operation of a Ward quasigroup is not a group with identity e");
  }
  for (Element x = 0; x < ward.order(); ++x) {
    if (group->inverse(x) != ward(e, x) || ward(e, ward(e, x)) != x) {
      throw std::logic_error("Ward laws e∘(e∘x) = x and x⁻¹ = e∘x failed");
    }
    for (Element y = 0; y < ward.order(); ++y) {
      if (ward(e, ward(x, y)) != ward(y, x)) {
        throw std::logic_error("Ward law e∘(x∘y) = y∘x failed");
      }
    }
  }
  return std::move(*group);
}

Biquasigroup extend_e4(const CayleyTable& q_table) {
  if (!is_latin_square(q_table)) throw Error("extend_e4: table is not a Latin square");
  const auto q = unipotency(q_table);
  if (!q) throw Error("extend_e4: table is not unipotent");
  if (!is_medial(q_table)) throw Error("extend_e4: table is not medial");
  CayleyTable star = CayleyTable::generate(
      q_table.order(), [&](Element x, Element y) { return q_table(q_table(x, y), *q); });
  return Biquasigroup(q_table, std::move(star));
}

Biquasigroup t26_construct(const FiniteGroup& group, const Permutation& alpha) {
  if (alpha.order() != group.order()) throw Error("alpha and group have different orders");
  CayleyTable circ = CayleyTable::generate(group.order(), [&](Element x, Element y) {
    return group.add(group.inverse(alpha(x)), alpha(y));
  });
  return Biquasigroup(std::move(circ), ward_from_group(group));
}

Biquasigroup inverse_op_biq(const FiniteGroup& group) {
  if (!group.commutative()) throw Error("inverse_op_biq needs a commutative group");
  return Biquasigroup(ward_from_group(group), group.table());
}

Biquasigroup e5_example(const FiniteGroup& group) {
  CayleyTable star = CayleyTable::generate(
      group.order(), [&](Element x, Element y) { return group.add(group.inverse(y), x); });
  return Biquasigroup(group.table(), std::move(star));
}

Biquasigroup e7_example(const FiniteGroup& group) {
  if (!group.commutative()) throw Error("e7_example needs a commutative group");
  CayleyTable circ = CayleyTable::generate(
      group.order(), [&](Element x, Element y) { return group.subtract(y, x); });
  return Biquasigroup(std::move(circ), group.table());
}

Biquasigroup family_c71(long long n, long long a) {
  require_modulus(n);
  const long long residue = mod(a * a - a, n);
  if (residue != mod(1, n)) {
    throw Error("c71 needs [a^2-a]_n = 1, got [" + std::to_string(a) + "^2-" +
                std::to_string(a) + "]_" + std::to_string(n) + " = " + std::to_string(residue));
  }
  return Biquasigroup(zn_linear(n, a, 1 - a, 0), zn_linear(n, a * a, 1 - a * a, 0));
}

Biquasigroup family_c72(long long a, int variant) {
  if (a < 3) throw Error("c72 needs a >= 3, got " + std::to_string(a));
  const long long n = a * a - a - 1;
  require_modulus(n);
  if (variant == 1) return Biquasigroup(zn_linear(n, a, 1 - a, 0), zn_linear(n, a + 1, -a, 0));
  if (variant == 2) {
    return Biquasigroup(zn_linear(n, 1 - a, a, 0), zn_linear(n, 2 - a, a - 1, 0));
  }
  throw Error("c72 variant must be 1 or 2, got " + std::to_string(variant));
}

Biquasigroup family_e8_zn(long long n, long long a, long long c, long long d) {
  require_modulus(n);
  require_coprime(a, n);
  return Biquasigroup(zn_linear(n, a, -1, c), zn_linear(n, 1, -1, d));
}

Biquasigroup family_e9_zn(long long n, long long a, long long b) {
  require_modulus(n);
  require_coprime(a, n);
  return Biquasigroup(zn_linear(n, 1, -a * a, -a * b), zn_linear(n, 1, a, b));
}

Biquasigroup e9_example(long long a) {
  if (a < 2) {
    throw Error("e9_example needs n = a^2+1 > 4, got n = " + std::to_string(a * a + 1));
  }
  const long long n = a * a + 1;
  require_modulus(n);
  return Biquasigroup(zn_linear(n, 1, 1, 0), zn_linear(n, 1, a, 0));
}

namespace {

constexpr std::array<Family, 13> kFamilies = {
    Family::ward,       Family::derived_group, Family::e4_extension, Family::t26,
    Family::inverse_op, Family::e5_example,    Family::e7_example,   Family::c71,
    Family::c72_v1,     Family::c72_v2,        Family::e8_zn,        Family::e9_zn,
    Family::e9_example,
};

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::ward: return "ward";
    case Family::derived_group: return "derived_group";
    case Family::e4_extension: return "e4_extension";
    case Family::t26: return "t26";
    case Family::inverse_op: return "inverse_op";
    case Family::e5_example: return "e5_example";
    case Family::e7_example: return "e7_example";
    case Family::c71: return "c71";
    case Family::c72_v1: return "c72_v1";
    case Family::c72_v2: return "c72_v2";
    case Family::e8_zn: return "e8_zn";
    case Family::e9_zn: return "e9_zn";
    case Family::e9_example: return "e9_example";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const Family f : kFamilies) {
    if (name == to_string(f)) return f;
  }
  if (name == "c72") return Family::c72_v1;
  return std::nullopt;
}

std::span<const Family> all_families() { return kFamilies; }

std::optional<Builtin> target_identity(Family family) {
  switch (family) {
    case Family::ward: return Builtin::e1;
    case Family::derived_group: return std::nullopt;
    case Family::e4_extension: return Builtin::e4;
    case Family::t26: return Builtin::e6;
    case Family::inverse_op: return Builtin::e1;
    case Family::e5_example: return Builtin::e5;
    case Family::e7_example: return Builtin::e7;
    case Family::c71:
    case Family::c72_v1:
    case Family::c72_v2: return Builtin::e7;
    case Family::e8_zn: return Builtin::e8;
    case Family::e9_zn:
    case Family::e9_example: return Builtin::e9;
  }
  return std::nullopt;
}

namespace {

template <typename T>
T need(const std::optional<T>& value, const char* flag, Family family) {
  if (!value) {
    throw Error("family " + std::string(to_string(family)) + " needs --" + flag);
  }
  return *value;
}

FiniteGroup need_group(const FamilyParams& p) {
  return catalog(need(p.group, "group", p.family));
}

}  // namespace

Biquasigroup construct(const FamilyParams& p) {
  switch (p.family) {
    case Family::ward: {
      const CayleyTable w = ward_from_group(need_group(p));
      return Biquasigroup(w, w);
    }
    case Family::derived_group: {
      const CayleyTable w = p.table ? *p.table : ward_from_group(need_group(p));
      const FiniteGroup g = derived_group(w);
      return Biquasigroup(g.table(), g.table());
    }
    case Family::e4_extension: {
      if (p.table) return extend_e4(*p.table);
      const FiniteGroup g = need_group(p);
      const long long shift = mod(p.a.value_or(0), static_cast<long long>(g.order()));
      const CayleyTable q_table = CayleyTable::generate(g.order(), [&](Element x, Element y) {
        return g.add(g.subtract(x, y), static_cast<Element>(shift));
      });
      return extend_e4(q_table);
    }
    case Family::t26: {
      const FiniteGroup g = need_group(p);
      const long long n = static_cast<long long>(g.order());
      const long long shift = mod(p.a.value_or(0), n);
      std::vector<Element> images(g.order());
      for (Element x = 0; x < g.order(); ++x) images[x] = static_cast<Element>((x + shift) % n);
      return t26_construct(g, Permutation(std::move(images)));
    }
    case Family::inverse_op: return inverse_op_biq(need_group(p));
    case Family::e5_example: return e5_example(need_group(p));
    case Family::e7_example: return e7_example(need_group(p));
    case Family::c71: return family_c71(need(p.n, "n", p.family), need(p.a, "a", p.family));
    case Family::c72_v1:
    case Family::c72_v2:
      return family_c72(need(p.a, "a", p.family),
                        p.variant.value_or(p.family == Family::c72_v1 ? 1 : 2));
    case Family::e8_zn:
      return family_e8_zn(need(p.n, "n", p.family), need(p.a, "a", p.family), p.c.value_or(0),
                          p.d.value_or(0));
    case Family::e9_zn:
      return family_e9_zn(need(p.n, "n", p.family), need(p.a, "a", p.family), p.b.value_or(0));
    case Family::e9_example: return e9_example(need(p.a, "a", p.family));
  }
  throw Error("unknown family");
}

}  // namespace biq
