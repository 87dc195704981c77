#include "biq/properties.hpp"

#include "biq/error.hpp"
#include "biq/identity.hpp"

namespace biq {

std::vector<Element> idempotents(const CayleyTable& table) {
  std::vector<Element> result;
  for (Element a = 0; a < table.order(); ++a) {
    if (table(a, a) == a) result.push_back(a);
  }
  return result;
}

NeutralElements neutral_elements(const CayleyTable& table) {
  const std::size_t n = table.order();
  NeutralElements result;
  for (Element e = 0; e < n; ++e) {
    bool left = true;
    bool right = true;
    for (Element x = 0; x < n && (left || right); ++x) {
      left = left && table(e, x) == x;
      right = right && table(x, e) == x;
    }
    if (left && !result.left) result.left = e;
    if (right && !result.right) result.right = e;
  }
  return result;
}

std::optional<Element> unipotency(const CayleyTable& table) {
  const Element q = table(0, 0);
  for (Element x = 1; x < table.order(); ++x) {
    if (table(x, x) != q) return std::nullopt;
  }
  return q;
}

bool is_commutative(const CayleyTable& table) {
  for (Element x = 0; x < table.order(); ++x) {
    for (Element y = x + 1; y < table.order(); ++y) {
      if (table(x, y) != table(y, x)) return false;
    }
  }
  return true;
}

namespace {

bool single_table_holds(const CayleyTable& table, Builtin id) {
  return check_tables(table, table, builtin(id)).holds;
}

}  // namespace

bool is_ward(const CayleyTable& table) {
  if (!is_latin_square(table)) throw Error("is_ward needs a Latin square");
  return single_table_holds(table, Builtin::e1);
}

bool is_medial(const CayleyTable& table) {
  return single_table_holds(table, Builtin::medial_circ);
}

bool is_paramedial(const CayleyTable& table) {
  return single_table_holds(table, Builtin::paramedial_circ);
}

bool is_left_modular(const CayleyTable& table) {
  return single_table_holds(table, Builtin::left_modular);
}

bool is_boolean_group(const FiniteGroup& group) {
  if (!group.commutative()) return false;
  for (Element x = 0; x < group.order(); ++x) {
    if (group.add(x, x) != group.identity()) return false;
  }
  return true;
}

PropertyReport full_report(const Biquasigroup& biq) {
  const CayleyTable& c = biq.circ();
  const CayleyTable& s = biq.star();
  PropertyReport r;
  r.idempotents_circ = idempotents(c);
  r.idempotents_star = idempotents(s);
  const auto nc = neutral_elements(c);
  const auto ns = neutral_elements(s);
  r.left_neutral_circ = nc.left;
  r.right_neutral_circ = nc.right;
  r.left_neutral_star = ns.left;
  r.right_neutral_star = ns.right;
  r.unipotent_circ = unipotency(c);
  r.unipotent_star = unipotency(s);
  r.commutative_circ = is_commutative(c);
  r.commutative_star = is_commutative(s);
  r.ward_circ = is_ward(c);
  r.ward_star = is_ward(s);
  r.medial_circ = is_medial(c);
  r.medial_star = is_medial(s);
  r.paramedial_circ = is_paramedial(c);
  r.paramedial_star = is_paramedial(s);
  r.left_modular_circ = is_left_modular(c);
  r.tables_equal = c == s;
  return r;
}

}  // namespace biq
