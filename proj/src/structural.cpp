#include "biq/structural.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "biq/error.hpp"
#include "biq/properties.hpp"

namespace biq {

namespace {

constexpr std::array<StructuralClaim, 7> kClaims = {
    StructuralClaim::T11form,  StructuralClaim::T24unipotent, StructuralClaim::T25neutral,
    StructuralClaim::T26ward,  StructuralClaim::T26unipotent, StructuralClaim::T29idem,
    StructuralClaim::P8idem,
};

constexpr std::size_t kMaxRecorded = 10;

std::string pair_text(Element x, Element y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

std::string_view to_string(StructuralClaim claim) {
  switch (claim) {
    case StructuralClaim::T11form: return "t11form";
    case StructuralClaim::T24unipotent: return "t24unipotent";
    case StructuralClaim::T25neutral: return "t25neutral";
    case StructuralClaim::T26ward: return "t26ward";
    case StructuralClaim::T26unipotent: return "t26unipotent";
    case StructuralClaim::T29idem: return "t29idem";
    case StructuralClaim::P8idem: return "p8idem";
  }
  return "?";
}

std::optional<StructuralClaim> parse_structural_claim(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto c : kClaims) {
    if (lower == to_string(c)) return c;
  }
  return std::nullopt;
}

std::span<const StructuralClaim> all_structural_claims() { return kClaims; }

Builtin claim_identity(StructuralClaim claim) {
  switch (claim) {
    case StructuralClaim::T11form: return Builtin::e2;
    case StructuralClaim::T24unipotent: return Builtin::e4;
    case StructuralClaim::T25neutral: return Builtin::e5;
    case StructuralClaim::T26ward:
    case StructuralClaim::T26unipotent: return Builtin::e6;
    case StructuralClaim::T29idem: return Builtin::e9;
    case StructuralClaim::P8idem: return Builtin::e8;
  }
  return Builtin::e1;
}

std::vector<CayleyTable> enumerate_quasigroups(std::size_t n) {
  if (n < 1 || n > 4) throw Error("enumerate_quasigroups supports 1 <= n <= 4, got " + std::to_string(n));
  std::vector<CayleyTable> result;
  std::vector<Element> cells(n * n);
  std::vector<std::uint32_t> row_used(n), col_used(n);  // bitmasks of placed symbols

  auto place = [&](auto&& self, std::size_t cell) -> void {
    if (cell == n * n) {
      result.emplace_back(n, cells);
      return;
    }
    const std::size_t r = cell / n, c = cell % n;
    for (Element v = 0; v < n; ++v) {
      const std::uint32_t bit = 1u << v;
      if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
      row_used[r] |= bit;
      col_used[c] |= bit;
      cells[cell] = v;
      self(self, cell + 1);
      row_used[r] &= ~bit;
      col_used[c] &= ~bit;
    }
  };
  place(place, 0);
  return result;
}

std::vector<FiniteGroup> carrier_groups(std::size_t n) {
  std::vector<FiniteGroup> groups;
  for (const auto& t : enumerate_quasigroups(n)) {
    if (auto g = group_structure(t)) groups.push_back(std::move(*g));
  }
  return groups;
}

bool has_t11_form(const CayleyTable& circ, const CayleyTable& star, const FiniteGroup& group) {
  const std::size_t n = group.order();
  if (circ.order() != n || star.order() != n) return false;
  const Element zero = group.identity();
  // With x = 0: 0∘y = −βy, and with y = 0: x*0 = αx.
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element beta_y = group.inverse(circ(zero, y));
      if (circ(x, y) != group.subtract(x, beta_y)) return false;
      if (star(x, y) != star(group.subtract(x, y), zero)) return false;
    }
  }
  return is_latin_square(circ) && is_latin_square(star);
}

bool has_t26_form(const CayleyTable& circ, const CayleyTable& star) {
  const std::size_t n = star.order();
  if (circ.order() != n) return false;
  const auto e = unipotency(star);
  if (!e) return false;
  const CayleyTable product =
      CayleyTable::generate(n, [&](Element x, Element y) { return star(x, star(*e, y)); });
  const auto g = group_structure(product);
  if (!g) return false;
  std::vector<Element> alpha(n);
  for (Element x = 0; x < n; ++x) alpha[x] = circ(*e, x);
  std::vector<bool> hit(n);
  for (Element x = 0; x < n; ++x) {
    if (hit[alpha[x]]) return false;
    hit[alpha[x]] = true;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (circ(x, y) != g->add(g->inverse(alpha[x]), alpha[y])) return false;
      if (star(x, y) != g->subtract(x, y)) return false;
    }
  }
  return true;
}

bool p8_printed_form_holds(const CayleyTable& circ, const CayleyTable& star) {
  for (Element x = 0; x < circ.order(); ++x) {
    for (Element y = 0; y < circ.order(); ++y) {
      if (circ(x, y) != star(x, star(y, x))) return false;
    }
  }
  return true;
}

namespace {

std::optional<std::string> check_t24(const CayleyTable& c, const CayleyTable& s) {
  const auto qc = unipotency(c);
  const auto qs = unipotency(s);
  if (!qc || !qs || *qc != *qs) return "diagonals are not one common constant";
  const Element q = *qc;
  for (Element x = 0; x < c.order(); ++x) {
    for (Element y = 0; y < c.order(); ++y) {
      if (s(x, y) != c(c(x, y), q)) return "x*y != (x∘y)∘q at " + pair_text(x, y);
      if (s(x, y) != c(q, c(y, x))) return "x*y != q∘(y∘x) at " + pair_text(x, y);
    }
  }
  const auto nc = neutral_elements(c);
  if (nc.right && !(c == s && is_ward(c))) return "∘ has a right neutral element but ∘ != * or not Ward";
  if (nc.left) {
    for (Element x = 0; x < c.order(); ++x) {
      for (Element y = 0; y < c.order(); ++y) {
        if (s(x, y) != c(y, x)) return "∘ has a left neutral element but x*y != y∘x at " + pair_text(x, y);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_t25(const CayleyTable& c, const CayleyTable& s) {
  const auto ic = idempotents(c);
  const auto is = idempotents(s);
  if (ic.size() != 1 || is != ic) return "idempotent sets are not one common element";
  const Element e = ic.front();
  if (neutral_elements(c).right != e || neutral_elements(s).right != e) {
    return "idempotent " + std::to_string(e) + " is not right neutral for both";
  }
  if (unipotency(s) != e) return "* is not unipotent with constant e";
  if (is_latin_square(c) && is_ward(c) && c != s) return "∘ is Ward but ∘ != *";
  if (is_medial(c) && unipotency(c) && c != s) return "∘ is medial and unipotent but ∘ != *";
  return std::nullopt;
}

std::optional<std::string> check_t26_unipotent(const CayleyTable& c, const CayleyTable& s) {
  const auto qc = unipotency(c);
  if (!qc || unipotency(s) != qc) return "not unipotent with one constant";
  return std::nullopt;
}

std::optional<std::string> check_t29(const CayleyTable& c, const CayleyTable& s) {
  const auto ic = idempotents(c);
  const auto is = idempotents(s);
  if (ic.size() > 1 || is.size() > 1) return "more than one idempotent";
  if (ic != is) return "idempotents of ∘ and * differ";
  if (!ic.empty()) {
    const Element a = ic.front();
    if (neutral_elements(c).right != a || neutral_elements(s).right != a) {
      return "idempotent " + std::to_string(a) + " is not a common right neutral element";
    }
  }
  if (unipotency(s) && !(c == s && is_ward(c))) return "* is unipotent but ∘ != * or not Ward";
  return std::nullopt;
}

std::optional<std::string> check_p8(const CayleyTable& c, const CayleyTable& s) {
  const auto is = idempotents(s);
  if (is.size() > 1) return "* has more than one idempotent";
  if (!is.empty() && neutral_elements(s).right != is.front()) {
    return "*-idempotent is not right neutral for *";
  }
  if (const auto u = unipotency(c)) {
    const auto w = unipotency(s);
    if (!w) return "∘ is unipotent but * is not";
    for (Element x = 0; x < c.order(); ++x) {
      for (Element y = 0; y < c.order(); ++y) {
        if (c(x, y) != s(*u, s(y, x))) return "x∘y != u*(y*x) at " + pair_text(x, y);
      }
    }
    if (c(*w, *u) != *w) return "w∘u != w";
    if (neutral_elements(s).right != *w) return "w is not right neutral for *";
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> claim_violation(StructuralClaim claim, const CayleyTable& circ,
                                           const CayleyTable& star,
                                           std::span<const FiniteGroup> groups) {
  switch (claim) {
    case StructuralClaim::T11form:
      for (const auto& g : groups) {
        if (has_t11_form(circ, star, g)) return std::nullopt;
      }
      return "no group on the carrier gives x∘y = x−βy, x*y = α(x−y)";
    case StructuralClaim::T24unipotent: return check_t24(circ, star);
    case StructuralClaim::T25neutral: return check_t25(circ, star);
    case StructuralClaim::T26ward:
      if (!is_ward(star)) return "* is not a Ward quasigroup";
      if (!has_t26_form(circ, star)) return "∘ != (αx)⁻¹·(αy) for α x = e∘x";
      return std::nullopt;
    case StructuralClaim::T26unipotent: return check_t26_unipotent(circ, star);
    case StructuralClaim::T29idem: return check_t29(circ, star);
    case StructuralClaim::P8idem: return check_p8(circ, star);
  }
  return std::nullopt;
}

namespace {

void record(StructuralReport& report, std::string message) {
  ++report.violation_count;
  if (report.violations.size() < kMaxRecorded) report.violations.push_back(std::move(message));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  std::vector<Permutation> result;
  do result.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  return result;
}

std::string table_text(const CayleyTable& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.entries().size(); ++i) {
    if (i) s += i % t.order() == 0 ? " | " : " ";
    s += std::to_string(t.entries()[i]);
  }
  return s + "]";
}

// Constructions in the reverse direction must satisfy the identity.
void check_converse(StructuralClaim claim, std::span<const FiniteGroup> groups,
                    const CompiledIdentity& identity, StructuralReport& report) {
  const std::size_t n = report.order;
  const auto perms = all_permutations(n);
  for (const auto& g : groups) {
    if (claim == StructuralClaim::T11form) {
      for (const auto& alpha : perms) {
        for (const auto& beta : perms) {
          const auto circ = CayleyTable::generate(
              n, [&](Element x, Element y) { return g.subtract(x, beta(y)); });
          const auto star = CayleyTable::generate(
              n, [&](Element x, Element y) { return alpha(g.subtract(x, y)); });
          ++report.converse_checks;
          if (!identity.holds(circ.entries(), star.entries(), n)) {
            record(report, "converse: group " + table_text(g.table()) + " with bijections fails e2");
          }
        }
      }
    } else {
      for (const auto& alpha : perms) {
        const auto circ = CayleyTable::generate(
            n, [&](Element x, Element y) { return g.add(g.inverse(alpha(x)), alpha(y)); });
        const auto star = CayleyTable::generate(n, [&](Element x, Element y) { return g.subtract(x, y); });
        ++report.converse_checks;
        if (!identity.holds(circ.entries(), star.entries(), n)) {
          record(report, "converse: group " + table_text(g.table()) + " with a bijection fails e6");
        }
      }
    }
  }
}

}  // namespace

StructuralReport verify_structural(StructuralClaim claim, std::size_t n) {
  StructuralReport report;
  report.claim = claim;
  report.order = n;
  const auto squares = enumerate_quasigroups(n);
  const CompiledIdentity identity(builtin(claim_identity(claim)));
  std::vector<FiniteGroup> groups;
  if (claim == StructuralClaim::T11form || claim == StructuralClaim::T26ward) {
    groups = carrier_groups(n);
  }

  for (const auto& circ : squares) {
    for (const auto& star : squares) {
      ++report.pairs_examined;
      if (!identity.holds(circ.entries(), star.entries(), n)) continue;
      ++report.satisfying_pairs;
      if (auto v = claim_violation(claim, circ, star, groups)) {
        record(report, *v + " for ∘ = " + table_text(circ) + ", * = " + table_text(star));
      }
      if (claim == StructuralClaim::P8idem && unipotency(circ) &&
          !p8_printed_form_holds(circ, star)) {
        ++report.printed_form_failures;
      }
    }
  }
  if (claim == StructuralClaim::T11form || claim == StructuralClaim::T26ward) {
    check_converse(claim, groups, identity, report);
  }
  return report;
}

}  // namespace biq
