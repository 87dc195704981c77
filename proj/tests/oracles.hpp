#pragma once

// Brute-force reference implementations used as test oracles. They share
// nothing with the library beyond CayleyTable storage.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "biq/cayley_table.hpp"

namespace oracle {

using biq::CayleyTable;
using biq::Element;

// Operator pattern of (x A z) B (y C z) = x D y; false is ∘, true is *.
struct WardShape {
  bool a, b, c, d;
};

// e1..e9 in order.
inline const std::vector<WardShape>& ward_shapes() {
  static const std::vector<WardShape> shapes = {
      {false, false, false, false}, {false, true, false, true},  {false, false, false, false},
      {false, false, false, true},  {false, false, true, false}, {false, true, false, false},
      {false, false, true, true},   {false, true, true, false},  {false, true, true, true},
  };
  return shapes;
}

inline bool ward_holds(const CayleyTable& circ, const CayleyTable& star, WardShape s) {
  const auto op = [&](bool is_star, Element l, Element r) { return is_star ? star(l, r) : circ(l, r); };
  const Element n = static_cast<Element>(circ.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (op(s.b, op(s.a, x, z), op(s.c, y, z)) != op(s.d, x, y)) return false;
  return true;
}

// First failing (x, y, z) with z varying fastest.
inline std::optional<std::array<Element, 3>> ward_first_failure(const CayleyTable& circ,
                                                                const CayleyTable& star,
                                                                WardShape s) {
  const auto op = [&](bool is_star, Element l, Element r) { return is_star ? star(l, r) : circ(l, r); };
  const Element n = static_cast<Element>(circ.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (op(s.b, op(s.a, x, z), op(s.c, y, z)) != op(s.d, x, y)) return std::array{x, y, z};
  return std::nullopt;
}

inline bool medial(const CayleyTable& t) {
  const Element n = static_cast<Element>(t.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        for (Element w = 0; w < n; ++w)
          if (t(t(x, y), t(z, w)) != t(t(x, z), t(y, w))) return false;
  return true;
}

inline bool paramedial(const CayleyTable& t) {
  const Element n = static_cast<Element>(t.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        for (Element u = 0; u < n; ++u)
          if (t(t(x, y), t(z, u)) != t(t(u, y), t(z, x))) return false;
  return true;
}

inline bool latin(const CayleyTable& t) {
  const std::size_t n = t.order();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n), col(n);
    for (std::size_t j = 0; j < n; ++j) {
      row[t(static_cast<Element>(i), static_cast<Element>(j))] = true;
      col[t(static_cast<Element>(j), static_cast<Element>(i))] = true;
    }
    if (std::count(row.begin(), row.end(), true) != static_cast<long>(n)) return false;
    if (std::count(col.begin(), col.end(), true) != static_cast<long>(n)) return false;
  }
  return true;
}

inline bool associative_with_identity_zero(const CayleyTable& t) {
  const Element n = static_cast<Element>(t.order());
  for (Element x = 0; x < n; ++x) {
    if (t(0, x) != x || t(x, 0) != x) return false;
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (t(t(x, y), z) != t(x, t(y, z))) return false;
  }
  return true;
}

inline bool is_group(const CayleyTable& t) {
  const Element n = static_cast<Element>(t.order());
  if (!latin(t)) return false;
  for (Element e = 0; e < n; ++e) {
    bool neutral = true;
    for (Element x = 0; x < n && neutral; ++x) neutral = t(e, x) == x && t(x, e) == x;
    if (!neutral) continue;
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (t(t(x, y), z) != t(x, t(y, z))) return false;
    return true;
  }
  return false;
}

// Every permutation p with p(xy) = p(x)p(y), in lexicographic order.
inline std::vector<std::vector<Element>> automorphisms(const CayleyTable& t) {
  std::vector<Element> p(t.order());
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<std::vector<Element>> out;
  do {
    bool hom = true;
    for (Element x = 0; x < t.order() && hom; ++x)
      for (Element y = 0; y < t.order() && hom; ++y) hom = p[t(x, y)] == t(p[x], p[y]);
    if (hom) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// All n×n Latin squares by filtering every tuple of row permutations.
inline std::vector<CayleyTable> latin_squares(std::size_t n) {
  std::vector<std::vector<Element>> perms;
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<CayleyTable> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<Element> cells;
    for (std::size_t r = 0; r < n; ++r) cells.insert(cells.end(), perms[pick[r]].begin(), perms[pick[r]].end());
    CayleyTable t(n, cells);
    if (latin(t)) out.push_back(std::move(t));
    std::size_t i = n;
    while (i > 0 && ++pick[i - 1] == perms.size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

inline CayleyTable zn_add(std::size_t n) {
  return CayleyTable::generate(n, [n](Element x, Element y) { return static_cast<Element>((x + y) % n); });
}

// A random isotope of Z_n: γ((α x + β y) mod n) for random permutations.
inline CayleyTable random_latin(std::size_t n, std::mt19937& rng) {
  std::vector<Element> a(n), b(n), c(n);
  std::iota(a.begin(), a.end(), Element{0});
  b = a;
  c = a;
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  std::shuffle(c.begin(), c.end(), rng);
  return CayleyTable::generate(n, [&](Element x, Element y) { return c[(a[x] + b[y]) % n]; });
}

inline long long mod(long long v, long long n) { return ((v % n) + n) % n; }

}  // namespace oracle
