#include "biq/group.hpp"

#include <algorithm>

namespace biq {

std::optional<FiniteGroup> group_structure(const CayleyTable& table) {
  const std::size_t n = table.order();

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = table(e, x) == x && table(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) return std::nullopt;

  std::vector<Element> inverse(n);
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) {
      if (table(x, y) == *identity && table(y, x) == *identity) {
        inverse[x] = y;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }

  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = table(x, y);
      for (Element z = 0; z < n; ++z) {
        if (table(xy, z) != table(x, table(y, z))) return std::nullopt;
      }
    }
  }

  bool commutative = true;
  for (Element x = 0; x < n && commutative; ++x) {
    for (Element y = x + 1; y < n && commutative; ++y) {
      commutative = table(x, y) == table(y, x);
    }
  }
  return FiniteGroup(table, *identity, std::move(inverse), commutative);
}

std::vector<Element> center(const FiniteGroup& group) {
  std::vector<Element> result;
  for (Element c = 0; c < group.order(); ++c) {
    bool central = true;
    for (Element x = 0; x < group.order() && central; ++x) {
      central = group.add(c, x) == group.add(x, c);
    }
    if (central) result.push_back(c);
  }
  return result;
}

std::optional<std::pair<Element, Element>> find_homomorphism_violation(
    const FiniteGroup& group, const Permutation& p) {
  const std::size_t n = group.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (p(group.add(x, y)) != group.add(p(x), p(y))) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

bool is_automorphism(const FiniteGroup& group, const Permutation& p) {
  return p.order() == group.order() && !find_homomorphism_violation(group, p);
}

namespace {

std::size_t element_order(const FiniteGroup& group, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != group.identity(); y = group.add(y, x)) ++k;
  return k;
}

}  // namespace

std::vector<Permutation> automorphisms(const FiniteGroup& group) {
  const std::size_t n = group.order();

  // Greedy generating set; each element is reached as parent + generator.
  std::vector<Element> generators;
  std::vector<std::optional<std::pair<Element, std::size_t>>> via(n);
  std::vector<bool> reached(n);
  std::vector<Element> reached_order{group.identity()};
  reached[group.identity()] = true;
  for (Element candidate = 0; candidate < n; ++candidate) {
    if (reached[candidate]) continue;
    generators.push_back(candidate);
    // Restarting from index 0 also multiplies older elements by the new generator.
    for (std::size_t i = 0; i < reached_order.size(); ++i) {
      const Element parent = reached_order[i];
      for (std::size_t g = 0; g < generators.size(); ++g) {
        const Element child = group.add(parent, generators[g]);
        if (!reached[child]) {
          reached[child] = true;
          via[child] = std::pair{parent, g};
          reached_order.push_back(child);
        }
      }
    }
  }

  std::vector<std::vector<Element>> candidates(generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const std::size_t ord = element_order(group, generators[g]);
    for (Element y = 0; y < n; ++y) {
      if (element_order(group, y) == ord) candidates[g].push_back(y);
    }
  }

  std::vector<Permutation> result;
  std::vector<std::size_t> choice(generators.size(), 0);
  std::vector<Element> images(n);
  std::vector<bool> used(n);
  while (true) {
    images[group.identity()] = group.identity();
    for (std::size_t i = 1; i < reached_order.size(); ++i) {
      const Element x = reached_order[i];
      const auto [parent, g] = *via[x];
      images[x] = group.add(images[parent], candidates[g][choice[g]]);
    }
    std::fill(used.begin(), used.end(), false);
    bool bijective = true;
    for (Element x = 0; x < n && bijective; ++x) {
      bijective = !used[images[x]];
      used[images[x]] = true;
    }
    if (bijective) {
      Permutation p(images);
      if (!find_homomorphism_violation(group, p)) result.push_back(std::move(p));
    }

    std::size_t g = 0;
    while (g < choice.size() && ++choice[g] == candidates[g].size()) choice[g++] = 0;
    if (g == choice.size()) break;
  }

  std::sort(result.begin(), result.end());
  return result;
}

Permutation negated(const FiniteGroup& group, const Permutation& p) {
  std::vector<Element> images(group.order());
  for (Element x = 0; x < group.order(); ++x) images[x] = group.inverse(p(x));
  return Permutation(std::move(images));
}

}  // namespace biq
