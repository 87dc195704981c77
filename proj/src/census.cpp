#include "biq/census.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "biq/error.hpp"
#include "biq/properties.hpp"
#include "biq/structural.hpp"

namespace biq {

std::string to_string(const SpecDigest& d) {
  return "(" + std::to_string(d.phi) + "," + std::to_string(d.psi) + "," + std::to_string(d.a) +
         "," + std::to_string(d.alpha) + "," + std::to_string(d.beta) + "," +
         std::to_string(d.b) + ")";
}

namespace {

constexpr std::size_t kMaxSpaceCells = std::size_t{1} << 26;
constexpr std::uint64_t kMaxSpecs = std::uint64_t{1} << 31;

void require_tractable(const SpecSpace& space, bool circ_only) {
  if (space.size(circ_only) > kMaxSpecs) {
    throw Error("census over " + std::to_string(space.size(circ_only)) +
                " specs is out of reach (limit " + std::to_string(kMaxSpecs) + ")");
  }
}

}  // namespace

SpecSpace::SpecSpace(FiniteGroup group, SpecKind kind)
    : group_(std::make_shared<const FiniteGroup>(std::move(group))),
      kind_(kind),
      aut_(biq::automorphisms(*group_)) {
  const std::size_t n = group_->order();
  op_count_ = aut_.size() * aut_.size() * n;
  if (op_count_ * n * n > kMaxSpaceCells) {
    throw Error("linear spec space too large: " + std::to_string(op_count_) +
                " operations of order " + std::to_string(n));
  }
  tables_.reserve(op_count_);
  for (const auto& left : aut_) {
    for (const auto& right : aut_) {
      for (Element c = 0; c < n; ++c) tables_.push_back(linear_table(*group_, kind_, left, c, right));
    }
  }
}

std::uint64_t SpecSpace::size(bool circ_only) const noexcept {
  const std::uint64_t ops = op_count_;
  return circ_only ? ops : ops * ops;
}

std::size_t SpecSpace::operation_index(std::uint32_t left, std::uint32_t right,
                                       Element constant) const {
  if (left >= aut_.size() || right >= aut_.size() || constant >= group_->order()) {
    throw Error("spec digest out of range");
  }
  return (left * aut_.size() + right) * group_->order() + constant;
}

SpecDigest SpecSpace::digest(std::size_t circ_index, std::optional<std::size_t> star_index) const {
  const std::size_t n = group_->order();
  const std::size_t count = aut_.size();
  SpecDigest d;
  d.kind = kind_;
  d.a = static_cast<Element>(circ_index % n);
  d.psi = static_cast<std::uint32_t>((circ_index / n) % count);
  d.phi = static_cast<std::uint32_t>(circ_index / n / count);
  if (star_index) {
    d.b = static_cast<Element>(*star_index % n);
    d.beta = static_cast<std::uint32_t>((*star_index / n) % count);
    d.alpha = static_cast<std::uint32_t>(*star_index / n / count);
  }
  return d;
}

LinearSpec SpecSpace::spec(const SpecDigest& d) const {
  operation_index(d.phi, d.psi, d.a);
  operation_index(d.alpha, d.beta, d.b);
  return LinearSpec(group_, aut_[d.phi], aut_[d.psi], d.a, aut_[d.alpha], aut_[d.beta], d.b,
                    d.kind);
}

std::uint64_t linear_spec_count(const FiniteGroup& group, bool circ_only) {
  const std::uint64_t ops = automorphisms(group).size() * automorphisms(group).size() * group.order();
  return circ_only ? ops : ops * ops;
}

void enumerate_linear_specs(const SpecSpace& space, bool circ_only,
                            const std::function<bool(const LinearSpec&)>& visit) {
  const std::size_t ops = space.operation_count();
  for (std::size_t ci = 0; ci < ops; ++ci) {
    if (circ_only) {
      if (!visit(space.spec(space.digest(ci, std::nullopt)))) return;
      continue;
    }
    for (std::size_t si = 0; si < ops; ++si) {
      if (!visit(space.spec(space.digest(ci, si)))) return;
    }
  }
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("BIQ_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

// Runs body(lo, hi, out) over contiguous chunks of [0, count) and
// concatenates the per-chunk outputs in chunk order.
template <typename T, typename Body>
std::vector<T> parallel_chunks(std::size_t count, unsigned workers, Body&& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::vector<T>> parts(workers);
  const std::size_t step = (count + workers - 1) / workers;
  if (workers == 1) {
    body(std::size_t{0}, count, parts[0]);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(count, w * step);
      const std::size_t hi = std::min(count, lo + step);
      threads.emplace_back([&, lo, hi, w] { body(lo, hi, parts[w]); });
    }
  }
  std::vector<T> merged;
  for (auto& part : parts) merged.insert(merged.end(), part.begin(), part.end());
  return merged;
}

}  // namespace

CensusReport run_census(const SpecSpace& space, const Equation& identity,
                        const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const CompiledIdentity compiled(identity);
  const bool circ_only = !compiled.uses(Op::star);
  const std::size_t n = space.group().order();
  const std::size_t ops = space.operation_count();
  require_tractable(space, circ_only);

  CensusReport report;
  report.group = options.group_label.empty() ? "order-" + std::to_string(n) + " group"
                                             : options.group_label;
  report.identity = render(identity);
  report.kind = space.kind();
  report.circ_only = circ_only;
  report.total_specs = space.size(circ_only);

  const unsigned workers = options.workers ? options.workers : default_worker_count();
  report.satisfying = parallel_chunks<SpecDigest>(
      ops, workers, [&](std::size_t lo, std::size_t hi, std::vector<SpecDigest>& out) {
        for (std::size_t ci = lo; ci < hi; ++ci) {
          const auto circ = space.operation(ci).entries();
          if (circ_only) {
            if (compiled.holds(circ, circ, n)) out.push_back(space.digest(ci, std::nullopt));
            continue;
          }
          for (std::size_t si = 0; si < ops; ++si) {
            if (compiled.holds(circ, space.operation(si).entries(), n)) {
              out.push_back(space.digest(ci, si));
            }
          }
        }
      });
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

CensusReport run_census(const FiniteGroup& group, const Equation& identity, SpecKind kind,
                        const CensusOptions& options) {
  return run_census(SpecSpace(group, kind), identity, options);
}

namespace {

constexpr std::array<TheoremId, 17> kTheorems = {
    TheoremId::T11,   TheoremId::T22,       TheoremId::T23,    TheoremId::T24,
    TheoremId::T24a,  TheoremId::T25,       TheoremId::T26,    TheoremId::T26lin,
    TheoremId::T27,   TheoremId::T28,       TheoremId::T29struct, TheoremId::T29lin,
    TheoremId::P5lin, TheoremId::MED7,      TheoremId::MED7zn, TheoremId::BOOL,
    TheoremId::SEC10,
};

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T11: return "t11";
    case TheoremId::T22: return "t22";
    case TheoremId::T23: return "t23";
    case TheoremId::T24: return "t24";
    case TheoremId::T24a: return "t24a";
    case TheoremId::T25: return "t25";
    case TheoremId::T26: return "t26";
    case TheoremId::T26lin: return "t26lin";
    case TheoremId::T27: return "t27";
    case TheoremId::T28: return "t28";
    case TheoremId::T29struct: return "t29struct";
    case TheoremId::T29lin: return "t29lin";
    case TheoremId::P5lin: return "p5lin";
    case TheoremId::MED7: return "med7";
    case TheoremId::MED7zn: return "med7zn";
    case TheoremId::BOOL: return "bool";
    case TheoremId::SEC10: return "sec10";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto id : kTheorems) {
    if (lower == to_string(id)) return id;
  }
  return std::nullopt;
}

std::span<const TheoremId> all_theorems() { return kTheorems; }

std::optional<Builtin> theorem_identity(TheoremId id) {
  switch (id) {
    case TheoremId::T11:
    case TheoremId::T22: return Builtin::e2;
    case TheoremId::T23: return Builtin::e3;
    case TheoremId::T24:
    case TheoremId::T24a: return Builtin::e4;
    case TheoremId::T25:
    case TheoremId::P5lin: return Builtin::e5;
    case TheoremId::T26:
    case TheoremId::T26lin: return Builtin::e6;
    case TheoremId::T27:
    case TheoremId::MED7:
    case TheoremId::MED7zn: return Builtin::e7;
    case TheoremId::T28: return Builtin::e8;
    case TheoremId::T29struct:
    case TheoremId::T29lin: return Builtin::e9;
    case TheoremId::BOOL:
    case TheoremId::SEC10: return std::nullopt;
  }
  return std::nullopt;
}

bool requires_commutative(TheoremId id) {
  switch (id) {
    case TheoremId::T11:
    case TheoremId::T24:
    case TheoremId::T25:
    case TheoremId::T26:
    case TheoremId::T29struct:
    case TheoremId::SEC10: return false;
    default: return true;
  }
}

namespace {

bool is_implication(TheoremId id) {
  return id == TheoremId::T24 || id == TheoremId::T25 || id == TheoremId::T29struct;
}

StructuralClaim implication_claim(TheoremId id) {
  switch (id) {
    case TheoremId::T24: return StructuralClaim::T24unipotent;
    case TheoremId::T25: return StructuralClaim::T25neutral;
    default: return StructuralClaim::T29idem;
  }
}

struct SpecRef {
  const FiniteGroup& g;
  const Permutation& phi;
  const Permutation& psi;
  Element a;
  const Permutation& alpha;
  const Permutation& beta;
  Element b;
  const CayleyTable& circ;
  const CayleyTable& star;
};

template <typename Pred>
bool pointwise(const FiniteGroup& g, Pred&& pred) {
  for (Element z = 0; z < g.order(); ++z) {
    if (!pred(z)) return false;
  }
  return true;
}

bool is_canonical_zn(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (g.add(x, y) != (x + y) % n) return false;
    }
  }
  return true;
}

bool evaluate(TheoremId id, const SpecRef& s) {
  const FiniteGroup& g = s.g;
  const auto neg = [&g](Element v) { return g.inverse(v); };
  const auto add = [&g](Element x, Element y) { return g.add(x, y); };
  const auto is_eps = [](const Permutation& p) { return p.is_identity(); };
  const bool comm = g.commutative();

  switch (id) {
    case TheoremId::T11: return has_t11_form(s.circ, s.star, g);
    case TheoremId::T22:
      return comm && is_eps(s.phi) &&
             pointwise(g, [&](Element z) { return s.beta(z) == neg(s.alpha(z)); });
    case TheoremId::T23:
      return comm && is_eps(s.phi) && pointwise(g, [&](Element z) { return s.psi(z) == neg(z); });
    case TheoremId::T24a:
      return comm && s.b == s.a && pointwise(g, [&](Element z) {
               const Element phi2 = s.phi(s.phi(z));
               return s.psi(z) == neg(s.phi(z)) && s.alpha(z) == phi2 && s.beta(z) == neg(phi2);
             });
    case TheoremId::T26: return has_t26_form(s.circ, s.star);
    case TheoremId::T26lin:
      return comm && s.b == s.a && is_eps(s.alpha) && pointwise(g, [&](Element z) {
               return s.psi(z) == neg(s.phi(z)) && s.beta(z) == neg(z);
             });
    case TheoremId::T27:
      return comm && add(add(s.phi(s.a), s.a), s.psi(s.b)) == s.b &&
             pointwise(g, [&](Element z) {
               const Element phi2 = s.phi(s.phi(z));
               return s.alpha(z) == phi2 && s.beta(z) == s.psi(phi2) &&
                      add(s.phi(s.psi(z)), s.psi(s.psi(phi2))) == g.identity();
             });
    case TheoremId::T28:
      return comm && is_eps(s.alpha) && pointwise(g, [&](Element z) {
               return s.psi(z) == neg(z) && s.beta(z) == neg(z);
             });
    case TheoremId::T29lin:
      return comm && is_eps(s.phi) && is_eps(s.alpha) && s.a == neg(s.beta(s.b)) &&
             pointwise(g, [&](Element z) { return s.psi(z) == neg(s.beta(s.beta(z))); });
    case TheoremId::P5lin:
      return comm && is_eps(s.phi) && is_eps(s.alpha) && s.a == neg(s.psi(s.b)) &&
             pointwise(g, [&](Element z) { return s.beta(z) == neg(z); });
    case TheoremId::MED7:
      return comm && add(add(s.phi(s.a), s.psi(s.b)), s.a) == s.b &&
             pointwise(g, [&](Element z) {
               return s.phi(s.psi(z)) == s.psi(s.phi(z)) && s.alpha(z) == s.phi(s.phi(z)) &&
                      s.beta(z) == neg(s.phi(z)) && s.phi(s.psi(z)) == neg(z);
             });
    case TheoremId::MED7zn: {
      if (!is_canonical_zn(g)) throw Error("med7zn applies only to the canonical Z_n table");
      const long long n = static_cast<long long>(g.order());
      if (n == 1) return true;
      // Automorphisms of Z_n are x ↦ kx with k = image of 1.
      const long long ka = s.phi(1), kb = s.psi(1), c = s.a, d = s.b;
      const auto m = [n](long long v) { return ((v % n) + n) % n; };
      return static_cast<long long>(s.alpha(1)) == m(ka * ka) &&
             static_cast<long long>(s.beta(1)) == m(-ka) && m(ka * kb + 1) == 0 &&
             m(ka * c + kb * d + c) == d;
    }
    case TheoremId::BOOL:
      return is_boolean_group(g) && is_eps(s.phi) && is_eps(s.alpha) && is_eps(s.beta) &&
             s.a == g.identity() && s.b == g.identity() &&
             pointwise(g, [&](Element z) { return s.psi(z) == neg(z); });
    case TheoremId::T24:
    case TheoremId::T25:
    case TheoremId::T29struct: {
      const Equation eq = builtin(*theorem_identity(id));
      return check_tables(s.circ, s.star, eq).holds &&
             !claim_violation(implication_claim(id), s.circ, s.star);
    }
    case TheoremId::SEC10:
      throw Error("sec10 compares whole censuses; use verify_theorem");
  }
  return false;
}

}  // namespace

bool predicate(TheoremId id, const LinearSpec& spec) {
  const Biquasigroup biq = realize(spec);
  return evaluate(id, SpecRef{spec.group(), spec.phi(), spec.psi(), spec.a(), spec.alpha(),
                              spec.beta(), spec.b(), biq.circ(), biq.star()});
}

namespace {

std::vector<SpecDigest> symmetric_difference(const std::vector<SpecDigest>& a,
                                             const std::vector<SpecDigest>& b) {
  std::vector<SpecDigest> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SpecRef ref_at(const SpecSpace& space, std::size_t ci, std::optional<std::size_t> si) {
  const auto& aut = space.automorphisms();
  const SpecDigest d = space.digest(ci, si);
  const std::size_t star_index = si ? *si : space.operation_index(0, 0, 0);
  return SpecRef{space.group(), aut[d.phi],   aut[d.psi],
                 d.a,           aut[d.alpha], aut[d.beta],
                 d.b,           space.operation(ci), space.operation(star_index)};
}

std::vector<SpecDigest> predicate_census(TheoremId id, const SpecSpace& space, bool circ_only,
                                         unsigned workers) {
  require_tractable(space, circ_only);
  const std::size_t ops = space.operation_count();
  return parallel_chunks<SpecDigest>(
      ops, workers, [&](std::size_t lo, std::size_t hi, std::vector<SpecDigest>& out) {
        for (std::size_t ci = lo; ci < hi; ++ci) {
          if (circ_only) {
            if (evaluate(id, ref_at(space, ci, std::nullopt))) {
              out.push_back(space.digest(ci, std::nullopt));
            }
            continue;
          }
          for (std::size_t si = 0; si < ops; ++si) {
            if (evaluate(id, ref_at(space, ci, si))) out.push_back(space.digest(ci, si));
          }
        }
      });
}

TheoremCheck finish(TheoremCheck check) {
  std::sort(check.census_set.begin(), check.census_set.end());
  std::sort(check.predicate_set.begin(), check.predicate_set.end());
  check.witnesses = symmetric_difference(check.census_set, check.predicate_set);
  check.agree = check.witnesses.empty();
  return check;
}

// Distinct realized tables across both kinds get one shared id.
struct TableIds {
  std::map<CayleyTable, std::uint32_t> ids;
  std::vector<std::uint32_t> of(const SpecSpace& space) {
    std::vector<std::uint32_t> out;
    out.reserve(space.operation_count());
    for (std::size_t i = 0; i < space.operation_count(); ++i) {
      out.push_back(ids.emplace(space.operation(i), static_cast<std::uint32_t>(ids.size()))
                        .first->second);
    }
    return out;
  }
};

void sec10_one(const SpecSpace& middle, const SpecSpace& end,
               const std::vector<std::uint32_t>& mid_ids,
               const std::vector<std::uint32_t>& end_ids, Builtin identity, unsigned workers,
               TheoremCheck& check) {
  const Equation eq = builtin(identity);
  const auto tag = static_cast<std::uint8_t>(static_cast<int>(identity) + 1);
  const CensusOptions opts{workers, {}};
  const CensusReport mid_report = run_census(middle, eq, opts);
  const CensusReport end_report = run_census(end, eq, opts);
  const bool circ_only = mid_report.circ_only;

  const auto pair_of = [&](const SpecSpace& space, const std::vector<std::uint32_t>& ids,
                           const SpecDigest& d) {
    const std::uint32_t c = ids[space.operation_index(d.phi, d.psi, d.a)];
    const std::uint32_t s = circ_only ? c : ids[space.operation_index(d.alpha, d.beta, d.b)];
    return std::pair{c, s};
  };

  std::set<std::pair<std::uint32_t, std::uint32_t>> mid_tables, end_tables;
  for (auto d : mid_report.satisfying) {
    mid_tables.insert(pair_of(middle, mid_ids, d));
    d.tag = tag;
    check.census_set.push_back(d);
  }
  for (auto d : end_report.satisfying) {
    end_tables.insert(pair_of(end, end_ids, d));
    d.tag = tag;
    check.census_set.push_back(d);
  }

  // Specs of one kind whose tables the other kind realizes with the identity.
  const auto collect = [&](const SpecSpace& space, const std::vector<std::uint32_t>& ids,
                           const std::set<std::pair<std::uint32_t, std::uint32_t>>& other) {
    std::set<std::uint32_t> circ_ids;
    for (const auto& [c, s] : other) circ_ids.insert(c);
    const std::size_t ops = space.operation_count();
    for (std::size_t ci = 0; ci < ops; ++ci) {
      if (!circ_ids.count(ids[ci])) continue;
      if (circ_only) {
        SpecDigest d = space.digest(ci, std::nullopt);
        d.tag = tag;
        check.predicate_set.push_back(d);
        continue;
      }
      for (std::size_t si = 0; si < ops; ++si) {
        if (other.count({ids[ci], ids[si]})) {
          SpecDigest d = space.digest(ci, si);
          d.tag = tag;
          check.predicate_set.push_back(d);
        }
      }
    }
  };
  collect(middle, mid_ids, end_tables);
  collect(end, end_ids, mid_tables);
}

}  // namespace

TheoremCheck verify_theorem(TheoremId id, const FiniteGroup& group, const VerifyOptions& options) {
  const unsigned workers = options.workers ? options.workers : default_worker_count();
  TheoremCheck check;
  check.theorem = id;
  check.group = options.group_label.empty() ? "order-" + std::to_string(group.order()) + " group"
                                            : options.group_label;

  const SpecSpace space(group, SpecKind::middle);

  if (id == TheoremId::SEC10) {
    const SpecSpace end(group, SpecKind::end);
    TableIds ids;
    const auto mid_ids = ids.of(space);
    const auto end_ids = ids.of(end);
    if (options.identity) {
      const int k = static_cast<int>(*options.identity);
      if (k < static_cast<int>(Builtin::e2) || k > static_cast<int>(Builtin::e9)) {
        throw Error("sec10 covers e2..e9");
      }
      sec10_one(space, end, mid_ids, end_ids, *options.identity, workers, check);
    } else {
      for (const Builtin b : ward_identities().subspan(1)) {
        sec10_one(space, end, mid_ids, end_ids, b, workers, check);
      }
    }
    return finish(std::move(check));
  }

  if (id == TheoremId::BOOL) {
    // The inverse-operation spec (x∘y = x−y, * the group), if it is linear here.
    if (group.commutative()) {
      const auto& aut = space.automorphisms();
      const Permutation minus = negated(group, aut.front());
      const auto psi = std::find(aut.begin(), aut.end(), minus) - aut.begin();
      const std::size_t ci = space.operation_index(0, static_cast<std::uint32_t>(psi), group.identity());
      const std::size_t si = space.operation_index(0, 0, group.identity());
      bool all = true;
      for (const Builtin b : ward_identities()) {
        all = all && check_tables(space.operation(ci), space.operation(si), builtin(b)).holds;
      }
      if (all) check.census_set.push_back(space.digest(ci, si));
    }
    check.predicate_set = predicate_census(id, space, false, workers);
    return finish(std::move(check));
  }

  const CensusOptions census_opts{workers, check.group};
  const CensusReport census = run_census(space, builtin(*theorem_identity(id)), census_opts);
  check.census_set = census.satisfying;
  if (id == TheoremId::MED7 || id == TheoremId::MED7zn) {
    std::erase_if(check.census_set, [&](const SpecDigest& d) {
      return !is_medial(space.operation(space.operation_index(d.phi, d.psi, d.a))) ||
             !is_medial(space.operation(space.operation_index(d.alpha, d.beta, d.b)));
    });
  }

  if (is_implication(id)) {
    for (const auto& d : check.census_set) {
      const std::size_t ci = space.operation_index(d.phi, d.psi, d.a);
      const std::size_t si = space.operation_index(d.alpha, d.beta, d.b);
      if (evaluate(id, ref_at(space, ci, si))) check.predicate_set.push_back(d);
    }
  } else {
    check.predicate_set = predicate_census(id, space, census.circ_only, workers);
  }
  return finish(std::move(check));
}

}  // namespace biq
