#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biq/census.hpp"
#include "biq/constructors.hpp"
#include "biq/error.hpp"
#include "biq/identity.hpp"
#include "biq/properties.hpp"
#include "biq/structural.hpp"

namespace py = pybind11;
using namespace biq;

namespace {

using Rows = std::vector<std::vector<Element>>;

CayleyTable to_table(const Rows& rows) {
  std::vector<Element> cells;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error("table rows must all have length " + std::to_string(rows.size()));
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return CayleyTable(rows.size(), std::move(cells));
}

Rows to_rows(const CayleyTable& t) {
  Rows rows;
  for (Element x = 0; x < t.order(); ++x) {
    const auto r = t.row(x);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

std::vector<Element> images(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

FiniteGroup named_group(const std::string& name) { return catalog(parse_group_name(name)); }

py::object optional_element(const std::optional<Element>& v) {
  return v ? py::cast(*v) : py::none();
}

py::dict digest_dict(const SpecDigest& d) {
  py::dict out;
  out["phi"] = d.phi;
  out["psi"] = d.psi;
  out["a"] = d.a;
  out["alpha"] = d.alpha;
  out["beta"] = d.beta;
  out["b"] = d.b;
  return out;
}

py::dict check_tables_py(const Rows& circ, const Rows& star, const std::string& identity) {
  const Biquasigroup b(to_table(circ), to_table(star));
  const Equation eq = resolve_identity(identity);
  const CheckResult r = check(b, eq);
  py::dict out;
  out["identity"] = render(eq);
  out["holds"] = r.holds;
  if (r.counterexample) {
    py::dict ce;
    for (const auto& [var, value] : r.counterexample->assignment) ce[py::str(std::string(1, to_char(var)))] = value;
    ce["lhs"] = r.counterexample->lhs_value;
    ce["rhs"] = r.counterexample->rhs_value;
    out["counterexample"] = ce;
  } else {
    out["counterexample"] = py::none();
  }
  return out;
}

py::dict properties_py(const Rows& circ, const Rows& star) {
  const PropertyReport r = full_report(Biquasigroup(to_table(circ), to_table(star)));
  py::dict out;
  out["idempotents_circ"] = r.idempotents_circ;
  out["idempotents_star"] = r.idempotents_star;
  out["left_neutral_circ"] = optional_element(r.left_neutral_circ);
  out["left_neutral_star"] = optional_element(r.left_neutral_star);
  out["right_neutral_circ"] = optional_element(r.right_neutral_circ);
  out["right_neutral_star"] = optional_element(r.right_neutral_star);
  out["unipotent_circ"] = optional_element(r.unipotent_circ);
  out["unipotent_star"] = optional_element(r.unipotent_star);
  out["commutative_circ"] = r.commutative_circ;
  out["commutative_star"] = r.commutative_star;
  out["ward_circ"] = r.ward_circ;
  out["ward_star"] = r.ward_star;
  out["medial_circ"] = r.medial_circ;
  out["medial_star"] = r.medial_star;
  out["paramedial_circ"] = r.paramedial_circ;
  out["paramedial_star"] = r.paramedial_star;
  out["left_modular_circ"] = r.left_modular_circ;
  out["tables_equal"] = r.tables_equal;
  return out;
}

py::tuple construct_py(const std::string& family, const std::optional<std::string>& group,
                       const std::optional<Rows>& table, std::optional<long long> a,
                       std::optional<long long> b, std::optional<long long> c,
                       std::optional<long long> d, std::optional<long long> n,
                       std::optional<int> variant) {
  const auto f = parse_family(family);
  if (!f) throw Error("unknown family '" + family + "'");
  FamilyParams p;
  p.family = *f;
  if (group) p.group = parse_group_name(*group);
  if (table) p.table = to_table(*table);
  p.a = a;
  p.b = b;
  p.c = c;
  p.d = d;
  p.n = n;
  p.variant = variant;
  const Biquasigroup out = construct(p);
  return py::make_tuple(to_rows(out.circ()), to_rows(out.star()));
}

py::dict census_py(const std::string& group, const std::string& identity, const std::string& kind,
                   unsigned workers) {
  const auto k = parse_spec_kind(kind);
  if (!k) throw Error("unknown kind '" + kind + "'");
  const SpecSpace space(named_group(group), *k);
  CensusReport r;
  {
    py::gil_scoped_release release;
    r = run_census(space, resolve_identity(identity), {workers, group});
  }
  py::dict out;
  out["group"] = r.group;
  out["identity"] = r.identity;
  out["kind"] = std::string(to_string(r.kind));
  out["circ_only"] = r.circ_only;
  out["total_specs"] = r.total_specs;
  py::list autos;
  for (const auto& p : space.automorphisms()) autos.append(images(p));
  out["automorphisms"] = autos;
  py::list sat;
  for (const auto& d : r.satisfying) sat.append(digest_dict(d));
  out["satisfying"] = sat;
  return out;
}

py::dict verify_theorem_py(const std::string& theorem, const std::string& group,
                           std::optional<std::string> identity, unsigned workers) {
  const auto id = parse_theorem_id(theorem);
  if (!id) throw Error("unknown theorem '" + theorem + "'");
  VerifyOptions opts;
  opts.workers = workers;
  opts.group_label = group;
  if (identity) {
    opts.identity = parse_builtin(*identity);
    if (!opts.identity) throw Error("unknown identity '" + *identity + "'");
  }
  const FiniteGroup g = named_group(group);
  TheoremCheck c;
  {
    py::gil_scoped_release release;
    c = verify_theorem(*id, g, opts);
  }
  py::dict out;
  out["theorem"] = std::string(to_string(*id));
  out["group"] = c.group;
  out["census"] = c.census_set.size();
  out["predicate"] = c.predicate_set.size();
  out["agree"] = c.agree;
  py::list w;
  for (const auto& d : c.witnesses) w.append(digest_dict(d));
  out["witnesses"] = w;
  return out;
}

py::dict verify_structural_py(const std::string& claim, std::size_t n) {
  const auto c = parse_structural_claim(claim);
  if (!c) throw Error("unknown structural claim '" + claim + "'");
  StructuralReport r;
  {
    py::gil_scoped_release release;
    r = verify_structural(*c, n);
  }
  py::dict out;
  out["claim"] = std::string(to_string(*c));
  out["order"] = r.order;
  out["pairs"] = r.pairs_examined;
  out["satisfying"] = r.satisfying_pairs;
  out["converse_checks"] = r.converse_checks;
  out["violations"] = r.violation_count;
  out["examples"] = r.violations;
  return out;
}

}  // namespace

PYBIND11_MODULE(pybiq, m) {
  m.doc() = "Biquasigroups over finite groups: identity checks, constructions and linear censuses.";

  auto& error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  static py::handle parse_error_type = py::register_exception<ParseError>(m, "ParseError", error.ptr());
  // Registered last, so tried first: attaches the 0-based error offset.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object inst = py::reinterpret_borrow<py::object>(parse_error_type)(e.what());
      inst.attr("position") = e.position();
      PyErr_SetObject(parse_error_type.ptr(), inst.ptr());
    }
  });

  m.def("catalog_groups", [] {
    std::vector<std::string> names;
    for (const auto& g : catalog_groups()) names.push_back(to_string(g));
    return names;
  }, "Names of the catalog groups of order at most 8.");
  m.def("group_table", [](const std::string& name) { return to_rows(named_group(name).table()); },
        py::arg("group"), "Cayley table of a catalog group (zn:K, z2xz2, s3, ...).");
  m.def("automorphisms", [](const std::string& name) {
    std::vector<std::vector<Element>> out;
    for (const auto& p : automorphisms(named_group(name))) out.push_back(images(p));
    return out;
  }, py::arg("group"), "Automorphisms as image lists, sorted, identity first.");
  m.def("center", [](const std::string& name) { return center(named_group(name)); }, py::arg("group"));

  m.def("parse", [](const std::string& text) { return render(parse_identity(text)); }, py::arg("text"),
        "Parse an equation and return its fully parenthesized rendering.");
  m.def("builtin", [](const std::string& name) { return render(resolve_identity(name)); }, py::arg("name"),
        "Render a named identity (e1..e9, medial, ...).");
  m.def("check", &check_tables_py, py::arg("circ"), py::arg("star"), py::arg("identity"),
        "Check an identity on a pair of Latin squares given as row lists.");
  m.def("properties", &properties_py, py::arg("circ"), py::arg("star"));
  m.def("is_ward", [](const Rows& t) { return is_ward(to_table(t)); }, py::arg("table"));
  m.def("ward_from_group", [](const std::string& g) { return to_rows(ward_from_group(named_group(g))); },
        py::arg("group"));
  m.def("derived_group", [](const Rows& t) { return to_rows(derived_group(to_table(t)).table()); },
        py::arg("table"));

  m.def("families", [] {
    std::vector<std::string> names;
    for (const Family f : all_families()) names.emplace_back(to_string(f));
    return names;
  });
  m.def("construct", &construct_py, py::arg("family"), py::arg("group") = py::none(),
        py::arg("table") = py::none(), py::arg("a") = py::none(), py::arg("b") = py::none(),
        py::arg("c") = py::none(), py::arg("d") = py::none(), py::arg("n") = py::none(),
        py::arg("variant") = py::none(), "Build a family member; returns (circ, star).");

  m.def("census", &census_py, py::arg("group"), py::arg("identity"), py::arg("kind") = "middle",
        py::arg("workers") = 0u, "Enumerate every linear spec over a group and keep those satisfying the identity.");
  m.def("verify_theorem", &verify_theorem_py, py::arg("theorem"), py::arg("group"),
        py::arg("identity") = py::none(), py::arg("workers") = 0u);
  m.def("verify_structural", &verify_structural_py, py::arg("claim"), py::arg("n"));
}
