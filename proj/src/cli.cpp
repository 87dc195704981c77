#include "biq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "biq/census.hpp"
#include "biq/constructors.hpp"
#include "biq/error.hpp"
#include "biq/identity.hpp"
#include "biq/magma_io.hpp"
#include "biq/properties.hpp"
#include "biq/structural.hpp"

namespace biq {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

std::vector<CayleyTable> read_blocks(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return read_magma_blocks(in);
  } catch (const FormatError& e) {
    throw Error(path + ": " + e.what());
  }
}

void require_latin(const CayleyTable& table, std::string_view name) {
  if (const auto v = find_latin_violation(table)) {
    throw Error(std::string(name) + " table is not a Latin square: " +
                (v->in_row ? "row " : "column ") + std::to_string(v->line) + " repeats value " +
                std::to_string(v->value));
  }
}

CayleyTable ingest_table(const std::string& path) {
  auto blocks = read_blocks(path);
  if (blocks.size() != 1) {
    throw Error(path + ": expected one table block, found " + std::to_string(blocks.size()));
  }
  return std::move(blocks.front());
}

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw Error("unknown format '" + s + "' (text, json, csv)");
}

std::string join(std::span<const Element> values) {
  std::string s;
  for (const Element v : values) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::string optional_text(const std::optional<Element>& v) {
  return v ? std::to_string(*v) : "none";
}

Json optional_json(const std::optional<Element>& v) { return v ? Json(*v) : Json(nullptr); }

Json rows_json(const CayleyTable& t) {
  Json rows = Json::array();
  for (Element x = 0; x < t.order(); ++x) {
    const auto row = t.row(x);
    rows.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  return rows;
}

Json digest_json(const SpecDigest& d, bool circ_only) {
  Json j;
  j["phi"] = d.phi;
  j["psi"] = d.psi;
  j["a"] = d.a;
  if (!circ_only) {
    j["alpha"] = d.alpha;
    j["beta"] = d.beta;
    j["b"] = d.b;
  }
  return j;
}

std::string digest_csv(const SpecDigest& d) {
  return std::to_string(d.phi) + "," + std::to_string(d.psi) + "," + std::to_string(d.a) + "," +
         std::to_string(d.alpha) + "," + std::to_string(d.beta) + "," + std::to_string(d.b);
}

void no_csv(Format f, std::string_view verb) {
  if (f == Format::csv) {
    throw Error("csv output applies only to census and props, not " + std::string(verb));
  }
}

double millis(std::chrono::nanoseconds ns) { return std::chrono::duration<double, std::milli>(ns).count(); }

std::string fixed_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

struct Flags {
  std::string biq;
  std::string table;
  std::string identity;
  std::string group;
  std::string family;
  std::optional<long long> a, b, c, d, n;
  std::optional<int> variant;
  std::string kind = "middle";
  std::string theorem;
  std::string format = "text";
  bool timing = false;
};

struct Input {
  Biquasigroup biq;
  std::string source;
};

Input load_input(const Flags& f) {
  if (!f.biq.empty() && !f.table.empty()) throw Error("give either --biq or --table, not both");
  if (!f.biq.empty()) return {ingest_biquasigroup(f.biq), f.biq};
  if (!f.table.empty()) {
    const CayleyTable t = ingest_table(f.table);
    require_latin(t, "the");
    return {Biquasigroup(t, t), f.table};
  }
  throw Error("--biq or --table is required");
}

// ---- verbs ---------------------------------------------------------------

int do_check(const Flags& f, std::ostream& out) {
  const Format format = parse_format(f.format);
  no_csv(format, "check");
  if (f.identity.empty()) throw Error("--identity is required");
  const Equation eq = resolve_identity(f.identity);
  const Input in = load_input(f);
  const CheckResult r = check(in.biq, eq);

  if (format == Format::json) {
    Json j;
    j["identity"] = render(eq);
    j["holds"] = r.holds;
    if (r.counterexample) {
      Json assign;
      for (const auto& [var, value] : r.counterexample->assignment) {
        assign[std::string(1, to_char(var))] = value;
      }
      j["counterexample"] = {{"assignment", assign},
                             {"lhs", r.counterexample->lhs_value},
                             {"rhs", r.counterexample->rhs_value}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << "identity: " << render(eq) << '\n';
    out << "result: " << (r.holds ? "holds" : "fails") << '\n';
    if (r.counterexample) {
      out << "counterexample:";
      bool first = true;
      for (const auto& [var, value] : r.counterexample->assignment) {
        out << (first ? " " : ", ") << to_char(var) << '=' << value;
        first = false;
      }
      out << "\nlhs: " << r.counterexample->lhs_value << "\nrhs: " << r.counterexample->rhs_value
          << '\n';
    }
  }
  return r.holds ? kExitOk : kExitRefuted;
}

int do_props(const Flags& f, std::ostream& out) {
  const Format format = parse_format(f.format);
  const Input in = load_input(f);
  const PropertyReport r = full_report(in.biq);

  const std::vector<std::pair<std::string, std::string>> rows = {
      {"order", std::to_string(in.biq.order())},
      {"idempotents_circ", r.idempotents_circ.empty() ? "none" : join(r.idempotents_circ)},
      {"idempotents_star", r.idempotents_star.empty() ? "none" : join(r.idempotents_star)},
      {"left_neutral_circ", optional_text(r.left_neutral_circ)},
      {"left_neutral_star", optional_text(r.left_neutral_star)},
      {"right_neutral_circ", optional_text(r.right_neutral_circ)},
      {"right_neutral_star", optional_text(r.right_neutral_star)},
      {"unipotent_circ", optional_text(r.unipotent_circ)},
      {"unipotent_star", optional_text(r.unipotent_star)},
      {"commutative_circ", r.commutative_circ ? "true" : "false"},
      {"commutative_star", r.commutative_star ? "true" : "false"},
      {"ward_circ", r.ward_circ ? "true" : "false"},
      {"ward_star", r.ward_star ? "true" : "false"},
      {"medial_circ", r.medial_circ ? "true" : "false"},
      {"medial_star", r.medial_star ? "true" : "false"},
      {"paramedial_circ", r.paramedial_circ ? "true" : "false"},
      {"paramedial_star", r.paramedial_star ? "true" : "false"},
      {"left_modular_circ", r.left_modular_circ ? "true" : "false"},
      {"tables_equal", r.tables_equal ? "true" : "false"},
  };

  switch (format) {
    case Format::text:
      for (const auto& [k, v] : rows) out << k << ": " << v << '\n';
      break;
    case Format::csv:
      out << "property,value\n";
      for (const auto& [k, v] : rows) out << k << ',' << v << '\n';
      break;
    case Format::json: {
      Json j;
      j["order"] = in.biq.order();
      j["idempotents_circ"] = r.idempotents_circ;
      j["idempotents_star"] = r.idempotents_star;
      j["left_neutral_circ"] = optional_json(r.left_neutral_circ);
      j["left_neutral_star"] = optional_json(r.left_neutral_star);
      j["right_neutral_circ"] = optional_json(r.right_neutral_circ);
      j["right_neutral_star"] = optional_json(r.right_neutral_star);
      j["unipotent_circ"] = optional_json(r.unipotent_circ);
      j["unipotent_star"] = optional_json(r.unipotent_star);
      j["commutative_circ"] = r.commutative_circ;
      j["commutative_star"] = r.commutative_star;
      j["ward_circ"] = r.ward_circ;
      j["ward_star"] = r.ward_star;
      j["medial_circ"] = r.medial_circ;
      j["medial_star"] = r.medial_star;
      j["paramedial_circ"] = r.paramedial_circ;
      j["paramedial_star"] = r.paramedial_star;
      j["left_modular_circ"] = r.left_modular_circ;
      j["tables_equal"] = r.tables_equal;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int do_construct(const Flags& f, std::ostream& out) {
  const Format format = parse_format(f.format);
  no_csv(format, "construct");
  if (f.family.empty()) throw Error("--family is required");
  const auto family = parse_family(f.family);
  if (!family) throw Error("unknown family '" + f.family + "'");

  FamilyParams p;
  p.family = *family;
  if (!f.group.empty()) p.group = parse_group_name(f.group);
  if (!f.table.empty()) p.table = ingest_table(f.table);
  p.a = f.a;
  p.b = f.b;
  p.c = f.c;
  p.d = f.d;
  p.n = f.n;
  p.variant = f.variant;
  const Biquasigroup biq = construct(p);
  const auto target = target_identity(*family);

  if (format == Format::json) {
    Json j;
    j["family"] = to_string(*family);
    j["identity"] = target ? Json(std::string(to_string(*target))) : Json(nullptr);
    j["order"] = biq.order();
    j["circ"] = rows_json(biq.circ());
    j["star"] = rows_json(biq.star());
    out << j.dump(2) << '\n';
  } else {
    out << "# family " << to_string(*family);
    if (target) out << ", satisfies " << to_string(*target);
    out << '\n' << format_magma_pair(biq.circ(), biq.star());
  }
  return kExitOk;
}

SpecKind kind_flag(const Flags& f) {
  const auto kind = parse_spec_kind(f.kind);
  if (!kind) throw Error("unknown kind '" + f.kind + "' (middle, end)");
  return *kind;
}

int do_census(const Flags& f, std::ostream& out) {
  const Format format = parse_format(f.format);
  if (f.group.empty()) throw Error("--group is required");
  if (f.identity.empty()) throw Error("--identity is required");
  const GroupName name = parse_group_name(f.group);
  const Equation eq = resolve_identity(f.identity);
  const SpecSpace space(catalog(name), kind_flag(f));
  const CensusReport r = run_census(space, eq, CensusOptions{0, to_string(name)});

  switch (format) {
    case Format::csv:
      out << "phi,psi,a,alpha,beta,b\n";
      for (const auto& d : r.satisfying) out << digest_csv(d) << '\n';
      break;
    case Format::json: {
      Json j;
      j["group"] = r.group;
      j["identity"] = r.identity;
      j["kind"] = to_string(r.kind);
      j["circ_only"] = r.circ_only;
      Json auts = Json::array();
      for (const auto& p : space.automorphisms()) auts.push_back(std::vector<Element>(p.images().begin(), p.images().end()));
      j["automorphisms"] = auts;
      j["total_specs"] = r.total_specs;
      j["satisfying_count"] = r.satisfying.size();
      Json list = Json::array();
      for (const auto& d : r.satisfying) list.push_back(digest_json(d, r.circ_only));
      j["satisfying"] = list;
      if (f.timing) j["elapsed_ms"] = millis(r.elapsed);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::text:
      out << "group: " << r.group << '\n';
      out << "identity: " << r.identity << '\n';
      out << "kind: " << to_string(r.kind) << '\n';
      out << "enumerated: " << (r.circ_only ? "phi,psi,a" : "phi,psi,a,alpha,beta,b") << '\n';
      for (std::size_t i = 0; i < space.automorphisms().size(); ++i) {
        out << "aut " << i << ": " << join(space.automorphisms()[i].images()) << '\n';
      }
      out << "specs: " << r.total_specs << '\n';
      out << "satisfying: " << r.satisfying.size() << '\n';
      for (const auto& d : r.satisfying) out << to_string(d) << '\n';
      if (f.timing) out << "elapsed_ms: " << fixed_ms(millis(r.elapsed)) << '\n';
      break;
  }
  return kExitOk;
}

int do_verify_structural(const Flags& f, StructuralClaim claim, Format format, std::ostream& out) {
  const std::size_t n = static_cast<std::size_t>(f.n.value_or(3));
  if (!f.n || *f.n < 1 || *f.n > 4) {
    if (f.n) throw Error("--n must be in 1..4 for structural claims");
  }
  const auto start = std::chrono::steady_clock::now();
  const StructuralReport r = verify_structural(claim, n);
  const double ms = millis(std::chrono::steady_clock::now() - start);

  if (format == Format::json) {
    Json j;
    j["claim"] = to_string(claim);
    j["identity"] = to_string(claim_identity(claim));
    j["order"] = r.order;
    j["pairs"] = r.pairs_examined;
    j["satisfying"] = r.satisfying_pairs;
    j["converse_checks"] = r.converse_checks;
    j["violations"] = r.violation_count;
    if (claim == StructuralClaim::P8idem) j["printed_form_failures"] = r.printed_form_failures;
    j["examples"] = r.violations;
    j["holds"] = r.violation_count == 0;
    if (f.timing) j["elapsed_ms"] = ms;
    out << j.dump(2) << '\n';
  } else {
    out << "claim: " << to_string(claim) << '\n';
    out << "identity: " << to_string(claim_identity(claim)) << '\n';
    out << "order: " << r.order << '\n';
    out << "pairs: " << r.pairs_examined << '\n';
    out << "satisfying: " << r.satisfying_pairs << '\n';
    out << "converse_checks: " << r.converse_checks << '\n';
    out << "violations: " << r.violation_count << '\n';
    if (claim == StructuralClaim::P8idem) {
      out << "printed_form_failures: " << r.printed_form_failures << '\n';
    }
    for (const auto& v : r.violations) out << "violation: " << v << '\n';
    out << "holds: " << (r.violation_count == 0 ? "true" : "false") << '\n';
    if (f.timing) out << "elapsed_ms: " << fixed_ms(ms) << '\n';
  }
  return kExitOk;
}

int do_verify(const Flags& f, std::ostream& out) {
  const Format format = parse_format(f.format);
  no_csv(format, "verify");
  if (f.theorem.empty()) throw Error("--theorem is required");
  if (const auto claim = parse_structural_claim(f.theorem)) {
    return do_verify_structural(f, *claim, format, out);
  }
  const auto id = parse_theorem_id(f.theorem);
  if (!id) throw Error("unknown theorem '" + f.theorem + "'");
  if (f.group.empty()) throw Error("--group is required");
  const GroupName name = parse_group_name(f.group);

  VerifyOptions opts;
  opts.group_label = to_string(name);
  if (!f.identity.empty()) {
    if (*id != TheoremId::SEC10) throw Error("--identity applies to verify only with sec10");
    opts.identity = parse_builtin(f.identity);
    if (!opts.identity) throw Error("sec10 takes one of e2..e9, not '" + f.identity + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  const TheoremCheck c = verify_theorem(*id, catalog(name), opts);
  const double ms = millis(std::chrono::steady_clock::now() - start);
  const auto identity = opts.identity ? opts.identity : theorem_identity(*id);

  const auto side = [&c](const SpecDigest& d) {
    return std::binary_search(c.census_set.begin(), c.census_set.end(), d) ? "census" : "predicate";
  };
  if (format == Format::json) {
    Json j;
    j["theorem"] = to_string(*id);
    j["group"] = c.group;
    j["identity"] = identity ? Json(std::string(to_string(*identity))) : Json(nullptr);
    j["census"] = c.census_set.size();
    j["predicate"] = c.predicate_set.size();
    j["agree"] = c.agree;
    Json w = Json::array();
    for (const auto& d : c.witnesses) {
      Json e = digest_json(d, false);
      e["only_in"] = side(d);
      w.push_back(e);
    }
    j["witnesses"] = w;
    if (f.timing) j["elapsed_ms"] = ms;
    out << j.dump(2) << '\n';
  } else {
    out << "theorem: " << to_string(*id) << '\n';
    out << "group: " << c.group << '\n';
    out << "identity: " << (identity ? std::string(to_string(*identity)) : "several") << '\n';
    out << "census: " << c.census_set.size() << '\n';
    out << "predicate: " << c.predicate_set.size() << '\n';
    out << "agree: " << (c.agree ? "true" : "false") << '\n';
    for (const auto& d : c.witnesses) out << "witness: " << to_string(d) << " only in " << side(d) << '\n';
    if (f.timing) out << "elapsed_ms: " << fixed_ms(ms) << '\n';
  }
  return kExitOk;
}

int do_aut(const Flags& f, std::ostream& out) {
  const Format format = parse_format(f.format);
  no_csv(format, "aut");
  if (f.group.empty()) throw Error("--group is required");
  const GroupName name = parse_group_name(f.group);
  const FiniteGroup g = catalog(name);
  const auto auts = automorphisms(g);
  const auto z = center(g);

  if (format == Format::json) {
    Json j;
    j["group"] = to_string(name);
    j["order"] = g.order();
    j["commutative"] = g.commutative();
    j["center"] = z;
    Json list = Json::array();
    for (const auto& p : auts) list.push_back(std::vector<Element>(p.images().begin(), p.images().end()));
    j["automorphism_count"] = auts.size();
    j["automorphisms"] = list;
    out << j.dump(2) << '\n';
  } else {
    out << "group: " << to_string(name) << '\n';
    out << "order: " << g.order() << '\n';
    out << "commutative: " << (g.commutative() ? "true" : "false") << '\n';
    out << "center: " << join(z) << '\n';
    out << "automorphisms: " << auts.size() << '\n';
    for (const auto& p : auts) out << join(p.images()) << '\n';
  }
  return kExitOk;
}

int do_parse(const Flags& f, std::ostream& out) {
  const Format format = parse_format(f.format);
  no_csv(format, "parse");
  if (f.identity.empty()) throw Error("--identity is required");
  const bool named = f.identity.rfind("custom:", 0) == 0 || parse_builtin(f.identity);
  const Equation eq = named ? resolve_identity(f.identity) : parse_identity(f.identity);

  std::string vars;
  for (const Var v : eq.vars) vars += (vars.empty() ? "" : " ") + std::string(1, to_char(v));
  const CompiledIdentity compiled(eq);
  std::string ops = compiled.uses(Op::circ) ? "o" : "";
  if (compiled.uses(Op::star)) ops += ops.empty() ? "*" : " *";

  if (format == Format::json) {
    Json j;
    j["canonical"] = render(eq);
    j["vars"] = vars;
    j["ops"] = ops;
    out << j.dump(2) << '\n';
  } else {
    out << "canonical: " << render(eq) << '\n';
    out << "vars: " << vars << '\n';
    out << "ops: " << ops << '\n';
  }
  return kExitOk;
}

void add_input(CLI::App* cmd, Flags& f) {
  cmd->add_option("--biq", f.biq, "two-block table file (circ, then star)");
  cmd->add_option("--table", f.table, "one-block table file, used for both operations");
}

void add_format(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "text | json | csv");
}

std::string caret_message(const std::string& input, const ParseError& e) {
  const std::string_view text = std::string_view(input).starts_with("custom:")
                                    ? std::string_view(input).substr(7)
                                    : std::string_view(input);
  return std::string(e.what()) + "\n  " + std::string(text) + "\n  " +
         std::string(std::min(e.position(), text.size()), ' ') + "^";
}

}  // namespace

Biquasigroup ingest_biquasigroup(const std::string& path) {
  const auto blocks = read_blocks(path);
  if (blocks.size() != 2) {
    throw Error(path + ": expected two table blocks (circ, then star), found " +
                std::to_string(blocks.size()));
  }
  if (blocks[0].order() != blocks[1].order()) {
    throw Error(path + ": order mismatch: circ block has order " +
                std::to_string(blocks[0].order()) + ", star block has order " +
                std::to_string(blocks[1].order()));
  }
  require_latin(blocks[0], "circ");
  require_latin(blocks[1], "star");
  return Biquasigroup(blocks[0], blocks[1]);
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biquasigroups over finite groups: identity checks, constructions, censuses"};
  app.name("biq");
  app.require_subcommand(1);
  Flags f;

  auto* check_cmd = app.add_subcommand("check", "check an identity on a biquasigroup");
  add_input(check_cmd, f);
  check_cmd->add_option("--identity", f.identity, "e1..e9 | medial | paramedial | leftmod | custom:EQ");
  add_format(check_cmd, f);

  auto* props_cmd = app.add_subcommand("props", "structural properties of both tables");
  add_input(props_cmd, f);
  add_format(props_cmd, f);

  auto* construct_cmd = app.add_subcommand("construct", "build a family member");
  construct_cmd->add_option("--family", f.family, "construction family");
  construct_cmd->add_option("--group", f.group, "zn:K | z2xz2 | z2xz4 | z2cube | s3 | d4 | q8 | file:PATH");
  construct_cmd->add_option("--table", f.table, "input table for derived_group / e4_extension");
  construct_cmd->add_option("--a", f.a);
  construct_cmd->add_option("--b", f.b);
  construct_cmd->add_option("--c", f.c);
  construct_cmd->add_option("--d", f.d);
  construct_cmd->add_option("--n", f.n);
  construct_cmd->add_option("--variant", f.variant, "c72 variant, 1 or 2");
  add_format(construct_cmd, f);

  auto* census_cmd = app.add_subcommand("census", "enumerate linear specs satisfying an identity");
  census_cmd->add_option("--group", f.group);
  census_cmd->add_option("--identity", f.identity);
  census_cmd->add_option("--kind", f.kind, "middle (φx+a+ψy) | end (φx+ψy+a)");
  census_cmd->add_flag("--timing", f.timing, "report elapsed time");
  add_format(census_cmd, f);

  auto* verify_cmd = app.add_subcommand("verify", "compare a census with a theorem's family, or check a structural claim");
  verify_cmd->add_option("--theorem", f.theorem);
  verify_cmd->add_option("--group", f.group);
  verify_cmd->add_option("--identity", f.identity, "sec10 only: restrict to one of e2..e9");
  verify_cmd->add_option("--n", f.n, "carrier order for structural claims (1..4, default 3)");
  verify_cmd->add_flag("--timing", f.timing, "report elapsed time");
  add_format(verify_cmd, f);

  auto* aut_cmd = app.add_subcommand("aut", "automorphisms and center of a group");
  aut_cmd->add_option("--group", f.group);
  add_format(aut_cmd, f);

  auto* parse_cmd = app.add_subcommand("parse", "parse and render an identity");
  parse_cmd->add_option("--identity", f.identity);
  add_format(parse_cmd, f);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return do_check(f, out);
    if (props_cmd->parsed()) return do_props(f, out);
    if (construct_cmd->parsed()) return do_construct(f, out);
    if (census_cmd->parsed()) return do_census(f, out);
    if (verify_cmd->parsed()) return do_verify(f, out);
    if (aut_cmd->parsed()) return do_aut(f, out);
    if (parse_cmd->parsed()) return do_parse(f, out);
  } catch (const ParseError& e) {
    err << "error: " << caret_message(f.identity, e) << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace biq
