// pomlab: batch verification, conversion, completion, enumeration and
// diagram export for finite bounded involutive posets, directoids and
// effect algebras.
//
// Exit codes: 0 all checks hold, 1 a check failed (witness printed),
// 2 usage/format error.

#include "CLI11.hpp"
#include "json.hpp"
#include "pomlab/pomlab.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace pomlab;
using nlohmann::json;

namespace {

struct Common {
  bool json_out = false;
  std::string dot_file;
  int threads = 1;
  int cap = 0;  // 0: keep defaults / POMLAB_CAP
};

EnumOptions enum_options(const Common& c) {
  EnumOptions opts;
  if (const char* env = std::getenv("POMLAB_CAP")) {
    int v = std::atoi(env);
    if (v > 0) {
      opts.poset_cap = v;
      opts.ea_cap = v;
    }
  }
  if (c.cap > 0) {
    opts.poset_cap = c.cap;
    opts.ea_cap = c.cap;
  }
  opts.threads = c.threads;
  return opts;
}

std::string witness_text(const Poset& p, const std::vector<std::string>& vars,
                         const std::vector<Element>& witness) {
  std::string out;
  for (size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    out += (i < vars.size() ? vars[i] : "v" + std::to_string(i)) + "=" +
           p.label(witness[i]);
  }
  return out;
}

json witness_json(const std::vector<std::string>& vars, const std::vector<Element>& witness) {
  json j = json::object();
  for (size_t i = 0; i < witness.size(); ++i)
    j[i < vars.size() ? vars[i] : "v" + std::to_string(i)] = witness[i];
  return j;
}

void maybe_dot(const Common& c, const Poset& p) {
  if (c.dot_file.empty()) return;
  std::ofstream out(c.dot_file);
  if (!out) throw Error(ErrorKind::UsageError, "cannot write " + c.dot_file);
  out << to_dot(p);
}

const Poset& as_poset(const Structure& s) {
  if (!std::holds_alternative<Poset>(s))
    throw Error(ErrorKind::UsageError, "this command expects a poset document");
  return std::get<Poset>(s);
}

int run_check(const std::string& file, const std::vector<std::string>& props, const Common& c) {
  Structure s = load_structure(file);
  json report = json::array();
  bool all_hold = true;

  auto emit = [&](const std::string& prop, const CheckResult& r, const std::vector<std::string>& vars,
                  const Poset& labels) {
    if (c.json_out) {
      json row = {{"prop", prop}, {"holds", r.holds}};
      if (!r.holds) row["witness"] = witness_json(vars, r.witness);
      report.push_back(row);
    } else if (r.holds) {
      std::cout << prop << ": holds\n";
    } else {
      std::cout << prop << ": fails (" << witness_text(labels, vars, r.witness) << ")\n";
    }
    all_hold = all_hold && r.holds;
  };

  if (std::holds_alternative<Poset>(s)) {
    const Poset& p = std::get<Poset>(s);
    maybe_dot(c, p);
    for (const std::string& name : props) {
      auto prop = poset_property_from_string(name);
      if (!prop) throw Error(ErrorKind::UsageError, "unknown poset property " + name);
      emit(name, check(p, *prop), witness_variables(*prop), p);
    }
  } else if (std::holds_alternative<Directoid>(s)) {
    const Directoid& d = std::get<Directoid>(s);
    for (const std::string& name : props) {
      auto cls = directoid_class_from_string(name);
      if (!cls) throw Error(ErrorKind::UsageError, "unknown directoid class " + name);
      CheckResult r = check_class(d, *cls);
      if (c.json_out) {
        json row = {{"prop", name}, {"holds", r.holds}};
        if (!r.holds) row["witness"] = witness_json(witness_variables(*cls), r.witness);
        report.push_back(row);
      } else if (r.holds) {
        std::cout << name << ": holds\n";
      } else {
        std::cout << name << ": fails (";
        auto vars = witness_variables(*cls);
        for (size_t i = 0; i < r.witness.size(); ++i)
          std::cout << (i ? ", " : "") << (i < vars.size() ? vars[i] : "v") << "=" << r.witness[i];
        std::cout << ")\n";
      }
      all_hold = all_hold && r.holds;
    }
  } else {
    const EffectAlgebra& ea = std::get<EffectAlgebra>(s);
    Poset p = induced_order(ea);
    maybe_dot(c, p);
    for (const std::string& name : props) {
      auto prop = poset_property_from_string(name);
      if (!prop) throw Error(ErrorKind::UsageError, "unknown poset property " + name);
      emit(name + "(induced order)", check(p, *prop), witness_variables(*prop), p);
    }
  }
  if (c.json_out)
    std::cout << json{{"command", "check"}, {"file", file}, {"results", report}, {"ok", all_hold}}.dump(2)
              << "\n";
  return all_hold ? 0 : 1;
}

int run_witness(const std::string& file, const Common& c) {
  Structure s = load_structure(file);
  const Poset& p = as_poset(s);
  maybe_dot(c, p);
  auto w = find_b6_witness(p);
  if (c.json_out) {
    json j = {{"command", "witness"}, {"file", file}, {"found", w.has_value()}};
    if (w) j["witness"] = json::parse(to_json_string(*w, false));
    std::cout << j.dump(2) << "\n";
  } else if (w) {
    std::cout << "hexagon witness: 0=" << p.label(w->zero) << " a=" << p.label(w->a)
              << " b=" << p.label(w->b) << " b'=" << p.label(w->b_prime)
              << " a'=" << p.label(w->a_prime) << " 1=" << p.label(w->one) << "\n";
  } else {
    std::cout << "hexagon witness: none (structure is paraorthomodular)\n";
  }
  return w ? 1 : 0;
}

int run_complete(const std::string& file, const Common& c) {
  Structure s = load_structure(file);
  const Poset& p = as_poset(s);
  DmCompletion dm = dm_complete(p);
  maybe_dot(c, dm.lattice);
  auto para = check(dm.lattice, PosetProperty::paraorthomodular);
  DmOptions budget;
  auto wdc = is_weakly_d_continuous(p, SweepMode::closed_sets, budget);
  auto flp = satisfies_flp(p, SweepMode::closed_sets, budget);
  if (c.json_out) {
    json j = json::parse(completion_to_json_string(dm, false));
    j["diagnosis"] = {{"completion_paraorthomodular", para.holds},
                      {"weakly_d_continuous", wdc.yes},
                      {"flp", flp.yes}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << completion_to_json_string(dm) << "\n";
    std::cerr << "completion size: " << dm.universe.size() << "\n"
              << "completion paraorthomodular: " << (para.holds ? "yes" : "no") << "\n"
              << "weakly D-continuous: " << (wdc.yes ? "yes" : "no") << "\n"
              << "FLP: " << (flp.yes ? "yes" : "no") << "\n";
    if (!wdc.yes)
      std::cerr << "  wdc witness B=" << subset_to_string(wdc.first)
                << " C=" << subset_to_string(wdc.second) << "\n";
  }
  return (para.holds && wdc.yes && flp.yes) ? 0 : 1;
}

int run_convert(const std::string& file, const std::string& to, const std::string& policy_name,
                const std::string& chooser, const Common& c) {
  Structure s = load_structure(file);
  AssignmentPolicy policy;
  if (policy_name == "canonical") policy.mode = AssignmentPolicy::Mode::canonical;
  else if (policy_name != "arbitrary")
    throw Error(ErrorKind::UsageError, "unknown policy " + policy_name);
  if (chooser != "least" && chooser != "all")
    throw Error(ErrorKind::UsageError, "unknown chooser " + chooser);

  if (to == "directoid") {
    if (std::holds_alternative<EffectAlgebra>(s)) {
      // total join table over an orthoalgebra
      const EffectAlgebra& ea = std::get<EffectAlgebra>(s);
      if (chooser == "all") {
        for_each_directoid_from_orthoalgebra(ea, enum_options(c).directoid_fanout_cap,
                                             [&](const Directoid& d) {
                                               std::cout << to_json_string(d, false) << "\n";
                                               return true;
                                             });
      } else {
        std::cout << to_json_string(directoid_from_orthoalgebra(ea)) << "\n";
      }
      return 0;
    }
    const Poset& p = as_poset(s);
    maybe_dot(c, p);
    if (chooser == "all") {
      policy.enumerate_all = true;
      for_each_assigned_directoid(p, policy, enum_options(c).directoid_fanout_cap,
                                  [&](const Directoid& d) {
                                    std::cout << to_json_string(d, false) << "\n";
                                    return true;
                                  });
    } else {
      std::cout << to_json_string(assigned_directoid(p, policy)) << "\n";
    }
    return 0;
  }
  if (to == "poset") {
    if (std::holds_alternative<Directoid>(s)) {
      Poset p = induced_poset(std::get<Directoid>(s));
      maybe_dot(c, p);
      std::cout << to_json_string(p) << "\n";
      return 0;
    }
    if (std::holds_alternative<EffectAlgebra>(s)) {
      Poset p = induced_order(std::get<EffectAlgebra>(s));
      maybe_dot(c, p);
      std::cout << to_json_string(p) << "\n";
      return 0;
    }
    throw Error(ErrorKind::UsageError, "already a poset");
  }
  if (to == "effect-algebra" || to == "orthoalgebra") {
    if (!std::holds_alternative<Directoid>(s))
      throw Error(ErrorKind::UsageError, "conversion to an effect algebra starts from a directoid");
    EffectAlgebra ea = orthoalgebra_from_ortho_directoid(std::get<Directoid>(s));
    std::cout << to_json_string(ea) << "\n";
    return 0;
  }
  throw Error(ErrorKind::UsageError, "unknown conversion target " + to);
}

int run_eval(const std::string& file, const std::string& formula_file, const Common& c) {
  Structure s = load_structure(file);
  auto formulas = load_formula_file(formula_file);
  bool all_hold = true;
  json report = json::array();
  for (const auto& nf : formulas) {
    EvalResult r = std::holds_alternative<Poset>(s)      ? evaluate(std::get<Poset>(s), nf.formula)
                   : std::holds_alternative<Directoid>(s) ? evaluate(std::get<Directoid>(s), nf.formula)
                                                          : evaluate(induced_order(std::get<EffectAlgebra>(s)), nf.formula);
    all_hold = all_hold && r.holds;
    if (c.json_out) {
      json row = {{"name", nf.name}, {"formula", nf.text}, {"holds", r.holds}};
      if (!r.holds) {
        json w = json::object();
        for (const auto& [var, val] : r.witness) w[var] = val;
        row["witness"] = w;
      }
      report.push_back(row);
    } else if (r.holds) {
      std::cout << nf.name << ": holds\n";
    } else {
      std::cout << nf.name << ": fails (";
      for (size_t i = 0; i < r.witness.size(); ++i)
        std::cout << (i ? ", " : "") << r.witness[i].first << "=" << r.witness[i].second;
      std::cout << ")\n";
    }
  }
  if (c.json_out)
    std::cout << json{{"command", "eval"}, {"file", file}, {"results", report}, {"ok", all_hold}}.dump(2)
              << "\n";
  return all_hold ? 0 : 1;
}

int run_enumerate(int n, const std::string& filter_csv, bool count_only, const Common& c) {
  std::vector<PosetProperty> filters;
  std::string token;
  std::istringstream in(filter_csv);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    auto prop = poset_property_from_string(token);
    if (!prop) throw Error(ErrorKind::UsageError, "unknown poset property " + token);
    filters.push_back(*prop);
  }
  uint64_t count = 0;
  enumerate_posets(n, filters,
                   [&](const Poset& p) {
                     ++count;
                     if (!count_only) std::cout << to_json_string(p, false) << "\n";
                     return true;
                   },
                   enum_options(c));
  std::string cls = filter_csv.empty() ? "all" : filter_csv;
  if (c.json_out)
    std::cout << json{{"summary", {{"n", n}, {"class", cls}, {"count", count}}}}.dump() << "\n";
  else
    std::cerr << "n=" << n << " class=" << cls << " count=" << count << "\n";
  return 0;
}

struct Step {
  std::string name;
  bool ok;
};

int report_steps(const std::string& scenario, const std::vector<Step>& steps, const Common& c) {
  bool all = true;
  for (const auto& s : steps) all = all && s.ok;
  if (c.json_out) {
    json rows = json::array();
    for (const auto& s : steps) rows.push_back({{"step", s.name}, {"ok", s.ok}});
    std::cout << json{{"command", "reproduce"}, {"scenario", scenario}, {"steps", rows}, {"ok", all}}.dump(2)
              << "\n";
  } else {
    for (const auto& s : steps)
      std::cout << (s.ok ? "  ok  " : " FAIL ") << s.name << "\n";
    std::cout << (all ? "reproduced" : "NOT reproduced") << ": " << scenario << "\n";
  }
  return all ? 0 : 1;
}

int run_reproduce(const std::string& scenario, const Common& c) {
  std::vector<Step> steps;
  auto step = [&](const std::string& name, bool ok) { steps.push_back({name, ok}); };

  if (scenario == "fig1") {
    Poset p = fixtures::fig1();
    step("paraorthomodular", check(p, PosetProperty::paraorthomodular).holds);
    step("modular", check(p, PosetProperty::modular).holds);
    step("not distributive", !check(p, PosetProperty::distributive).holds);
    Subset lhs = p.lower_cone(p.upper_cone(1, 2)) & p.down(3);
    Subset expected = p.single(0);
    expected.set(3);
    step("L(U(a,b),c) = {0,c}", lhs == expected);
    return report_steps(scenario, steps, c);
  }
  if (scenario == "fig2") {
    Poset p = fixtures::fig2();
    step("paraorthomodular", check(p, PosetProperty::paraorthomodular).holds);
    step("distributive", check(p, PosetProperty::distributive).holds);
    return report_steps(scenario, steps, c);
  }
  if (scenario == "fig3") {
    Poset p = fixtures::fig3();
    step("paraorthomodular", check(p, PosetProperty::paraorthomodular).holds);
    auto r = check(p, PosetProperty::modular);
    step("not modular", !r.holds);
    step("witness x=a, z=c'",
         !r.holds && r.witness.size() == 3 && p.label(r.witness[0]) == "a" && p.label(r.witness[2]) == "c'");
    return report_steps(scenario, steps, c);
  }
  if (scenario == "fig4") {
    Poset p = fixtures::b6();
    auto r = check(p, PosetProperty::paraorthomodular);
    step("paraorthomodularity fails", !r.holds);
    step("witness (a,b)",
         !r.holds && r.witness.size() == 2 && p.label(r.witness[0]) == "a" && p.label(r.witness[1]) == "b");
    auto w = find_b6_witness(p);
    step("hexagon witness found", w.has_value());
    step("witness re-verifies", w && verify_b6_witness(p, *w));
    if (!c.json_out && w) std::cout << to_json_string(*w) << "\n";
    return report_steps(scenario, steps, c);
  }
  if (scenario == "fig5") {
    Directoid d = fixtures::fig5_directoid();
    step("table is a paraorthomodular directoid (weak sense)",
         check_class(d, DirectoidClass::para_directoid_weak).holds);
    auto sub = subdirectoid_generated(d, {3, 5});
    step("subdirectoid generated by {a,b} has six elements", sub.sub.size() == 6);
    step("subdirectoid is not a paraorthomodular directoid",
         !check_class(sub.sub, DirectoidClass::para_directoid_weak).holds);
    step("its induced poset is a hexagon", find_b6_witness(induced_poset(sub.sub)).has_value());
    return report_steps(scenario, steps, c);
  }
  if (scenario == "corollary-dm") {
    EnumOptions opts = enum_options(c);
    bool agree = true;
    uint64_t count = 0;
    for (int n = 1; n <= std::min(6, opts.poset_cap); ++n)
      for (const Poset& p : all_posets(n, opts)) {
        ++count;
        bool para = check(dm_complete(p).lattice, PosetProperty::paraorthomodular).holds;
        bool wdc = is_weakly_d_continuous(p, SweepMode::raw_subsets).yes;
        bool flp = satisfies_flp(p, SweepMode::raw_subsets).yes;
        agree = agree && (para == wdc) && (wdc == flp);
      }
    step("three-way equivalence over " + std::to_string(count) + " structures", agree);
    return report_steps(scenario, steps, c);
  }
  if (scenario == "roundtrip-oa") {
    EnumOptions opts = enum_options(c);
    bool all_ok = true;
    uint64_t count = 0;
    ParsedFormula od4 = parse_formula("((x ^ y') v y) v (((x ^ y') v y) v z)' = (x ^ y') v (y v (((x ^ y') v y) v z)')");
    for (int n = 1; n <= std::min(6, opts.ea_cap); ++n)
      for (const EffectAlgebra& ea : all_effect_algebras(n, opts)) {
        if (!is_orthoalgebra(ea)) continue;
        ++count;
        Directoid d = directoid_from_orthoalgebra(ea);
        bool od = check_class(d, DirectoidClass::ortho_directoid).holds;
        bool parsed_axiom = evaluate(d, od4).holds;
        bool back = orthoalgebra_from_ortho_directoid(d).same_structure(ea);
        all_ok = all_ok && od && parsed_axiom && back;
      }
    step("round trip over " + std::to_string(count) + " orthoalgebras", all_ok && count > 0);
    return report_steps(scenario, steps, c);
  }
  throw Error(ErrorKind::UsageError, "unknown scenario " + scenario);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model laboratory for bounded involutive posets, directoids and effect algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Common common;
  app.add_flag("--json", common.json_out, "machine-readable reports");
  app.add_option("--dot", common.dot_file, "write a Hasse diagram in DOT format");
  app.add_option("--threads", common.threads, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--cap", common.cap, "override enumeration size caps")->check(CLI::PositiveNumber);

  std::string file, formula_file, to = "directoid", policy = "arbitrary", chooser = "least";
  std::string filter_csv, scenario;
  std::vector<std::string> props;
  int n = 0;
  bool count_only = false;

  auto* cmd_check = app.add_subcommand("check", "decide properties of a structure file");
  cmd_check->add_option("file", file)->required();
  cmd_check->add_option("--prop", props, "property or class names")->required();

  auto* cmd_witness = app.add_subcommand("witness", "search the forbidden hexagon configuration");
  cmd_witness->add_option("file", file)->required();

  auto* cmd_complete = app.add_subcommand("complete", "Dedekind-MacNeille completion with diagnosis");
  cmd_complete->add_option("file", file)->required();

  auto* cmd_convert = app.add_subcommand("convert", "convert between structure kinds");
  cmd_convert->add_option("file", file)->required();
  cmd_convert->add_option("--to", to, "directoid|poset|effect-algebra|orthoalgebra")->required();
  cmd_convert->add_option("--policy", policy, "arbitrary|canonical");
  cmd_convert->add_option("--chooser", chooser, "least|all");

  auto* cmd_eval = app.add_subcommand("eval", "evaluate formulas against a structure");
  cmd_eval->add_option("file", file)->required();
  cmd_eval->add_option("formulas", formula_file)->required();

  auto* cmd_enum = app.add_subcommand("enumerate", "stream structures up to ortho-isomorphism");
  cmd_enum->add_option("--n", n, "structure size")->required();
  cmd_enum->add_option("--filter", filter_csv, "comma-separated property filters");
  cmd_enum->add_flag("--count-only", count_only, "suppress the JSON-lines stream");

  auto* cmd_repro = app.add_subcommand("reproduce", "run a bundled end-to-end scenario");
  cmd_repro->add_option("scenario", scenario,
                        "fig1|fig2|fig3|fig4|fig5|corollary-dm|roundtrip-oa")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_check)) return run_check(file, props, common);
    if (app.got_subcommand(cmd_witness)) return run_witness(file, common);
    if (app.got_subcommand(cmd_complete)) return run_complete(file, common);
    if (app.got_subcommand(cmd_convert)) return run_convert(file, to, policy, chooser, common);
    if (app.got_subcommand(cmd_eval)) return run_eval(file, formula_file, common);
    if (app.got_subcommand(cmd_enum)) return run_enumerate(n, filter_csv, count_only, common);
    if (app.got_subcommand(cmd_repro)) return run_reproduce(scenario, common);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    // precondition failures on well-formed input count as failed checks
    bool failed_check = e.kind() == ErrorKind::NotOrthoalgebra ||
                        e.kind() == ErrorKind::NotOrthoDirectoid ||
                        e.kind() == ErrorKind::ThetaNotCongruence;
    return failed_check ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
