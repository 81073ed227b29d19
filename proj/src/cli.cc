#include "ael/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ael/effective.h"
#include "ael/lp.h"
#include "ael/operator.h"
#include "ael/parser.h"
#include "ael/semantics.h"

namespace ael {

std::optional<std::string> RunReport::get(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  return std::nullopt;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "command=" << command << "\n";
  os << "input=" << input_digest << "\n";
  for (const auto& [k, v] : fields) os << k << "=" << v << "\n";
  os << "entailment_calls=" << entailment_calls << "\n";
  if (wall_ms) os << "wall_ms=" << *wall_ms << "\n";
  return os.str();
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["input"] = input_digest;
  auto& payload = doc["fields"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : fields) payload[k] = v;
  doc["entailment_calls"] = entailment_calls;
  if (wall_ms) doc["wall_ms"] = *wall_ms;
  doc["exit_code"] = exit_code;
  return doc.dump(2) + "\n";
}

std::string input_digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

namespace {

std::string join_names(const Signature& sig) {
  std::string out;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) out += ",";
    out += sig.name(static_cast<AtomId>(i));
  }
  return out;
}

std::string values_line(const std::vector<TruthValue>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += to_char(values[i]);
  }
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string interpretations(const std::vector<Interpretation>& is, const Signature& sig) {
  std::string out = "{";
  for (std::size_t k = 0; k < is.size(); ++k) {
    if (k) out += ", ";
    out += to_string(is[k], sig, sig.size());
  }
  return out + "}";
}

RunReport start(std::string command, std::string_view input) {
  RunReport r;
  r.command = std::move(command);
  r.input_digest = input_digest(input);
  return r;
}

void add_literals(RunReport& r, const std::vector<Formula>& literals, const Signature& sig) {
  r.add("literals", std::to_string(literals.size()));
  for (std::size_t j = 0; j < literals.size(); ++j)
    r.add("literal." + std::to_string(j), to_string(literals[j], sig));
}

void add_final_values(RunReport& r, const std::vector<Formula>& literals,
                      const std::vector<TruthValue>& values, const Signature& sig) {
  for (std::size_t j = 0; j < literals.size(); ++j)
    r.add("value." + to_string(literals[j], sig), std::string(to_string(values[j])));
}

}  // namespace

RunReport cmd_lfp(std::string_view theory_text, Engine engine, bool trace) {
  RunReport r = start("lfp", theory_text);
  Signature sig;
  const Theory theory = parse_theory(theory_text, sig);
  const std::size_t n = sig.size();
  r.add("engine", engine == Engine::kExplicit ? "explicit" : "sder");
  r.add("atoms", join_names(sig));
  r.add("formulas", std::to_string(theory.size()));

  if (engine == Engine::kExplicit) {
    const FixpointTrace t = lfp_der(theory, n);
    add_literals(r, t.literals, sig);
    r.add("iterations", std::to_string(t.iterations()));
    if (trace) {
      for (std::size_t k = 0; k < t.pairs.size(); ++k) {
        r.add("step." + std::to_string(k), to_string(t.pairs[k], sig));
        r.add("step." + std::to_string(k) + ".values", values_line(t.values[k]));
      }
    }
    r.add("fixpoint", to_string(t.fixpoint(), sig));
    r.add("complete", bool_text(t.fixpoint().is_complete()));
    add_final_values(r, t.literals, t.values.back(), sig);
    return r;
  }

  Prover prover;
  const SderTrace t = lfp_sder(theory, prover);
  add_literals(r, t.literals, sig);
  r.add("iterations", std::to_string(t.iterations()));
  if (trace) {
    for (std::size_t k = 0; k < t.theories.size(); ++k) {
      r.add("step." + std::to_string(k), to_string(t.theories[k], sig));
      r.add("step." + std::to_string(k) + ".values", values_line(t.values[k]));
    }
  }
  r.add("theory", to_string(t.fixpoint(), sig));
  if (n <= atom_cap()) {
    const BeliefPair b = bel(t.fixpoint(), n);
    r.add("fixpoint", to_string(b, sig));
    r.add("complete", bool_text(b.is_complete()));
  }
  add_final_values(r, t.literals, t.values.back(), sig);
  r.entailment_calls = t.entailment_calls;
  return r;
}

RunReport cmd_query(std::string_view theory_text, std::string_view formula_text, Engine engine) {
  RunReport r = start("query", theory_text);
  Signature sig;
  const Theory theory = parse_theory(theory_text, sig);
  const Formula query = parse_modal(formula_text, sig);
  const std::size_t n = sig.size();
  r.add("engine", engine == Engine::kExplicit ? "explicit" : "sder");
  r.add("atoms", join_names(sig));
  r.add("query", to_string(query, sig));

  TruthValue verdict;
  if (engine == Engine::kExplicit) {
    verdict = skeptical_value(theory, query, n);
  } else {
    Prover prover;
    const SderTrace t = lfp_sder(theory, prover);
    verdict = eval_modal_atom_3fol(t.fixpoint(), query, prover);
    r.entailment_calls = prover.entailment_calls();
  }
  r.add("verdict", std::string(to_string(verdict)));
  return r;
}

RunReport cmd_expansions(std::string_view theory_text) {
  RunReport r = start("expansions", theory_text);
  Signature sig;
  const Theory theory = parse_theory(theory_text, sig);
  r.add("atoms", join_names(sig));
  const auto found = enumerate_autoepistemic_models(theory, sig.size());
  r.add("models", std::to_string(found.size()));
  for (std::size_t k = 0; k < found.size(); ++k) {
    r.add("model." + std::to_string(k), to_string(found[k].worlds, sig));
    r.add("model." + std::to_string(k) + ".complete_fixpoint", bool_text(found[k].complete_fixpoint));
  }
  return r;
}

RunReport cmd_lp(std::string_view program_text, Embedding embedding, bool oracle, Engine engine) {
  RunReport r = start("lp", program_text);
  Signature sig;
  const LogicProgram program = parse_program(program_text, sig);
  const std::size_t n = sig.size();
  const Theory theory = embedding == Embedding::kAel1 ? ael1(program) : ael2(program);
  r.add("embedding", embedding == Embedding::kAel1 ? "ael1" : "ael2");
  r.add("engine", engine == Engine::kExplicit ? "explicit" : "sder");
  r.add("atoms", join_names(sig));

  ThreeValuedInterpretation projected;
  if (engine == Engine::kExplicit) {
    projected = projection(lfp_der(theory, n).fixpoint());
  } else {
    Prover prover;
    const SderTrace t = lfp_sder(theory, prover);
    EntailmentOracle queries(prover);
    ThreeFolValuation valuation(t.fixpoint(), queries);
    for (AtomId a = 0; a < n; ++a) projected.push_back(valuation.modal_atom(Formula::atom(a)));
    r.entailment_calls = prover.entailment_calls();
  }
  for (AtomId a = 0; a < n; ++a) r.add("value." + sig.name(a), std::string(to_string(projected[a])));
  if (!oracle) return r;

  const bool wfs = embedding == Embedding::kAel1;
  const ThreeValuedInterpretation reference = wfs ? well_founded(program, n) : fitting_kunen(program, n);
  r.add("oracle", wfs ? "well_founded" : "fitting_kunen");
  for (AtomId a = 0; a < n; ++a)
    r.add("oracle.value." + sig.name(a), std::string(to_string(reference[a])));
  r.add("verdict", reference == projected ? "AGREE" : "DISAGREE");

  const std::vector<Interpretation> expected = wfs ? stable_models(program, n) : supported_models(program, n);
  std::vector<Interpretation> from_fixpoints;
  for (const auto& w : complete_fixpoints(theory, n)) {
    Interpretation m = 0;
    const auto proj = projection(BeliefPair::complete(w));
    for (AtomId a = 0; a < n; ++a)
      if (proj[a] == TruthValue::kTrue) m |= Interpretation{1} << a;
    from_fixpoints.push_back(m);
  }
  std::sort(from_fixpoints.begin(), from_fixpoints.end());
  r.add(wfs ? "stable_models" : "supported_models", interpretations(expected, sig));
  r.add("complete_fixpoint_projections", interpretations(from_fixpoints, sig));
  r.add("models_verdict", expected == from_fixpoints ? "AGREE" : "DISAGREE");
  return r;
}

RunReport cmd_check(std::string_view theory_text) {
  RunReport r = start("check", theory_text);
  Signature sig;
  const Theory theory = parse_theory(theory_text, sig);
  const std::size_t n = sig.size();
  r.add("atoms", join_names(sig));

  Prover prover;
  const FixpointTrace explicit_trace = lfp_der(theory, n);
  SderOptions options;
  options.verify_invariants = true;
  const SderTrace sder_trace = lfp_sder(theory, prover, options);

  std::vector<Formula> probes;
  for (const auto& k : explicit_trace.literals) {
    probes.push_back(k.lhs());
    for (const auto& inner : top_level_modal_literals(k.lhs())) probes.push_back(inner.lhs());
  }

  bool all = true;
  auto verdict = [&](const std::string& key, bool ok) {
    r.add(key, ok ? "hold" : "FAIL");
    all = all && ok;
  };

  const std::size_t steps = std::max(explicit_trace.pairs.size(), sder_trace.theories.size());
  for (std::size_t k = 0; k < steps; ++k) {
    const BeliefPair& b = explicit_trace.pairs[std::min(k, explicit_trace.pairs.size() - 1)];
    const ThreeFolTheory& y = sder_trace.theories[std::min(k, sder_trace.theories.size() - 1)];
    const BeliefPair bel_y = bel(y, n);
    const std::string prefix = "check." + std::to_string(k) + ".";
    verdict(prefix + "iterate", b == bel_y);
    verdict(prefix + "bel_sder", bel(sder(theory, y, prover), n) == der(theory, bel_y));
    verdict(prefix + "der_instance", der(theory, b) == bel(instance_bp(theory, b), n));
    bool agree = true;
    for (const auto& g : probes)
      agree = agree && eval_modal_atom(bel_y, g) == eval_modal_atom_3fol(y, g, prover);
    verdict(prefix + "modal_atoms", agree);
  }
  const ThreeFolTheory lfp_instance = instance_bp(theory, explicit_trace.fixpoint());
  verdict("check.fixpoint.instance_is_sder_fixpoint", sder(theory, lfp_instance, prover) == lfp_instance);
  const BeliefPair bel_fix = bel(sder_trace.fixpoint(), n);
  verdict("check.fixpoint.bel_is_der_fixpoint", der(theory, bel_fix) == bel_fix);

  r.add("checked_steps", std::to_string(steps));
  r.add("result", all ? "all identities hold" : "identity violated");
  r.entailment_calls = prover.entailment_calls();
  if (!all) r.exit_code = kExitInternal;
  return r;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Engine engine_from(const std::string& name) {
  return name == "explicit" ? Engine::kExplicit : Engine::kSder;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-valued fixpoint reasoning for propositional autoepistemic logic", "ael"};
  app.require_subcommand(1);
  bool json = false;
  bool timing = false;
  app.add_flag("--json", json, "Print the report as JSON");
  app.add_flag("--timing", timing, "Include wall time in the report");

  const std::vector<std::string> engines{"explicit", "sder"};
  std::string file;
  std::string engine = "sder";
  bool trace = false;
  std::string formula;
  std::string embedding = "ael1";
  bool oracle = false;

  auto* lfp = app.add_subcommand("lfp", "Least fixpoint of the derivation operator");
  lfp->add_option("theory", file, "Theory file")->required();
  lfp->add_option("--engine", engine, "explicit or sder")->check(CLI::IsMember(engines));
  lfp->add_flag("--trace", trace, "Print every iteration");

  auto* query = app.add_subcommand("query", "Skeptical verdict for a formula");
  query->add_option("theory", file, "Theory file")->required();
  query->add_option("formula", formula, "Formula")->required();
  query->add_option("--engine", engine, "explicit or sder")->check(CLI::IsMember(engines));

  auto* expansions = app.add_subcommand("expansions", "Enumerate autoepistemic models (at most 4 atoms)");
  expansions->add_option("theory", file, "Theory file")->required();

  auto* lp = app.add_subcommand("lp", "Least fixpoint of an embedded logic program");
  lp->add_option("program", file, "Program file")->required();
  lp->add_option("--embedding", embedding, "ael1 or ael2")->check(CLI::IsMember({"ael1", "ael2"}));
  lp->add_flag("--oracle", oracle, "Compare with the reference semantics");
  lp->add_option("--engine", engine, "explicit or sder")->check(CLI::IsMember(engines));

  auto* check = app.add_subcommand("check", "Verify the operator bridge identities along the trace");
  check->add_option("theory", file, "Theory file")->required();

  for (auto* sub : {lfp, query, expansions, lp, check}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  const auto started = std::chrono::steady_clock::now();
  RunReport report;
  try {
    const std::string text = read_file(file);
    if (lfp->parsed()) {
      report = cmd_lfp(text, engine_from(engine), trace);
    } else if (query->parsed()) {
      report = cmd_query(text, formula, engine_from(engine));
    } else if (expansions->parsed()) {
      report = cmd_expansions(text);
    } else if (lp->parsed()) {
      report = cmd_lp(text, embedding == "ael1" ? Embedding::kAel1 : Embedding::kAel2, oracle,
                      engine_from(engine));
    } else {
      report = cmd_check(text);
    }
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << "error: cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const InternalError& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  if (timing) {
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  }
  out << (json ? report.to_json() : report.to_text());
  return report.exit_code;
}

}  // namespace ael
