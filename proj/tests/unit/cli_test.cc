#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ael/cli.h"
#include "ael/worlds.h"
#include "doctest.h"
#include "json.hpp"

namespace ael {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ael");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(AEL_TEST_DATA) + "/" + name; }

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

TEST_CASE("input digest") {
  CHECK(input_digest("") == "fnv1a64:cbf29ce484222325");
  CHECK(input_digest("a") == "fnv1a64:af63dc4c8601ec8c");
}

TEST_CASE("report accessors and rendering") {
  RunReport r;
  r.command = "lfp";
  r.input_digest = "fnv1a64:0";
  r.add("x", "1");
  r.add("x", "2");
  CHECK(r.get("x") == "1");
  CHECK(r.get("y") == std::nullopt);
  CHECK(r.to_text() == "command=lfp\ninput=fnv1a64:0\nx=1\nx=2\nentailment_calls=0\n");
  r.wall_ms = 1.5;
  CHECK(has_line(r.to_text(), "wall_ms=1.5"));
}

TEST_CASE("lfp on the first example") {
  const Run e = run({"lfp", data("example1.ael"), "--engine=explicit"});
  CHECK(e.code == kExitOk);
  CHECK(has_line(e.out, "iterations=2"));
  CHECK(has_line(e.out, "fixpoint=P={¬p¬q, p¬q, ¬pq, pq} S={¬p¬q, p¬q, ¬pq, pq}"));
  CHECK(has_line(e.out, "complete=true"));

  const Run s = run({"lfp", data("example1.ael"), "--engine=sder", "--trace"});
  CHECK(s.code == kExitOk);
  CHECK(has_line(s.out, "value.K(p)=f"));
  CHECK(has_line(s.out, "theory={$f -> q}"));
  CHECK(has_line(s.out, "step.0={$u}"));
  CHECK(has_line(s.out, "entailment_calls=2"));

  const Run empty = run({"lfp", data("empty.ael"), "--engine=explicit"});
  CHECK(has_line(empty.out, "iterations=1"));
  CHECK(has_line(empty.out, "fixpoint=P={()} S={()}"));
}

TEST_CASE("query verdicts") {
  CHECK(has_line(run({"query", data("example1.ael"), "q"}).out, "verdict=f"));
  CHECK(has_line(run({"query", data("stratified.ael"), "q"}).out, "verdict=t"));
  CHECK(has_line(run({"query", data("empty.ael"), "p", "--engine=explicit"}).out, "verdict=f"));
  CHECK(has_line(run({"query", data("empty.ael"), "p"}).out, "verdict=f"));
  CHECK(run({"query", data("example1.ael"), "q &"}).code == kExitParse);
}

TEST_CASE("expansions") {
  const Run r = run({"expansions", data("two_exp.ael")});
  CHECK(r.code == kExitOk);
  CHECK(has_line(r.out, "models=2"));
  CHECK(has_line(r.out, "model.0={p¬q, pq}"));
  CHECK(has_line(r.out, "model.1={¬pq, pq}"));
}

TEST_CASE("logic programs") {
  const Run r = run({"lp", data("wfs1.lp"), "--embedding=ael1", "--oracle"});
  CHECK(r.code == kExitOk);
  CHECK(has_line(r.out, "value.a=t"));
  CHECK(has_line(r.out, "value.b=f"));
  CHECK(has_line(r.out, "verdict=AGREE"));
  CHECK(has_line(r.out, "models_verdict=AGREE"));
  CHECK(has_line(run({"lp", data("wfs1.lp"), "--embedding=ael2", "--oracle", "--engine=explicit"}).out,
                 "verdict=AGREE"));
}

TEST_CASE("bridge check") {
  const Run r = run({"check", data("example1.ael")});
  CHECK(r.code == kExitOk);
  CHECK(has_line(r.out, "checked_steps=3"));
  CHECK(has_line(r.out, "result=all identities hold"));
}

TEST_CASE("repeated runs are byte-identical") {
  for (const char* engine : {"--engine=explicit", "--engine=sder"}) {
    const Run a = run({"lfp", data("two_exp.ael"), engine, "--trace"});
    const Run b = run({"lfp", data("two_exp.ael"), engine, "--trace"});
    CHECK(a.out == b.out);
  }
  CHECK(run({"check", data("two_exp.ael")}).out == run({"check", data("two_exp.ael")}).out);
}

TEST_CASE("json and timing") {
  const Run r = run({"--json", "lfp", data("example1.ael")});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "lfp");
  CHECK(j["fields"]["iterations"] == "2");
  CHECK(j["entailment_calls"] == 2);
  CHECK_FALSE(j.contains("wall_ms"));
  const Run t = run({"lfp", data("example1.ael"), "--timing"});
  CHECK(t.out.find("wall_ms=") != std::string::npos);
}

TEST_CASE("exit codes") {
  const Run bad = run({"lfp", data("bad_syntax.ael")});
  CHECK(bad.code == kExitParse);
  CHECK(bad.err.find("1:9") != std::string::npos);
  CHECK(run({"lfp", data("missing.ael")}).code == kExitParse);
  CHECK(run({"nonsense"}).code == kExitParse);
  CHECK(run({}).code == kExitParse);
  CHECK(run({"lfp", data("example1.ael"), "--engine=fast"}).code == kExitParse);
  CHECK(run({"expansions", data("five_atoms.ael")}).code == kExitCap);

  const std::size_t saved = atom_cap();
  set_atom_cap(3);
  CHECK(run({"lfp", data("five_atoms.ael"), "--engine=explicit"}).code == kExitCap);
  // The 3-FOL engine needs no explicit sets; only the summary lines are skipped.
  const Run sder = run({"lfp", data("five_atoms.ael")});
  CHECK(sder.code == kExitOk);
  CHECK(sder.out.find("fixpoint=") == std::string::npos);
  set_atom_cap(saved);
}

}  // namespace
}  // namespace ael
