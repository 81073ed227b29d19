// Batch commands behind the `ael` executable.
//
// Every command returns a RunReport. The text rendering is one key=value
// pair per line, in a fixed order, and is byte-identical across runs unless
// timing is requested. See README.md for the keys.

#ifndef AEL_CLI_H_
#define AEL_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ael {

enum class Engine { kExplicit, kSder };
enum class Embedding { kAel1, kAel2 };

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kExitInternal = 3;

struct RunReport {
  std::string command;
  std::string input_digest;
  // Ordered payload; trace lines are part of it when requested.
  std::vector<std::pair<std::string, std::string>> fields;
  std::uint64_t entailment_calls = 0;
  std::optional<double> wall_ms;
  int exit_code = kExitOk;

  void add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  // First value stored under `key`, or nullopt.
  std::optional<std::string> get(std::string_view key) const;

  std::string to_text() const;
  std::string to_json() const;
};

// 64-bit FNV-1a of the input bytes, as "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view text);

RunReport cmd_lfp(std::string_view theory_text, Engine engine, bool trace);
RunReport cmd_query(std::string_view theory_text, std::string_view formula_text, Engine engine);
RunReport cmd_expansions(std::string_view theory_text);
RunReport cmd_lp(std::string_view program_text, Embedding embedding, bool oracle, Engine engine);
RunReport cmd_check(std::string_view theory_text);

// Full command line, including argv[0]. Writes the report to `out` and
// diagnostics to `err`; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ael

#endif  // AEL_CLI_H_
