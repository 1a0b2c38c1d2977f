#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "glc/ringfile.hpp"

namespace glc {

inline constexpr const char* kEngineVersion = "0.1.0";

enum ExitCode { kSuccess = 0, kNegative = 1, kInputError = 2, kResourceCap = 3 };

struct CommandOptions {
  std::string command;
  std::optional<std::pair<int, int>> window;
  std::vector<unsigned> primes;
  std::vector<unsigned> powers;
  bool frobenius = false;
  std::optional<int> min_degree;
  std::uint64_t seed = 0;
  std::optional<std::string> element;
  unsigned e = 1;
  std::size_t max_strand_dim = 5000;
  std::size_t max_pairs = 1'000'000;
  bool timing = false;
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kSuccess;
};

/// Commands: lc-table, depth, dim, betti, dubois-criterion, vanishing,
/// ext-inject, koszul-check, stcm-obstruction, fedder, finjective, deform,
/// corpus. `ring` may be null only for corpus. Engine errors become a report
/// with an "error" object and exit code 2 (input) or 3 (resource cap).
CommandResult run_command(const CommandOptions& options, const RingFile* ring);

/// Aligned plain-text rendering of a report.
std::string render_pretty(const nlohmann::json& report);

/// "lo:hi" -> pair; throws DomainError.
std::pair<int, int> parse_window(const std::string& text);
/// "5,7,11" -> list; throws DomainError.
std::vector<unsigned> parse_unsigned_list(const std::string& text);

struct CorpusEntry {
  std::string name;
  std::string ring;    // ring-file text
  std::string expect;  // JSON object of expected values
};

/// Built-in examples with independently derived expectations.
const std::vector<CorpusEntry>& corpus();

/// Runs one entry: {"name", "ok", "checks": [{"check", "expected", "actual", "ok"}]}.
nlohmann::json run_corpus_entry(const CorpusEntry& entry);

}  // namespace glc
