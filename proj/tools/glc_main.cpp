#include <iostream>

#include <CLI11.hpp>

#include "glc/cli.hpp"
#include "glc/error.hpp"

namespace {

struct Raw {
  std::string ring;
  std::string window;
  std::string primes;
  std::string powers;
  bool frobenius = false;
  std::optional<int> min_degree;
  std::uint64_t seed = 0;
  std::string element;
  unsigned e = 1;
  std::size_t max_strand_dim = 5000;
  std::size_t max_pairs = 1'000'000;
  bool timing = false;
  bool pretty = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"glc: graded local cohomology and singularity diagnostics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("glc ") + glc::kEngineVersion);
  Raw raw;

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"lc-table", "dimensions of [H^i_m(R)]_t"},
      {"depth", "depth, dimension and projective dimension"},
      {"dim", "Krull dimension"},
      {"betti", "graded Betti numbers of a minimal resolution"},
      {"dubois-criterion", "[H^i_m(R)]_t = 0 for i >= 1 and t > 0"},
      {"vanishing", "[H^i_m(R)]_t = 0 for t < 0 at finite-length indices"},
      {"ext-inject", "injectivity of Ext(R, A) -> Ext(A/J, A) for J = I^t or I^[q]"},
      {"koszul-check", "Koszul cohomology of a parameter system against local cohomology"},
      {"stcm-obstruction", "nonzero [H^i_m(R)]_t with i < dim R and t <= 0"},
      {"fedder", "F-purity by Fedder's criterion"},
      {"finjective", "F-injectivity via the trace map on Ext"},
      {"deform", "F-injectivity of R/xR and injectivity of x on Ext"},
      {"corpus", "run the built-in examples against their expected values"},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    const std::string name = s.name;
    if (name != "corpus") sub->add_option("ring", raw.ring, "ring file")->required();
    sub->add_flag("--pretty", raw.pretty, "aligned text instead of JSON");
    sub->add_flag("--timing", raw.timing, "include wall time in the report");
    sub->add_option("--max-pairs", raw.max_pairs, "Gröbner pair cap");
    if (name == "lc-table" || name == "stcm-obstruction") {
      sub->add_option("--window", raw.window, "degree range lo:hi");
    }
    if (name == "ext-inject") {
      sub->add_option("--power", raw.powers, "ordinary powers t, comma separated");
      sub->add_flag("--frobenius", raw.frobenius, "use I^[p^e]");
      sub->add_option("--min-degree", raw.min_degree, "ignore kernel below this Ext degree");
    }
    if (name == "ext-inject" || name == "fedder" || name == "finjective" || name == "deform") {
      sub->add_option("-p,--primes", raw.primes, "primes, comma separated");
    }
    if (name == "ext-inject" || name == "finjective" || name == "deform") {
      sub->add_option("--e", raw.e, "Frobenius exponent")->check(CLI::PositiveNumber);
    }
    if (name == "koszul-check") {
      sub->add_option("--seed", raw.seed, "seed for the parameter search");
      sub->add_option("--max-strand-dim", raw.max_strand_dim, "largest Koszul strand piece");
    }
    if (name == "deform") sub->add_option("--element", raw.element, "the element x")->required();
  }

  CLI11_PARSE(app, argc, argv);

  glc::CommandOptions o;
  o.command = app.get_subcommands().front()->get_name();
  o.frobenius = raw.frobenius;
  o.min_degree = raw.min_degree;
  o.seed = raw.seed;
  o.e = raw.e;
  o.max_strand_dim = raw.max_strand_dim;
  o.max_pairs = raw.max_pairs;
  o.timing = raw.timing;
  if (!raw.element.empty()) o.element = raw.element;

  glc::CommandResult result;
  std::optional<glc::RingFile> ring;
  try {
    if (!raw.window.empty()) o.window = glc::parse_window(raw.window);
    if (!raw.primes.empty()) o.primes = glc::parse_unsigned_list(raw.primes);
    if (!raw.powers.empty()) o.powers = glc::parse_unsigned_list(raw.powers);
    if (!raw.ring.empty()) ring = glc::read_ring_file(raw.ring);
    result = glc::run_command(o, ring ? &*ring : nullptr);
  } catch (const glc::ParseError& e) {
    result.report = {{"error", {{"kind", "parse"}, {"message", e.what()}, {"line", e.line()},
                                {"column", e.column()}}}};
    result.exit_code = glc::kInputError;
  } catch (const glc::Error& e) {
    result.report = {{"error", {{"kind", "input"}, {"message", e.what()}}}};
    result.exit_code = glc::kInputError;
  }
  std::cout << (raw.pretty ? glc::render_pretty(result.report) : result.report.dump(2) + "\n");
  if (result.report.contains("error")) {
    std::cerr << "glc: " << result.report["error"]["message"].get<std::string>() << '\n';
  }
  return result.exit_code;
}
