#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "glc/cli.hpp"
#include "glc/constructions.hpp"
#include "glc/error.hpp"
#include "support.hpp"

using namespace glc;
using nlohmann::json;

namespace {

RingFile parse(const std::string& text) { return parse_ring_file(text); }

ParseError parse_error(const std::string& text, bool build = false) {
  try {
    const RingFile f = parse_ring_file(text);
    if (build) build_ideal(f);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError("", 0, 0);
}

CommandResult run(const std::string& command, const std::string& ring_text,
                  CommandOptions o = {}) {
  o.command = command;
  const RingFile f = parse(ring_text);
  return run_command(o, &f);
}

const char* kFermat = "field = Q\nvars = x, y, z\ngens = x^3 + y^3 + z^3\n";
const char* kSkew = "field = Q\nvars = x, y, z, w\ngens = x*z, x*w, y*z, y*w\n";

// Random ring files: random key order, spacing, comments and list layout.
std::string random_ring_text(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nv(1, 4), coin(0, 1), deg(1, 3), coef(-4, 4);
  const int n = nv(rng);
  const char* names[] = {"a", "b", "c", "d"};
  std::vector<std::string> lines;
  std::string vars, weights, gens;
  for (int i = 0; i < n; ++i) {
    vars += std::string(i ? (coin(rng) ? "," : " ,  ") : "") + names[i];
    weights += std::string(i ? "," : "") + "1";
  }
  const int ng = deg(rng);
  for (int g = 0; g < ng; ++g) {
    const int t = deg(rng);
    std::string poly;
    for (int i = 0; i < n; ++i) {
      const int c = coef(rng);
      if (c == 0) continue;
      poly += (poly.empty() ? "" : " + ") + std::to_string(c) + "*" + names[i] + "^" +
              std::to_string(t);
    }
    if (poly.empty()) poly = std::string(names[0]) + "^" + std::to_string(t);
    gens += (g ? ", " : "") + poly;
  }
  lines.push_back("vars =" + std::string(coin(rng) ? " " : "   ") + vars);
  lines.push_back("gens = " + gens);
  lines.push_back(coin(rng) ? "field = Q" : "field = Fp:101");
  if (coin(rng)) lines.push_back("weights = " + weights);
  if (coin(rng)) lines.push_back("name = r" + std::to_string(n));
  std::shuffle(lines.begin(), lines.end(), rng);
  std::string text;
  for (const auto& l : lines) {
    if (coin(rng)) text += "# comment\n";
    text += (coin(rng) ? "  " : "") + l + "\n";
  }
  return text;
}

}  // namespace

TEST(RingFile, SerializeRoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string text = random_ring_text(rng);
    const RingFile f = parse(text);
    const std::string once = serialize_ring_file(f);
    const RingFile g = parse(once);
    EXPECT_EQ(serialize_ring_file(g), once) << text;
    const Ideal a = build_ideal(f), b = build_ideal(g);
    EXPECT_TRUE(a.contains(b) && b.contains(a)) << text;
    EXPECT_EQ(a.ring()->variables(), b.ring()->variables());
  }
}

TEST(RingFile, CommentsAndDefaults) {
  const RingFile f = parse("# header\nfield = Fp:7   # trailing\n\nvars = x, y\ngens = x*y\n");
  EXPECT_EQ(f.get("field").value(), "Fp:7");
  const Ideal I = build_ideal(f);
  EXPECT_EQ(I.ring()->field().characteristic(), 7u);
  EXPECT_EQ(I.ring()->weights(), (std::vector<int>{1, 1}));
}

TEST(RingFile, ErrorPositions) {
  ParseError e = parse_error("field = Q\nvars = x\nvars = y\n");
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.column(), 1);

  e = parse_error("field = Q\n  bogus = 1\n");
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 3);

  e = parse_error("vars = x\n");
  EXPECT_NE(std::string(e.what()).find("field"), std::string::npos);

  e = parse_error("field = Q\nvars = x, y\nweights = 0, 1\n", true);
  EXPECT_EQ(e.line(), 3);

  e = parse_error("field = Q\nvars = x, y\ngens = x*y, x^2 + y\n", true);
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.column(), 13);
  EXPECT_NE(std::string(e.what()).find("not homogeneous"), std::string::npos);

  e = parse_error("field = Q\nvars = x, y\ngens = x*q\n", true);
  EXPECT_EQ(e.line(), 3);
  EXPECT_GE(e.column(), 8);

  e = parse_error("field = Fp:6\nvars = x\n", true);
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 9);

  e = parse_error("field = Q\nconstruction = blowup\nvars = x\n", true);
  EXPECT_EQ(e.line(), 2);
}

TEST(RingFile, WeightedGradingAccepted) {
  const Ideal I = build_ideal(parse("field = Q\nvars = x, y, z\nweights = 1, 2, 3\n"
                                    "gens = x^6 + y^3 + z^2\n"));
  EXPECT_EQ(I.ring()->weights(), (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(I.is_homogeneous());
}

TEST(RingFile, SemigroupKernelMatchesDirectKernel) {
  const Ideal from_file = build_ideal(parse("field = Q\nconstruction = semigroup-kernel\n"
                                            "target-vars = s, t\n"
                                            "images = s^4, s^3*t, s*t^3, t^4\n"));
  const Ideal direct = semigroup_ring(FieldSpec::rationals(), {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
  EXPECT_EQ(from_file.ring()->variables(), direct.ring()->variables());
  EXPECT_TRUE(from_file.contains(direct) && direct.contains(from_file));
  // Hand check: the binomials vanish on (s^4, s^3 t, s t^3, t^4).
  const RingPtr r = from_file.ring();
  for (const char* f : {"x1*x2 - x0*x3", "x1^3 - x0^2*x2", "x2^3 - x1*x3^2"}) {
    EXPECT_TRUE(from_file.contains(support::poly(r, f))) << f;
  }
  EXPECT_FALSE(from_file.contains(support::poly(r, "x0*x3 - x1^2")));
}

TEST(Cli, WindowAndListParsing) {
  EXPECT_EQ(parse_window("-3:2"), std::make_pair(-3, 2));
  EXPECT_EQ(parse_window("0:0"), std::make_pair(0, 0));
  for (const char* bad : {"3:1", "1", "a:b", "1:2x", ""}) {
    EXPECT_THROW(parse_window(bad), DomainError) << bad;
  }
  EXPECT_EQ(parse_unsigned_list("5,7,11"), (std::vector<unsigned>{5, 7, 11}));
  for (const char* bad : {"", "5,,7", "-3", "x"}) {
    EXPECT_THROW(parse_unsigned_list(bad), DomainError) << bad;
  }
}

TEST(Cli, ReportHeaderAndDeterminism) {
  CommandOptions o;
  o.window = std::make_pair(-2, 1);
  const CommandResult a = run("lc-table", kFermat, o), b = run("lc-table", kFermat, o);
  EXPECT_EQ(a.report.dump(), b.report.dump());
  EXPECT_EQ(a.report["schema"], 1);
  EXPECT_EQ(a.report["engine"], std::string("glc ") + kEngineVersion);
  EXPECT_EQ(a.report["ring"]["field"], "Q");
  EXPECT_FALSE(a.report.contains("timing_ms"));
  o.timing = true;
  EXPECT_TRUE(run("lc-table", kFermat, o).report.contains("timing_ms"));

  const json& res = a.report["result"];
  EXPECT_EQ(res["dim"], 2);
  json expected = json::array({{{"dim", 6}, {"i", 2}, {"t", -2}},
                               {{"dim", 3}, {"i", 2}, {"t", -1}},
                               {{"dim", 1}, {"i", 2}, {"t", 0}}});
  EXPECT_EQ(res["entries"], expected);
}

TEST(Cli, KoszulCheckIsSeedDeterministic) {
  CommandOptions o;
  o.seed = 11;
  const CommandResult a = run("koszul-check", kFermat, o), b = run("koszul-check", kFermat, o);
  EXPECT_EQ(a.report.dump(), b.report.dump());
  EXPECT_EQ(a.exit_code, kSuccess);
  EXPECT_EQ(a.report["seed"], 11);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("depth", kSkew).exit_code, kSuccess);
  EXPECT_EQ(run("dubois-criterion", kSkew).exit_code, kSuccess);
  EXPECT_EQ(run("stcm-obstruction", kSkew).exit_code, kNegative);
  CommandOptions p;
  p.primes = {5};
  EXPECT_EQ(run("fedder", kFermat, p).exit_code, kNegative);
  p.primes = {7};
  EXPECT_EQ(run("fedder", kFermat, p).exit_code, kSuccess);
  EXPECT_EQ(run("fedder", kFermat).exit_code, kInputError);  // no prime in char 0
  EXPECT_EQ(run("ext-inject", kFermat).exit_code, kInputError);
  EXPECT_EQ(run("deform", kFermat, p).exit_code, kInputError);
  CommandOptions inhomogeneous = p;
  inhomogeneous.element = "z + 1";
  EXPECT_EQ(run("deform", kFermat, inhomogeneous).exit_code, kInputError);
  EXPECT_EQ(run("no-such-command", kFermat).exit_code, kInputError);
  EXPECT_EQ(run_command({.command = "depth"}, nullptr).exit_code, kInputError);

  CommandOptions capped;
  capped.max_strand_dim = 2;
  const CommandResult r = run("koszul-check", kFermat, capped);
  EXPECT_EQ(r.exit_code, kResourceCap);
  EXPECT_EQ(r.report["error"]["cap"], "max-strand-dim");

  CommandOptions pairs;
  pairs.max_pairs = 1;
  const CommandResult q = run("depth", kSkew, pairs);
  EXPECT_EQ(q.exit_code, kResourceCap);
  set_default_max_pairs(1'000'000);

  const CommandResult bad = run("depth", "field = Q\nvars = x\ngens = x + 1\n");
  EXPECT_EQ(bad.exit_code, kInputError);
  EXPECT_EQ(bad.report["error"]["kind"], "parse");
  EXPECT_EQ(bad.report["error"]["line"], 3);
}

TEST(Cli, FedderSweepKeepsInputOrder) {
  CommandOptions o;
  o.primes = {13, 5, 11, 7};
  const CommandResult r = run("fedder", kFermat, o);
  std::vector<std::pair<unsigned, bool>> got;
  for (const auto& row : r.report["result"]["primes"]) {
    got.emplace_back(row["p"].get<unsigned>(), row["fpure"].get<bool>());
  }
  // x^3 + y^3 + z^3 is F-pure exactly when p = 1 mod 3.
  EXPECT_EQ(got, (std::vector<std::pair<unsigned, bool>>{{13, true}, {5, false}, {11, false}, {7, true}}));
  EXPECT_EQ(r.exit_code, kNegative);
}

TEST(Cli, DeformReportsBothLegs) {
  CommandOptions o;
  o.primes = {7};
  o.element = "z";
  const CommandResult r = run("deform", "field = Q\nvars = x, y, z\ngens = x*y\n", o);
  const json& row = r.report["result"]["primes"][0];
  EXPECT_EQ(row["deformation"]["pass"], true);
  EXPECT_EQ(row["fpure"], true);
  EXPECT_EQ(r.exit_code, kSuccess);
}

TEST(Cli, PrettyHasNoTrailingSpaces) {
  CommandOptions o;
  o.primes = {5, 7};
  const std::string text = render_pretty(run("fedder", kFermat, o).report);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    EXPECT_TRUE(line.empty() || line.back() != ' ') << line;
  }
  EXPECT_NE(text.find("fpure"), std::string::npos);
}

TEST(Corpus, EveryEntryMatches) {
  for (const auto& e : corpus()) {
    const json r = run_corpus_entry(e);
    EXPECT_TRUE(r["ok"].get<bool>()) << r.dump(2);
  }
}

TEST(Corpus, DataFilesMatchEntries) {
  for (const auto& e : corpus()) {
    std::ifstream in(std::string(GLC_DATA_DIR) + "/" + e.name + ".ring");
    ASSERT_TRUE(in) << e.name;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(serialize_ring_file(parse(ss.str())), serialize_ring_file(parse(e.ring))) << e.name;
  }
}
