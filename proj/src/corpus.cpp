#include <algorithm>

#include "glc/cli.hpp"
#include "glc/cohom.hpp"
#include "glc/error.hpp"
#include "glc/frobchar.hpp"
#include "glc/koszul.hpp"

namespace glc {

using nlohmann::json;

// Expected values come from sheaf cohomology on the projective model
// (Künneth for Segre products, Serre duality on curves), not from the engine.
// "lc" lists every nonzero (i, t, dim) inside "window".
const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"residue-field",
       "name = residue-field\nfield = Q\nvars = x, y\nweights = 1, 1\ngens = x, y\n",
       R"({"dim":0,"depth":0,"window":[-1,1],"lc":[[0,0,1]],"dubois":true,"stcm_hits":[]})"},
      {"fermat-cubic-cone",
       "name = fermat-cubic-cone\nfield = Q\nvars = x, y, z\nweights = 1, 1, 1\n"
       "gens = x^3 + y^3 + z^3\n",
       R"({"dim":2,"depth":2,"window":[-2,1],"lc":[[2,0,1],[2,-1,3],[2,-2,6]],
           "dubois":true,"stcm_hits":[],"hr":true,
           "fedder":{"5":false,"7":true,"11":false,"13":true},
           "finjective":{"5":false,"7":true}})"},
      {"skew-lines",
       "name = skew-lines\nfield = Q\nvars = x, y, z, w\nweights = 1, 1, 1, 1\n"
       "gens = x*z, x*w, y*z, y*w\n",
       R"({"dim":2,"depth":1,"window":[-2,1],"lc":[[1,0,1],[2,-2,2]],
           "dubois":true,"stcm_hits":[[1,0,1]],
           "fedder":{"2":true,"3":true,"5":true},"finjective":{"3":true}})"},
      {"pinched-quartic",
       "name = pinched-quartic\nfield = Q\nconstruction = semigroup-kernel\n"
       "target-vars = s, t\nimages = s^4, s^3*t, s*t^3, t^4\n",
       R"({"dim":2,"depth":1,"window":[-3,2],"lc":[[1,1,1],[2,-1,3],[2,-2,7],[2,-3,11]],
           "dubois":false,"stcm_hits":[]})"},
      {"twisted-cubic",
       "name = twisted-cubic\nfield = Q\nconstruction = semigroup-kernel\n"
       "target-vars = s, t\nimages = s^3, s^2*t, s*t^2, t^3\n",
       R"({"dim":2,"depth":2,"window":[-2,1],"lc":[[2,-1,2],[2,-2,5]],
           "dubois":true,"stcm_hits":[]})"},
      {"conic-veronese",
       "name = conic-veronese\nfield = Q\nconstruction = veronese\nbase-vars = s, t\ndegree = 2\n",
       R"({"dim":2,"depth":2,"window":[-2,1],"lc":[[2,-1,1],[2,-2,3]],
           "dubois":true,"stcm_hits":[]})"},
      {"weighted-cusp-cone",
       "name = weighted-cusp-cone\nfield = Q\nvars = x, y, z\nweights = 1, 2, 3\n"
       "gens = x^6 + y^3 + z^2\n",
       R"({"dim":2,"depth":2,"window":[-3,1],"lc":[[2,0,1],[2,-1,1],[2,-2,2],[2,-3,3]],
           "dubois":true,"stcm_hits":[]})"},
      {"elliptic-times-line",
       "name = elliptic-times-line\nfield = Q\nconstruction = segre\n"
       "factor1-vars = x, y, z\nfactor1-gens = x^3 + y^3 + z^3\nfactor2-vars = a, b\n",
       R"({"dim":3,"depth":2,"window":[-3,1],"lc":[[2,0,1],[3,-2,6],[3,-3,18]],
           "dubois":true,"stcm_hits":[[2,0,1]]})"},
      {"elliptic-times-plane",
       "name = elliptic-times-plane\nfield = Q\nconstruction = segre\n"
       "factor1-vars = x, y, z\nfactor1-gens = x^3 + y^3 + z^3\nfactor2-vars = a, b, c\n",
       R"({"dim":4,"depth":2,"window":[-4,1],"lc":[[2,0,1],[4,-3,9],[4,-4,36]],
           "dubois":true,"stcm_hits":[[2,0,1]],"hr":true})"},
  };
  return entries;
}

namespace {

json triples(const std::vector<DegreeEntry>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back({e.i, e.t, e.dim});
  return out;
}

json sorted(const json& a) {
  auto rows = a.get<std::vector<std::vector<long long>>>();
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

json run_corpus_entry(const CorpusEntry& entry) {
  const json expect = json::parse(entry.expect);
  json checks = json::array();
  bool ok = true;
  auto check = [&](const std::string& name, const json& expected, const json& actual) {
    const bool good = expected == actual;
    ok = ok && good;
    checks.push_back({{"check", name}, {"expected", expected}, {"actual", actual}, {"ok", good}});
  };
  try {
    const RingFile file = parse_ring_file(entry.ring);
    const ExtComputation ext(build_ideal(file));
    check("dim", expect["dim"], ext.dimension());
    check("depth", expect["depth"], depth(ext));

    const std::pair<int, int> window{expect["window"][0].get<int>(), expect["window"][1].get<int>()};
    const LocalCohomologyTable tab = local_cohomology_table(ext, window);
    json lc = json::array();
    for (const auto& [key, v] : tab.dims) {
      if (key.second >= window.first && key.second <= window.second) {
        lc.push_back({key.first, key.second, v});
      }
    }
    check("lc", sorted(expect["lc"]), sorted(lc));
    check("dubois", expect["dubois"], du_bois_graded_criterion(ext).satisfied);
    check("stcm_hits", sorted(expect["stcm_hits"]),
          sorted(triples(set_theoretic_cm_obstruction(ext, window).hits)));

    if (expect.contains("hr")) {
      const ParameterSequence x = find_hsop(ext.ideal());
      check("hr", expect["hr"], hochster_roberts_check(ext, x).all_equal);
    }
    for (const char* key : {"fedder", "finjective"}) {
      if (!expect.contains(key)) continue;
      json actual = json::object();
      for (const auto& [p, v] : expect[key].items()) {
        const FrobeniusContext ctx(build_ideal(file, FieldSpec::prime(std::stoul(p))));
        actual[p] = std::string(key) == "fedder" ? fedder_fpure(ctx).fpure
                                                 : f_injective_check(ctx).injective;
      }
      check(key, expect[key], actual);
    }
  } catch (const Error& e) {
    ok = false;
    checks.push_back({{"check", "run"}, {"error", e.what()}, {"ok", false}});
  }
  return {{"name", entry.name}, {"ok", ok}, {"checks", checks}};
}

}  // namespace glc
