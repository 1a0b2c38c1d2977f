#include "glc/cli.hpp"

#include <chrono>
#include <future>
#include <iomanip>
#include <sstream>

#include "glc/cohom.hpp"
#include "glc/error.hpp"
#include "glc/frobchar.hpp"
#include "glc/koszul.hpp"

namespace glc {

using nlohmann::json;

namespace {

json ring_header(const Ideal& I) {
  const RingPtr& r = I.ring();
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(g.to_string());
  return {{"field", r->field().to_string()},
          {"vars", r->variables()},
          {"weights", r->weights()},
          {"gens", gens}};
}

json entries_json(const std::vector<DegreeEntry>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back({{"i", e.i}, {"t", e.t}, {"dim", e.dim}});
  return out;
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::vector<std::string> unverified(const std::string& command) {
  if (command == "dubois-criterion") {
    return {"the criterion is necessary for Du Bois singularities; the Du Bois property itself "
            "is not verified"};
  }
  if (command == "vanishing") {
    return {"vanishing is expected for Du Bois or F-injective rings; neither property is "
            "verified here"};
  }
  if (command == "koszul-check") {
    return {"equidimensional", "Cohen-Macaulay on the punctured spectrum",
            "F-injective or Du Bois"};
  }
  if (command == "stcm-obstruction") {
    return {"a hit obstructs set-theoretic Cohen-Macaulayness; no hit proves nothing",
            "infinite-length indices are scanned only inside the window"};
  }
  if (command == "fedder" || command == "finjective" || command == "deform") {
    return {"verdicts hold for the listed primes only; nothing is claimed about dense type"};
  }
  return {};
}

std::vector<unsigned> primes_for(const CommandOptions& o, const RingFile& file) {
  if (!o.primes.empty()) return o.primes;
  const FieldSpec f = FieldSpec::parse(file.get("field").value_or("Q"));
  if (f.characteristic() == 0) {
    throw DomainError("command '" + o.command + "' needs -p or a ring over Fp:<p>");
  }
  return {f.characteristic()};
}

// Runs fn(p) for every prime on its own task; results keep the input order.
template <typename Fn>
json per_prime(const std::vector<unsigned>& primes, Fn fn) {
  std::vector<std::future<json>> jobs;
  for (unsigned p : primes) jobs.push_back(std::async(std::launch::async, fn, p));
  json out = json::array();
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

Ideal over_prime(const RingFile& file, unsigned p) { return build_ideal(file, FieldSpec::prime(p)); }

json lc_table(const ExtComputation& ext, const CommandOptions& o) {
  const LocalCohomologyTable tab = local_cohomology_table(ext, o.window);
  json indices = json::array();
  for (const auto& idx : tab.indices) {
    json row = {{"i", idx.i}, {"zero", idx.zero}};
    if (!idx.zero) {
      row["finite_length"] = idx.finite_length;
      row["t_low"] = idx.t_low;
      row["t_high"] = idx.t_high;
      row["complete_below"] = idx.zero_below;
      row["complete_above"] = idx.zero_above;
    }
    indices.push_back(row);
  }
  json entries = json::array();
  for (const auto& [key, v] : tab.dims) {
    entries.push_back({{"i", key.first}, {"t", key.second}, {"dim", v}});
  }
  return {{"n", tab.n},          {"d", tab.d},           {"dim", ext.dimension()},
          {"depth", depth(ext)}, {"indices", indices},   {"entries", entries}};
}

json injectivity_rows(const std::vector<ExtMap>& maps, const ExtComputation& ext,
                      const std::optional<int>& min_degree, bool& all) {
  json rows = json::array();
  for (const auto& f : maps) {
    if (f.source->is_zero()) continue;
    const InjectivityResult r = is_injective(f, min_degree);
    all = all && r.injective;
    json row = {{"j", f.j}, {"i", ext.n() - f.j}, {"injective", r.injective}};
    if (r.witness) {
      row["witness"] = {{"degree", *r.witness_degree},
                        {"element", vec::to_string(*r.witness, *ext.ring())}};
    }
    rows.push_back(row);
  }
  return rows;
}

json finjective_json(const FInjectivityReport& rep, const RingPtr& ring) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json row = {{"j", e.j}, {"i", e.i}, {"injective", e.injective}};
    if (!e.injective) {
      row["s"] = optional_int(e.s);
      row["t"] = optional_int(e.t);
      row["target_dim"] = e.target_dim;
      row["image_rank"] = e.image_rank;
      row["witness"] = e.witness ? json(vec::to_string(*e.witness, *ring)) : json(nullptr);
    }
    entries.push_back(row);
  }
  return {{"q", rep.q}, {"finjective", rep.injective}, {"entries", entries}};
}

CommandResult dispatch(const CommandOptions& o, const RingFile& file) {
  CommandResult out;
  json& rep = out.report;
  CohomOptions copts;
  const std::string& cmd = o.command;

  if (cmd == "fedder" || cmd == "finjective" || cmd == "deform") {
    if (cmd == "deform" && !o.element) throw DomainError("deform needs --element");
    const std::vector<unsigned> primes = primes_for(o, file);
    rep["ring"] = ring_header(over_prime(file, primes.front()));
    bool all = true;
    const json rows = per_prime(primes, [&](unsigned p) {
      const FrobeniusContext ctx(over_prime(file, p), copts);
      json row = {{"p", p}};
      if (cmd == "fedder") {
        const FedderResult f = fedder_fpure(ctx);
        row["fpure"] = f.fpure;
        row["witness"] = f.witness ? json(f.witness->to_string()) : json(nullptr);
      } else if (cmd == "finjective") {
        row.update(finjective_json(f_injective_check(ctx, o.e), ctx.ring()));
      } else {
        const Polynomial x = parse_polynomial(ctx.ring(), *o.element);
        const DeformationReport d = deformation_check(ctx, x, o.e);
        row["element"] = x.to_string();
        row["fpure"] = fedder_fpure(ctx).fpure;
        row["finjective"] = f_injective_check(ctx, o.e).injective;
        row["deformation"] = {{"leg1", d.leg1},
                              {"leg2", d.leg2},
                              {"pass", d.pass},
                              {"degenerate", d.degenerate},
                              {"conclusion", d.conclusion}};
        json witnesses = json::array();
        if (d.leg1_detail) {
          for (const auto& e : d.leg1_detail->entries) {
            if (!e.injective && e.witness) {
              witnesses.push_back({{"leg", 1}, {"j", e.j}, {"t", optional_int(e.t)},
                                   {"element", vec::to_string(*e.witness, *ctx.ring())}});
            }
          }
        }
        for (const auto& e : d.leg2_detail) {
          if (!e.injective && e.witness) {
            witnesses.push_back({{"leg", 2}, {"j", e.j}, {"degree", optional_int(e.witness_degree)},
                                 {"element", vec::to_string(*e.witness, *ctx.ring())}});
          }
        }
        row["witnesses"] = witnesses;
      }
      return row;
    });
    for (const auto& row : rows) {
      if (cmd == "fedder") all = all && row["fpure"].get<bool>();
      if (cmd == "finjective") all = all && row["finjective"].get<bool>();
      if (cmd == "deform") all = all && row["deformation"]["pass"].get<bool>();
    }
    rep["result"] = {{"primes", rows}};
    out.exit_code = all ? kSuccess : kNegative;
    return out;
  }

  if (cmd == "ext-inject" && o.frobenius) {
    const std::vector<unsigned> primes = primes_for(o, file);
    rep["ring"] = ring_header(over_prime(file, primes.front()));
    bool all = true;
    const json rows = per_prime(primes, [&](unsigned p) {
      const FrobeniusContext ctx(over_prime(file, p), copts);
      const ExtComputation target(ctx.frobenius_power(o.e), copts);
      bool ok = true;
      json maps = injectivity_rows(induced_ext_maps(ctx.ext(), target), ctx.ext(), o.min_degree, ok);
      unsigned long long q = 1;
      for (unsigned k = 0; k < o.e; ++k) q *= p;
      return json{{"p", p}, {"q", q}, {"injective", ok}, {"maps", maps}};
    });
    for (const auto& row : rows) all = all && row["injective"].get<bool>();
    rep["result"] = {{"frobenius", rows}};
    out.exit_code = all ? kSuccess : kNegative;
    return out;
  }

  const Ideal I = build_ideal(file);
  rep["ring"] = ring_header(I);

  if (cmd == "dim") {
    const int dim = I.krull_dim();
    if (dim < 0) throw DomainError("A/I is the zero ring");
    rep["result"] = {{"n", I.ring()->nvars()}, {"dim", dim}};
    return out;
  }
  if (cmd == "betti") {
    if (!I.is_homogeneous()) throw DomainError("the ideal must be homogeneous");
    const GradedFreeResolution res = free_resolution(I);
    json rows = json::array();
    for (const auto& [key, count] : betti(res)) {
      rows.push_back({{"j", key.first}, {"shift", key.second}, {"count", count}});
    }
    json ranks = json::array();
    for (std::size_t k = 0; k <= res.length(); ++k) ranks.push_back(res.rank(k));
    rep["result"] = {{"pd", res.length()}, {"ranks", ranks}, {"betti", rows}};
    return out;
  }

  const ExtComputation ext(I, copts);
  if (cmd == "lc-table") {
    rep["result"] = lc_table(ext, o);
  } else if (cmd == "depth") {
    const int dp = depth(ext);
    rep["result"] = {{"depth", dp},
                     {"dim", ext.dimension()},
                     {"pd", ext.projective_dimension()},
                     {"cohen_macaulay", dp == ext.dimension()}};
  } else if (cmd == "dubois-criterion") {
    const DuBoisReport r = du_bois_graded_criterion(ext);
    rep["result"] = {{"satisfied", r.satisfied}, {"offending", entries_json(r.offending)}};
    out.exit_code = r.satisfied ? kSuccess : kNegative;
  } else if (cmd == "vanishing") {
    json rows = json::array();
    bool all = true;
    for (const auto& v : vanishing_check(ext)) {
      json row = {{"i", v.i}, {"finite_length", v.finite_length}};
      if (v.finite_length) {
        row["vanishes"] = v.vanishes;
        row["offending"] = entries_json(v.offending);
        all = all && v.vanishes;
      }
      rows.push_back(row);
    }
    rep["result"] = {{"all_vanish", all}, {"indices", rows}};
    out.exit_code = all ? kSuccess : kNegative;
  } else if (cmd == "ext-inject") {
    if (o.powers.empty()) throw DomainError("ext-inject needs --power t or --frobenius");
    json rows = json::array();
    bool all = true;
    for (unsigned t : o.powers) {
      if (t == 0) throw DomainError("--power must be at least 1");
      const ExtComputation target(ideal_power(I, t), copts);
      bool ok = true;
      json maps = injectivity_rows(induced_ext_maps(ext, target), ext, o.min_degree, ok);
      rows.push_back({{"t", t}, {"injective", ok}, {"maps", maps}});
      all = all && ok;
    }
    rep["result"] = {{"powers", rows}};
    if (o.min_degree) rep["result"]["min_degree"] = *o.min_degree;
    out.exit_code = all ? kSuccess : kNegative;
  } else if (cmd == "koszul-check") {
    const ParameterSequence x = find_hsop(I, o.seed);
    const HochsterRobertsReport hr = hochster_roberts_check(ext, x, o.max_strand_dim);
    json seq = json::array();
    for (const auto& f : x.elements) seq.push_back(f.to_string());
    json rows = json::array();
    for (std::size_t k = 0; k < hr.rows.size(); ++k) {
      const auto& r = hr.rows[k];
      rows.push_back({{"r", r.r},
                      {"t", r.t},
                      {"koszul_dim", r.koszul_dim},
                      {"lc_dim", r.lc_dim ? json(*r.lc_dim) : json(nullptr)},
                      {"equal", r.equal},
                      {"concentrated", static_cast<bool>(hr.concentrated[k])}});
    }
    json totals = json::array();
    for (int r = 0; r <= ext.dimension(); ++r) {
      totals.push_back({{"r", r},
                        {"nonzero", koszul_cohomology_total_nonzero(ext, x, r, o.max_strand_dim)}});
    }
    rep["result"] = {{"sequence", seq},
                     {"degrees", x.degrees},
                     {"rows", rows},
                     {"hypothesis_holds", hr.hypothesis_holds},
                     {"all_equal", hr.all_equal},
                     {"first_discrepancy", optional_int(hr.first_discrepancy)},
                     {"koszul_total", totals}};
    out.exit_code = hr.all_equal ? kSuccess : kNegative;
  } else if (cmd == "stcm-obstruction") {
    const StcmReport r = set_theoretic_cm_obstruction(ext, o.window);
    rep["result"] = {{"obstructed", !r.hits.empty()},
                     {"hits", entries_json(r.hits)},
                     {"truncated", r.truncated}};
    out.exit_code = r.hits.empty() ? kSuccess : kNegative;
  } else {
    throw DomainError("unknown command '" + cmd + "'");
  }
  return out;
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

}  // namespace

std::pair<int, int> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t a = 0, b = 0;
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    const int l = std::stoi(lo, &a), h = std::stoi(hi, &b);
    if (a != lo.size() || b != hi.size() || l > h) throw std::invalid_argument(text);
    return {l, h};
  } catch (const std::exception&) {
    throw DomainError("window must look like lo:hi with lo <= hi, got '" + text + "'");
  }
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0 || v > 1'000'000'000) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw DomainError("expected a comma-separated list of nonnegative integers, got '" + text +
                        "'");
    }
  }
  if (out.empty()) throw DomainError("empty list");
  return out;
}

CommandResult run_command(const CommandOptions& options, const RingFile* ring) {
  const auto start = std::chrono::steady_clock::now();
  set_default_max_pairs(options.max_pairs);
  CommandResult out;
  try {
    if (options.command == "corpus") {
      json entries = json::array();
      bool all = true;
      for (const auto& e : corpus()) {
        json r = run_corpus_entry(e);
        all = all && r["ok"].get<bool>();
        entries.push_back(std::move(r));
      }
      out.report["result"] = {{"all_ok", all}, {"entries", entries}};
      out.exit_code = all ? kSuccess : kNegative;
    } else {
      if (!ring) throw DomainError("command '" + options.command + "' needs a ring file");
      out = dispatch(options, *ring);
    }
  } catch (const ResourceError& e) {
    out.report["error"] = error_json("resource", e.what());
    out.report["error"]["cap"] = e.cap();
    out.exit_code = kResourceCap;
  } catch (const ParseError& e) {
    out.report["error"] = error_json("parse", e.what());
    out.report["error"]["line"] = e.line();
    out.report["error"]["column"] = e.column();
    out.exit_code = kInputError;
  } catch (const WindowRequired& e) {
    out.report["error"] = error_json("window", e.what());
    out.exit_code = kInputError;
  } catch (const StructuralError& e) {
    out.report["error"] = error_json("structural", e.what());
    out.exit_code = kInputError;
  } catch (const DomainError& e) {
    out.report["error"] = error_json("domain", e.what());
    out.exit_code = kInputError;
  }

  json report = {{"schema", 1},
                 {"engine", std::string("glc ") + kEngineVersion},
                 {"command", options.command},
                 {"seed", options.seed},
                 {"unverified_hypotheses", unverified(options.command)}};
  json args = json::object();
  if (options.window) args["window"] = {options.window->first, options.window->second};
  if (!options.primes.empty()) args["primes"] = options.primes;
  if (!options.powers.empty()) args["powers"] = options.powers;
  if (options.frobenius) args["frobenius"] = true;
  if (options.min_degree) args["min_degree"] = *options.min_degree;
  if (options.element) args["element"] = *options.element;
  if (options.e != 1) args["e"] = options.e;
  args["max_strand_dim"] = options.max_strand_dim;
  args["max_pairs"] = options.max_pairs;
  report["args"] = args;
  for (auto it = out.report.begin(); it != out.report.end(); ++it) report[it.key()] = it.value();
  if (options.timing) {
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  }
  out.report = std::move(report);
  return out;
}

// ------------------------------------------------------------ pretty

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool flat_object(const json& v) {
  if (!v.is_object()) return false;
  for (const auto& [k, x] : v.items()) {
    if (x.is_object() || (x.is_array() && !x.empty() && x.front().is_structured())) return false;
  }
  return true;
}

void render(std::ostream& out, const std::string& key, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), flat_object)) {
    std::vector<std::string> cols;
    for (const auto& row : v) {
      for (const auto& [k, x] : row.items()) {
        if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
      }
    }
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : v) {
      std::vector<std::string> line;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::string s = row.contains(cols[c]) ? scalar_text(row[cols[c]]) : "";
        width[c] = std::max(width[c], s.size());
        line.push_back(std::move(s));
      }
      cells.push_back(std::move(line));
    }
    out << pad << key << ":\n";
    auto emit = [&](const std::vector<std::string>& line) {
      std::ostringstream row;
      for (std::size_t c = 0; c < line.size(); ++c) {
        row << std::left << std::setw(static_cast<int>(width[c]) + 2) << line[c];
      }
      std::string text = row.str();
      text.erase(text.find_last_not_of(' ') + 1);
      out << pad << "  " << text << '\n';
    };
    emit(cols);
    for (const auto& line : cells) emit(line);
    return;
  }
  if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) render(out, k, x, indent + 2);
    return;
  }
  if (v.is_array() && !v.empty() && v.front().is_structured()) {
    out << pad << key << ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) render(out, "[" + std::to_string(i) + "]", v[i], indent + 2);
    return;
  }
  if (v.is_array()) {
    out << pad << key << ": ";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
    out << '\n';
    return;
  }
  out << pad << key << ": " << scalar_text(v) << '\n';
}

}  // namespace

std::string render_pretty(const json& report) {
  std::ostringstream out;
  for (const auto& [k, v] : report.items()) render(out, k, v, 0);
  return out.str();
}

}  // namespace glc
