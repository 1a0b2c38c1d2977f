#include "glc/ringfile.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "glc/constructions.hpp"
#include "glc/error.hpp"

namespace glc {

namespace {

const std::vector<std::string>& canonical_keys() {
  static const std::vector<std::string> keys = {
      "name",         "field",          "construction", "vars",         "weights",
      "gens",         "target-vars",    "target-weights", "images",     "factor1-vars",
      "factor1-gens", "factor2-vars",   "factor2-gens", "base-vars",    "base-gens",
      "degree"};
  return keys;
}

bool is_list_key(const std::string& key) {
  return key != "name" && key != "field" && key != "construction" && key != "degree";
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Item {
  std::string text;
  int column;
};

std::vector<Item> split_list(const RingFile::Entry& e) {
  std::vector<Item> out;
  std::size_t start = 0;
  const std::string& v = e.value;
  while (start <= v.size()) {
    std::size_t end = v.find(',', start);
    if (end == std::string::npos) end = v.size();
    const std::string raw = v.substr(start, end - start);
    const auto lead = raw.find_first_not_of(" \t");
    const std::string text = trim(raw);
    if (!text.empty()) {
      out.push_back({text, e.column + static_cast<int>(start + (lead == std::string::npos ? 0 : lead))});
    } else if (end != v.size() || !out.empty()) {
      throw ParseError("empty list item in '" + e.key + "'", e.line,
                       e.column + static_cast<int>(start));
    }
    if (end == v.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<Item> list_of(const RingFile& f, const std::string& key) {
  const RingFile::Entry* e = f.find(key);
  return e ? split_list(*e) : std::vector<Item>{};
}

const RingFile::Entry& require(const RingFile& f, const std::string& key,
                               const std::string& construction) {
  const RingFile::Entry* e = f.find(key);
  if (!e) throw ParseError("missing key '" + key + "' for construction " + construction, 1, 1);
  return *e;
}

std::vector<std::string> names_of(const std::vector<Item>& items) {
  std::vector<std::string> out;
  for (const auto& it : items) out.push_back(it.text);
  return out;
}

std::vector<int> ints_of(const RingFile& f, const std::string& key) {
  std::vector<int> out;
  const RingFile::Entry* e = f.find(key);
  if (!e) return out;
  for (const auto& it : split_list(*e)) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(it.text, &used);
      if (used != it.text.size()) throw std::invalid_argument(it.text);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + it.text + "'", e->line, it.column);
    }
  }
  return out;
}

Polynomial parse_at(const RingPtr& ring, const Item& item, int line) {
  try {
    return parse_polynomial(ring, item.text);
  } catch (const ParseError& err) {
    throw ParseError(err.detail(), line, item.column + err.column() - 1);
  }
}

std::vector<Polynomial> polys_of(const RingFile& f, const std::string& key, const RingPtr& ring,
                                 bool homogeneous) {
  std::vector<Polynomial> out;
  const RingFile::Entry* e = f.find(key);
  if (!e) return out;
  for (const auto& it : split_list(*e)) {
    Polynomial p = parse_at(ring, it, e->line);
    if (homogeneous && !p.is_homogeneous()) {
      throw ParseError("generator '" + it.text + "' is not homogeneous", e->line, it.column);
    }
    out.push_back(std::move(p));
  }
  return out;
}

RingPtr make_ring(const RingFile& f, const std::string& vars_key, const std::string& weights_key,
                  const FieldSpec& field) {
  const RingFile::Entry* ve = f.find(vars_key);
  std::vector<std::string> vars = names_of(list_of(f, vars_key));
  std::vector<int> weights = ints_of(f, weights_key);
  if (weights.empty()) weights.assign(vars.size(), 1);
  try {
    return GradedRingSpec::make(vars, weights, field);
  } catch (const Error& err) {
    const RingFile::Entry* we = f.find(weights_key);
    const RingFile::Entry* at = we ? we : ve;
    throw ParseError(err.what(), at ? at->line : 1, at ? at->column : 1);
  }
}

Ideal factor_ideal(const RingFile& f, const std::string& prefix, const FieldSpec& field,
                   const std::string& construction) {
  require(f, prefix + "-vars", construction);
  const RingPtr ring = make_ring(f, prefix + "-vars", "", field);
  return Ideal(ring, polys_of(f, prefix + "-gens", ring, true));
}

void allow_only(const RingFile& f, const std::set<std::string>& allowed,
                const std::string& construction) {
  for (const auto& e : f.entries) {
    if (!allowed.count(e.key)) {
      throw ParseError("key '" + e.key + "' does not apply to construction " + construction,
                       e.line, 1);
    }
  }
}

}  // namespace

const RingFile::Entry* RingFile::find(const std::string& key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

std::optional<std::string> RingFile::get(const std::string& key) const {
  const Entry* e = find(key);
  if (!e) return std::nullopt;
  return e->value;
}

RingFile parse_ring_file(const std::string& text) {
  RingFile f;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  const auto& keys = canonical_keys();
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      const auto col = line.find_first_not_of(" \t");
      throw ParseError("expected 'key = value'", lineno, static_cast<int>(col) + 1);
    }
    const std::string key = trim(line.substr(0, eq));
    const int key_col = static_cast<int>(line.find_first_not_of(" \t")) + 1;
    if (key.empty()) throw ParseError("empty key", lineno, key_col);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ParseError("unknown key '" + key + "'", lineno, key_col);
    }
    if (f.find(key)) throw ParseError("duplicate key '" + key + "'", lineno, key_col);
    const std::string rest = line.substr(eq + 1);
    const auto vb = rest.find_first_not_of(" \t");
    const int value_col = static_cast<int>(eq + 1 + (vb == std::string::npos ? rest.size() : vb)) + 1;
    f.entries.push_back({key, trim(rest), lineno, value_col});
    if (is_list_key(key)) split_list(f.entries.back());  // validate early
  }
  if (!f.find("field")) throw ParseError("missing key 'field'", lineno + 1, 1);
  return f;
}

RingFile read_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open ring file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ring_file(ss.str());
}

std::string serialize_ring_file(const RingFile& f) {
  std::ostringstream out;
  for (const auto& key : canonical_keys()) {
    const RingFile::Entry* e = f.find(key);
    if (!e) continue;
    out << key << " =";
    if (is_list_key(key)) {
      const auto items = split_list(*e);
      for (std::size_t i = 0; i < items.size(); ++i) out << (i ? ", " : " ") << items[i].text;
    } else if (!e->value.empty()) {
      out << ' ' << e->value;
    }
    out << '\n';
  }
  return out.str();
}

Ideal build_ideal(const RingFile& f, std::optional<FieldSpec> field_override) {
  const RingFile::Entry& fe = *f.find("field");
  FieldSpec field = FieldSpec::rationals();
  if (field_override) {
    field = *field_override;
  } else {
    try {
      field = FieldSpec::parse(fe.value);
    } catch (const Error& err) {
      throw ParseError(err.what(), fe.line, fe.column);
    }
  }
  const std::string construction = f.get("construction").value_or("none");

  if (construction == "none") {
    allow_only(f, {"name", "field", "construction", "vars", "weights", "gens"}, construction);
    require(f, "vars", construction);
    const RingPtr ring = make_ring(f, "vars", "weights", field);
    return Ideal(ring, polys_of(f, "gens", ring, true));
  }
  if (construction == "semigroup-kernel") {
    allow_only(f, {"name", "field", "construction", "vars", "weights", "target-vars",
                   "target-weights", "images"},
               construction);
    require(f, "target-vars", construction);
    const RingFile::Entry& ie = require(f, "images", construction);
    const RingPtr target = make_ring(f, "target-vars", "target-weights", field);
    const std::vector<Polynomial> images = polys_of(f, "images", target, true);
    if (images.empty()) throw ParseError("no images", ie.line, ie.column);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i].size() != 1) {
        throw ParseError("semigroup images must be monomials", ie.line, split_list(ie)[i].column);
      }
    }
    std::vector<std::string> vars = names_of(list_of(f, "vars"));
    if (vars.empty()) {
      for (std::size_t i = 0; i < images.size(); ++i) vars.push_back("x" + std::to_string(i));
    }
    if (vars.size() != images.size()) {
      throw ParseError("one variable per image expected", f.find("vars")->line, f.find("vars")->column);
    }
    std::vector<int> weights = ints_of(f, "weights");
    if (weights.empty()) {
      int g = 0;
      for (const auto& im : images) g = std::gcd(g, *im.homogeneous_degree());
      for (const auto& im : images) weights.push_back(*im.homogeneous_degree() / g);
    }
    RingPtr source;
    try {
      source = GradedRingSpec::make(vars, weights, field);
    } catch (const Error& err) {
      throw ParseError(err.what(), ie.line, ie.column);
    }
    return kernel_of_ring_map(source, target, images);
  }
  if (construction == "segre") {
    allow_only(f, {"name", "field", "construction", "factor1-vars", "factor1-gens",
                   "factor2-vars", "factor2-gens"},
               construction);
    return segre_product(factor_ideal(f, "factor1", field, construction),
                         factor_ideal(f, "factor2", field, construction));
  }
  if (construction == "veronese") {
    allow_only(f, {"name", "field", "construction", "base-vars", "base-gens", "degree"},
               construction);
    const RingFile::Entry& de = require(f, "degree", construction);
    const std::vector<int> k = ints_of(f, "degree");
    if (k.size() != 1) throw ParseError("degree must be one integer", de.line, de.column);
    return veronese(factor_ideal(f, "base", field, construction), k[0]);
  }
  const RingFile::Entry* ce = f.find("construction");
  throw ParseError("unknown construction '" + construction + "'", ce->line, ce->column);
}

}  // namespace glc
