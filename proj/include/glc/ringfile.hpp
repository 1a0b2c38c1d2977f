#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glc/groebner.hpp"

namespace glc {

/// A ring-spec file: `key = value` lines, `#` comments. Recognized keys:
///   name, field (Q or Fp:<p>), construction (none, segre, veronese,
///   semigroup-kernel), vars, weights, gens, target-vars, target-weights,
///   images, factor1-vars, factor1-gens, factor2-vars, factor2-gens,
///   base-vars, base-gens, degree.
/// List values are comma separated.
struct RingFile {
  struct Entry {
    std::string key;
    std::string value;
    int line = 0;
    int column = 0;  // of the value
  };
  std::vector<Entry> entries;

  const Entry* find(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;
};

/// Throws ParseError with the 1-based line and column of the problem.
RingFile parse_ring_file(const std::string& text);
RingFile read_ring_file(const std::string& path);

/// Canonical key order and list formatting; serialize(parse(serialize(f)))
/// equals serialize(f).
std::string serialize_ring_file(const RingFile& f);

/// Builds the ideal, running the construction directive. A field override
/// reinterprets every coefficient (used for prime sweeps). Inhomogeneous
/// generators are reported with their position.
Ideal build_ideal(const RingFile& f, std::optional<FieldSpec> field = {});

}  // namespace glc
