#pragma once

// Test corpora: every module of small dimension up to isomorphism, built as
// iterated extensions of simples, plus the group pairs the checks run on.

#include "modbrick/config.hpp"
#include "modbrick/hom.hpp"

#include <string>
#include <vector>

namespace modbrick {

/// Each isomorphism class of dimension <= max_dim exactly once, in order of
/// dimension. Names are "M<dim>.<index>" except for the simples.
std::vector<Module> modules_up_to(const std::vector<Module>& simples, Index max_dim,
                                  const Config& cfg = default_config());

/// At most `cap` modules of the pool; the simples (the first `keep` entries)
/// always stay, the rest is a seeded sample in pool order.
std::vector<Module> sample_corpus(const std::vector<Module>& pool, std::size_t keep, std::size_t cap,
                                  std::uint64_t seed);

struct GroupPair {
  std::string name;  // e.g. "S4>A4"
  Group ambient;
  Group normal;
  FieldSpec field;
};

/// S4 > A4 over GF(4), C4 > C2 and D4 > C4 over GF(2), S4 > Klein four over GF(2).
std::vector<GroupPair> standard_pairs();

struct Corpus {
  std::vector<Module> simples;
  std::vector<Module> modules;  // simples first
};

/// Cached per (group, field, max_dim); the full list, not sampled.
const Corpus& full_corpus(const Group& g, const FieldSpec& f, Index max_dim = 4, const Config& cfg = default_config());

/// full_corpus sampled down to `cap` modules with the config seed.
std::vector<Module> corpus_for(const Group& g, const FieldSpec& f, std::size_t cap = 64, Index max_dim = 4,
                               const Config& cfg = default_config());

}  // namespace modbrick
