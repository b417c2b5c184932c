#pragma once

// The S4 / A4 example in characteristic 2 over GF(4), plus the Klein four
// subgroup used by the counterexamples.
//
// Module names follow the Loewy picture top-down: "S2_kG_kG" has top S2,
// middle k_G and socle k_G.

#include "modbrick/config.hpp"
#include "modbrick/module.hpp"

#include <map>
#include <string>
#include <vector>

namespace modbrick::s4a4 {

struct Example {
  FieldSpec field;
  Group g;    // S4
  Group n;    // A4
  Group n1;   // Klein four, normal in both
  Perm odd;   // (0 1), a representative of the nontrivial coset of A4

  Module k_g, s2;
  Module k_n, t1, t2;
  /// The six bricks of mod kS4 in display order: kG, S2, S2_kG_kG, kG_S2, S2_kG, kG_kG_S2.
  std::vector<Module> bricks;
  Module kg_kg;   // nonsplit self-extension of k_G
  Module kn_t2;   // top k_N, socle T2, over kA4
  Module t1_kn;   // top T1, socle k_N, over kA4

  const Module& brick(const std::string& name) const;
};

/// Parsed from the golden JSON compiled into the library.
const Example& example();

/// Golden file names (without ".json") in the order they are generated.
const std::vector<std::string>& golden_names();
/// Raw golden JSON text by file name, e.g. "S2.json".
const std::map<std::string, std::string>& golden_texts();

// Constructions used to produce the golden files.

Module build_s2(const FieldSpec& f);
Module build_t(const FieldSpec& f, int power);  // a -> w^power, b -> 1 on A4

/// A module with the given quotient and submodule whose top is `top` and whose
/// socle is `socle` (both simple) and which is a brick. Searches the
/// extension classes in order and returns the first hit.
std::optional<Module> find_layered(const Module& quotient, const Module& sub, const Module& top, const Module& socle,
                                   const std::vector<Module>& simples, std::string name,
                                   const Config& cfg = default_config());

/// Rebuilds every golden module from scratch, keyed by golden name.
std::vector<std::pair<std::string, Module>> generate(const Config& cfg = default_config());

}  // namespace modbrick::s4a4
