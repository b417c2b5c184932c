#pragma once

#include <cstdint>

namespace modbrick {

/// Search budgets shared by every randomized or enumerating routine.
///
/// Exhaustive enumeration is used whenever the candidate count is at most
/// `enum_cap`; beyond that, seeded random sampling runs for at most
/// `iteration_cap` draws and reports Indeterminate instead of guessing.
struct Config {
  std::uint64_t enum_cap = 65536;
  std::uint64_t iteration_cap = 4096;
  std::uint64_t seed = 0xB41C;
};

inline const Config& default_config() {
  static const Config cfg{};
  return cfg;
}

}  // namespace modbrick
