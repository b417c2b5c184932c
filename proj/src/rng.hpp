#pragma once

#include "modbrick/field.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace modbrick::detail {

// Seeded source for every randomized search. Each call site passes its own
// stream id so that adding draws in one place does not shift another.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) : gen_(seed ^ (stream * 0x9e3779b97f4a7c15ull)) {}

  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t n) { return n ? gen_() % n : 0; }

  FieldElem elem(const FieldSpec& f) { return f.from_code(static_cast<std::uint32_t>(below(f.order()))); }

  std::vector<FieldElem> coeffs(const FieldSpec& f, Eigen::Index h) {
    std::vector<FieldElem> c;
    c.reserve(h);
    for (Eigen::Index i = 0; i < h; ++i) c.push_back(elem(f));
    return c;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace modbrick::detail
