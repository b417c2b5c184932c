#include "modbrick/corpus.hpp"

#include "modbrick/error.hpp"
#include "modbrick/smc.hpp"
#include "rng.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace modbrick {

namespace {

using Signature = std::vector<Index>;

Signature signature(const Module& m, const std::vector<Module>& simples) {
  Signature sig{m.dim(), hom_dim(m, m)};
  for (const auto& s : simples) {
    sig.push_back(hom_dim(s, m));
    sig.push_back(hom_dim(m, s));
  }
  return sig;
}

}  // namespace

std::vector<Module> modules_up_to(const std::vector<Module>& simples, Index max_dim, const Config& cfg) {
  if (simples.empty()) return {};
  const Group& g = simples.front().group();
  const FieldSpec f = simples.front().field();
  std::vector<std::vector<Module>> level(static_cast<std::size_t>(max_dim) + 1);
  std::map<Signature, std::vector<Module>> seen;

  auto add = [&](const Module& m) {
    auto& bucket = seen[signature(m, simples)];
    for (const auto& other : bucket)
      if (is_isomorphic(m, other, cfg)) return;
    bucket.push_back(m);
    level[static_cast<std::size_t>(m.dim())].push_back(m);
  };

  for (const auto& s : simples)
    if (s.dim() <= max_dim) add(s);
  for (Index d = 2; d <= max_dim; ++d) {
    for (const auto& s : simples) {
      const Index rest = d - s.dim();
      if (rest < 1) continue;
      const std::vector<Module> tops = level[static_cast<std::size_t>(rest)];
      for (const auto& top : tops) {
        add(direct_sum(g, f, {s, top}));
        const ExtensionSpace ext = extension_space(top, s);
        if (projective_count(f, ext.dim()) > cfg.enum_cap)
          raise(ErrorKind::EnumCapExceeded, "too many extension classes of " + top.name() + " by " + s.name());
        for_each_projective(f, ext.dim(), [&](const std::vector<FieldElem>& c) {
          std::vector<Matrix> cocycle;
          for (std::size_t gen = 0; gen < g.num_generators(); ++gen) {
            Matrix block = zeros(f, s.dim(), top.dim());
            for (std::size_t i = 0; i < c.size(); ++i) block += c[i] * ext.reps[i][gen];
            cocycle.push_back(std::move(block));
          }
          add(detail::make_unchecked(g, f, d, extension_module(top, s, cocycle).action(), {}));
          return false;
        });
      }
    }
  }

  std::vector<Module> out;
  for (Index d = 1; d <= max_dim; ++d) {
    int i = 0;
    for (const auto& m : level[static_cast<std::size_t>(d)]) {
      bool simple = false;
      for (const auto& s : simples) simple = simple || m.same_action(s);
      out.push_back(simple ? m : m.renamed("M" + std::to_string(d) + "." + std::to_string(i)));
      ++i;
    }
  }
  return out;
}

std::vector<Module> sample_corpus(const std::vector<Module>& pool, std::size_t keep, std::size_t cap,
                                  std::uint64_t seed) {
  if (pool.size() <= cap) return pool;
  keep = std::min({keep, cap, pool.size()});
  std::vector<std::size_t> rest;
  for (std::size_t i = keep; i < pool.size(); ++i) rest.push_back(i);
  detail::Rng rng(seed, 0xC0);
  for (std::size_t i = rest.size(); i > 1; --i) std::swap(rest[i - 1], rest[rng.below(i)]);
  rest.resize(cap - keep);
  std::sort(rest.begin(), rest.end());
  std::vector<Module> out(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(keep));
  for (std::size_t i : rest) out.push_back(pool[i]);
  return out;
}

std::vector<GroupPair> standard_pairs() {
  const FieldSpec gf2 = gf_make(2, 1);
  return {
      {"S4>A4", groups::symmetric(4), groups::alternating4(), gf_make(2, 2)},
      {"C4>C2", groups::cyclic(4), groups::cyclic2_in_cyclic4(), gf2},
      {"D4>C4", groups::dihedral(4), groups::rotations_in_dihedral4(), gf2},
      {"S4>N1", groups::symmetric(4), groups::klein4(), gf2},
  };
}

const Corpus& full_corpus(const Group& g, const FieldSpec& f, Index max_dim, const Config& cfg) {
  struct Entry {
    Group g;
    FieldSpec f;
    Index max_dim;
    std::unique_ptr<Corpus> corpus;
  };
  static std::mutex mu;
  static std::vector<Entry> memo;
  std::lock_guard lock(mu);
  for (const auto& e : memo)
    if (e.g == g && e.f == f && e.max_dim == max_dim) return *e.corpus;
  auto c = std::make_unique<Corpus>();
  c->simples = simples_of(g, f, cfg);
  c->modules = modules_up_to(c->simples, max_dim, cfg);
  memo.push_back({g, f, max_dim, std::move(c)});
  return *memo.back().corpus;
}

std::vector<Module> corpus_for(const Group& g, const FieldSpec& f, std::size_t cap, Index max_dim, const Config& cfg) {
  const Corpus& c = full_corpus(g, f, max_dim, cfg);
  // simples first so that sampling never drops them
  std::vector<Module> pool;
  for (const auto& s : c.simples)
    if (s.dim() <= max_dim) pool.push_back(s);
  const std::size_t keep = pool.size();
  for (const auto& m : c.modules) {
    bool simple = false;
    for (const auto& s : c.simples) simple = simple || m.same_action(s);
    if (!simple) pool.push_back(m);
  }
  return sample_corpus(pool, keep, cap, cfg.seed);
}

}  // namespace modbrick
