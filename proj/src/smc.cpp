#include "modbrick/smc.hpp"

#include "modbrick/error.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace modbrick {

namespace {

std::vector<std::uint32_t> scalar_key(const Module& s) {
  std::vector<std::uint32_t> key;
  for (const auto& m : s.action()) key.push_back(m(0, 0).code());
  return key;
}

}  // namespace

std::vector<Module> simples_of(const Group& g, const FieldSpec& f, const Config& cfg) {
  struct Entry {
    Group g;
    FieldSpec f;
    std::vector<Module> simples;
  };
  static std::mutex mu;
  static std::vector<Entry> memo;
  {
    std::lock_guard lock(mu);
    for (const auto& e : memo)
      if (e.g == g && e.f == f) return e.simples;
  }

  std::vector<Module> out;
  for (const auto& [s, mult] : composition_factors(free_module(g, f, 1), cfg).factors) out.push_back(s);
  std::stable_sort(out.begin(), out.end(), [](const Module& a, const Module& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.dim() == 1 && scalar_key(a) < scalar_key(b);
  });
  int next = 1;
  const Module k = trivial_module(g, f);
  for (auto& s : out) s = s.same_action(k) ? s.renamed("k") : s.renamed("L" + std::to_string(next++));

  std::lock_guard lock(mu);
  memo.push_back({g, f, out});
  return out;
}

std::vector<std::vector<long>> k0_matrix(const std::vector<ShiftedModule>& items, const std::vector<Module>& simples,
                                         const Config& cfg) {
  std::vector<std::vector<long>> rows;
  for (const auto& it : items) {
    std::vector<long> row;
    for (int c : composition_multiplicities(it.module, simples, cfg)) row.push_back(it.shift % 2 ? -c : c);
    rows.push_back(std::move(row));
  }
  return rows;
}

long integer_determinant(std::vector<std::vector<long>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  long sign = 1;
  long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

SmcCertificate check_two_term_smc(const std::vector<ShiftedModule>& items, const Config& cfg) {
  if (items.empty()) raise(ErrorKind::DimensionMismatch, "empty collection");
  return check_two_term_smc(items, simples_of(items.front().module.group(), items.front().module.field(), cfg), cfg);
}

SmcCertificate check_two_term_smc(const std::vector<ShiftedModule>& items, const std::vector<Module>& simples,
                                  const Config& cfg) {
  SmcCertificate c;
  c.bricks = c.hom_within_degree = c.hom_across = c.ext_across = true;
  auto label = [&](std::size_t i) {
    return items[i].module.name() + (items[i].shift ? "[1]" : "");
  };
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].shift != 0 && items[i].shift != 1)
      raise(ErrorKind::DimensionMismatch, "shifts must be 0 or 1");
    if (i > 0) require_same_algebra(items[0].module, items[i].module, "check_two_term_smc");
    if (!is_brick(items[i].module, cfg)) {
      c.bricks = false;
      c.failures.push_back(label(i) + " is not a brick");
    }
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (i == j) continue;
      const Module& x = items[i].module;
      const Module& y = items[j].module;
      if (items[i].shift == items[j].shift) {
        if (hom_dim(x, y) != 0) {
          c.hom_within_degree = false;
          c.failures.push_back("Hom(" + label(i) + ", " + label(j) + ") != 0");
        }
      } else if (items[i].shift == 0) {
        if (hom_dim(x, y) != 0) {
          c.hom_across = false;
          c.failures.push_back("Hom(" + label(i) + ", " + items[j].module.name() + ") != 0");
        }
        if (ext1_dim(x, y) != 0) {
          c.ext_across = false;
          c.failures.push_back("Ext^1(" + label(i) + ", " + items[j].module.name() + ") != 0");
        }
      }
    }
  }
  c.k0 = k0_matrix(items, simples, cfg);
  if (items.size() != simples.size()) {
    c.failures.push_back("K0 matrix is " + std::to_string(items.size()) + " x " + std::to_string(simples.size()));
  } else {
    c.k0_determinant = integer_determinant(c.k0);
    c.k0_unimodular = c.k0_determinant == 1 || c.k0_determinant == -1;
    if (!c.k0_unimodular) c.failures.push_back("K0 determinant is " + std::to_string(c.k0_determinant));
  }
  return c;
}

RestrictedSmc restrict_smc(const std::vector<ShiftedModule>& items, const Group& normal, const Config& cfg) {
  RestrictedSmc out;
  for (const auto& it : items) {
    for (const auto& [t, mult] : decompose(restrict(it.module, normal), cfg).summands) {
      bool seen = false;
      for (const auto& u : out.items)
        if (u.shift == it.shift && u.module.dim() == t.dim() && is_isomorphic(u.module, t, cfg)) seen = true;
      if (!seen) out.items.push_back({t, it.shift});
    }
  }
  if (out.items.empty()) raise(ErrorKind::DimensionMismatch, "empty collection");
  out.certificate = check_two_term_smc(out.items, cfg);
  return out;
}

std::optional<std::vector<ShiftedModule>> find_nontrivial_smc(const std::vector<Module>& candidates,
                                                              const std::vector<Module>& simples,
                                                              const Config& cfg) {
  const std::size_t n = candidates.size();
  const std::size_t size = simples.size();
  if (size == 0 || size > 2 * n) return std::nullopt;

  std::vector<bool> brick(n), simple(n);
  std::vector<std::vector<Index>> hom(n, std::vector<Index>(n)), ext(n, std::vector<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    brick[i] = is_brick(candidates[i], cfg);
    simple[i] = is_simple(candidates[i], cfg);
    for (std::size_t j = 0; j < n; ++j) {
      hom[i][j] = i == j ? 1 : hom_dim(candidates[i], candidates[j]);
      ext[i][j] = ext1_dim(candidates[i], candidates[j]);
    }
  }

  // item t is candidate t / 2 in degree t % 2
  std::vector<std::size_t> pick(size);
  std::iota(pick.begin(), pick.end(), 0);
  const std::size_t pool = 2 * n;
  while (true) {
    bool ok = true;
    bool shifted = false;
    bool unshifted = false;
    bool all_simple = true;
    for (std::size_t a = 0; a < size && ok; ++a) {
      const std::size_t i = pick[a] / 2;
      const int si = static_cast<int>(pick[a] % 2);
      ok = brick[i];
      (si ? shifted : unshifted) = true;
      all_simple = all_simple && simple[i];
      for (std::size_t b = 0; b < size && ok; ++b) {
        if (a == b) continue;
        const std::size_t j = pick[b] / 2;
        const int sj = static_cast<int>(pick[b] % 2);
        if (si == sj) ok = hom[i][j] == 0;
        else if (si == 0) ok = hom[i][j] == 0 && ext[i][j] == 0;
      }
    }
    if (ok && shifted && unshifted && !all_simple) {
      std::vector<ShiftedModule> items;
      for (std::size_t t : pick) items.push_back({candidates[t / 2], static_cast<int>(t % 2)});
      if (check_two_term_smc(items, simples, cfg).passes()) return items;
    }
    // next combination
    std::size_t a = size;
    while (a > 0 && pick[a - 1] == pool - size + a - 1) --a;
    if (a == 0) return std::nullopt;
    ++pick[a - 1];
    for (std::size_t b = a; b < size; ++b) pick[b] = pick[b - 1] + 1;
  }
}

}  // namespace modbrick
