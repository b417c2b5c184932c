#include "modbrick/error.hpp"
#include "modbrick/hom.hpp"
#include "rng.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace modbrick {

namespace {

using Key = std::vector<std::uint32_t>;

Key matrix_key(const Matrix& m) {
  Key k{static_cast<std::uint32_t>(m.rows()), static_cast<std::uint32_t>(m.cols())};
  for (Index i = 0; i < m.size(); ++i) k.push_back(m.data()[i].code());
  return k;
}

Key module_key(const Module& m) {
  Key k{static_cast<std::uint32_t>(m.dim())};
  for (const auto& a : m.action())
    for (Index i = 0; i < a.size(); ++i) k.push_back(a.data()[i].code());
  return k;
}

std::uint64_t power_count(std::uint64_t q, Index d) {
  std::uint64_t r = 1;
  for (Index i = 0; i < d; ++i) {
    if (r > (std::uint64_t{1} << 40)) return r;
    r *= q;
  }
  return r;
}

}  // namespace

std::vector<Matrix> submodules(const Module& m, const Config& cfg) {
  const FieldSpec f = m.field();
  if (power_count(f.order(), m.dim()) > cfg.enum_cap)
    raise(ErrorKind::EnumCapExceeded, "q^dim exceeds enum_cap; submodule enumeration refused");

  std::map<Key, Matrix> seen;
  const Matrix zero = zeros(f, m.dim(), 0);
  seen.emplace(matrix_key(zero), zero);
  std::vector<Matrix> cyclic;
  for_each_projective(f, m.dim(), [&](const std::vector<FieldElem>& c) {
    Vector v(m.dim());
    for (Index i = 0; i < m.dim(); ++i) v(i) = c[i];
    Matrix w = spin(m, v);
    if (seen.emplace(matrix_key(w), w).second) cyclic.push_back(std::move(w));
    return false;
  });
  // every submodule is a sum of cyclic ones
  std::vector<Matrix> work = cyclic;
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const auto& c : cyclic) {
      Matrix s = span_sum(work[i], c);
      tag(s, f);
      if (seen.emplace(matrix_key(s), s).second) work.push_back(std::move(s));
    }
  }
  std::vector<Matrix> out;
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  std::stable_sort(out.begin(), out.end(), [](const Matrix& a, const Matrix& b) { return a.cols() < b.cols(); });
  return out;
}

namespace {

class FiltSearch {
 public:
  FiltSearch(const std::vector<Module>& members, const Config& cfg)
      : members_(members), cfg_(cfg), semibrick_(is_semibrick(members, cfg)) {}

  std::optional<Filtration> run(const Module& y) {
    if (y.dim() == 0) return Filtration{};
    const Key key = module_key(y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto result = search(y);
    memo_.emplace(key, result);
    return result;
  }

 private:
  std::optional<Filtration> search(const Module& y) {
    const FieldSpec f = y.field();
    for (std::size_t t = 0; t < members_.size(); ++t) {
      const Module& s = members_[t];
      if (s.dim() > y.dim()) continue;
      const HomSpace hom = hom_basis(y, s);
      if (hom.dim() == 0) continue;

      std::set<Key> tried;
      std::optional<Filtration> found;
      bool stop = false;
      // returns true to end the enumeration
      auto attempt = [&](const Matrix& map) {
        if (rank(map) != s.dim()) return false;
        Matrix ker = kernel_basis(map);
        tag(ker, f);
        ker = column_space(ker);
        if (!tried.insert(matrix_key(ker)).second) return false;
        const auto sub = submodule(y, ker);
        if (auto inner = run(sub.module)) {
          Filtration out;
          for (const auto& b : inner->chain) out.chain.push_back(column_space(Matrix(sub.map * b)));
          out.quotient_tags = inner->quotient_tags;
          out.chain.push_back(identity(f, y.dim()));
          out.quotient_tags.push_back(t);
          found = std::move(out);
          return true;
        }
        // In a wide subcategory every kernel of a map to a member stays inside,
        // so one failed kernel settles the question.
        if (semibrick_) stop = true;
        return stop;
      };

      for (const auto& b : hom.basis)
        if (attempt(b)) break;
      if (!found && !stop) {
        if (projective_count(f, hom.dim()) <= cfg_.enum_cap) {
          for_each_projective(f, hom.dim(), [&](const std::vector<FieldElem>& c) { return attempt(hom.combine(c)); });
        } else if (tried.empty() || !semibrick_) {
          detail::Rng rng(cfg_.seed, 0xF117 + t);
          for (std::uint64_t it = 0; it < cfg_.iteration_cap && !found && !stop; ++it)
            attempt(hom.combine(rng.coeffs(f, hom.dim())));
          if (!found && !stop)
            raise(ErrorKind::EnumCapExceeded, "Hom space too large to rule out surjections onto a member");
        }
      }
      if (found) return found;
      if (stop) return std::nullopt;
    }
    return std::nullopt;
  }

  const std::vector<Module>& members_;
  const Config& cfg_;
  bool semibrick_;
  std::map<Key, std::optional<Filtration>> memo_;
};

}  // namespace

std::optional<Filtration> filt_member(const Module& x, const std::vector<Module>& members, const Config& cfg) {
  for (const auto& s : members) require_same_algebra(x, s, "filt_member");
  FiltSearch search(members, cfg);
  return search.run(x);
}

}  // namespace modbrick
