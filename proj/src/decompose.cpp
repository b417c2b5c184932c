#include "modbrick/error.hpp"
#include "modbrick/hom.hpp"
#include "rng.hpp"

namespace modbrick {

namespace {

struct Piece {
  Module mod;
  Matrix embed;  // original.dim x mod.dim
};

// Fitting: for phi in End(P), P = im phi^d (+) ker phi^d. Returns the two bases
// when the splitting is proper.
std::optional<std::pair<Matrix, Matrix>> fitting_split(const Matrix& phi) {
  const Index d = phi.rows();
  Matrix psi = phi;
  for (Index e = 1; e < d; e *= 2) psi = psi * psi;
  const Index r = rank(psi);
  if (r == 0 || r == d) return std::nullopt;
  return std::make_pair(column_space(psi), kernel_basis(psi));
}

std::optional<std::pair<Matrix, Matrix>> find_split(const Module& p, const Config& cfg) {
  const FieldSpec f = p.field();
  const HomSpace end = hom_basis(p, p);
  if (end.dim() <= 1) return std::nullopt;

  const Matrix id = identity(f, p.dim());
  for (const auto& b : end.basis) {
    for (const auto& lambda : f.elements()) {
      if (auto s = fitting_split(b - lambda * id)) return s;
    }
  }
  std::optional<std::pair<Matrix, Matrix>> found;
  if (projective_count(f, end.dim()) <= cfg.enum_cap) {
    // End is local iff every element is nilpotent or invertible.
    for_each_projective(f, end.dim(), [&](const std::vector<FieldElem>& c) {
      found = fitting_split(end.combine(c));
      return found.has_value();
    });
    return found;
  }
  detail::Rng rng(cfg.seed, 0xDEC);
  for (std::uint64_t it = 0; it < cfg.iteration_cap; ++it)
    if (auto s = fitting_split(end.combine(rng.coeffs(f, end.dim())))) return s;
  raise(ErrorKind::Indeterminate, "no splitting endomorphism found and End exceeds enum_cap");
}

}  // namespace

Index Decomposition::num_indecomposables() const {
  Index n = 0;
  for (const auto& s : summands) n += s.second;
  return n;
}

Module Decomposition::direct_sum_module() const {
  std::vector<Module> parts;
  for (const auto& [mod, mult] : summands)
    for (int i = 0; i < mult; ++i) parts.push_back(mod);
  return direct_sum(original.group(), original.field(), parts);
}

Decomposition decompose(const Module& m, const Config& cfg) {
  std::vector<Piece> todo{{m, identity(m.field(), m.dim())}};
  std::vector<Piece> done;
  while (!todo.empty()) {
    Piece p = std::move(todo.back());
    todo.pop_back();
    if (p.mod.dim() == 0) continue;
    auto split = p.mod.dim() > 1 ? find_split(p.mod, cfg) : std::nullopt;
    if (!split) {
      done.push_back(std::move(p));
      continue;
    }
    // push in reverse so the image part is processed first
    for (const Matrix* basis : {&split->second, &split->first}) {
      auto sub = submodule(p.mod, *basis);
      todo.push_back({sub.module, p.embed * sub.map});
    }
  }

  struct Class {
    Module rep;
    std::vector<Matrix> embeds;
  };
  std::vector<Class> classes;
  for (auto& p : done) {
    bool placed = false;
    for (auto& c : classes) {
      if (c.rep.dim() != p.mod.dim()) continue;
      if (auto iso = is_isomorphic(c.rep, p.mod, cfg)) {
        c.embeds.push_back(p.embed * iso->matrix());
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({p.mod, {p.embed}});
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const Class& a, const Class& b) { return a.rep.dim() < b.rep.dim(); });

  Decomposition out{m, {}, zeros(m.field(), m.dim(), m.dim())};
  Index col = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    const std::string name = m.name() + "#" + std::to_string(i);
    out.summands.emplace_back(c.rep.renamed(name), static_cast<int>(c.embeds.size()));
    for (const auto& e : c.embeds) {
      out.witness.middleCols(col, e.cols()) = e;
      col += e.cols();
    }
  }
  return out;
}

bool is_indecomposable(const Module& m, const Config& cfg) {
  if (m.dim() == 0) return false;
  return !find_split(m, cfg).has_value();
}

bool is_brick(const Module& m, const Config& cfg) {
  if (m.dim() == 0) return false;
  const HomSpace end = hom_basis(m, m);
  if (end.dim() == 1) return true;
  for (const auto& b : end.basis)
    if (!is_invertible(b)) return false;
  if (projective_count(m.field(), end.dim()) > cfg.enum_cap)
    raise(ErrorKind::EnumCapExceeded, "End has dimension " + std::to_string(end.dim()) + " over " +
                                          m.field().name() + "; too many elements to certify");
  const bool bad = for_each_projective(m.field(), end.dim(),
                                       [&](const std::vector<FieldElem>& c) { return !is_invertible(end.combine(c)); });
  return !bad;
}

bool is_semibrick(const std::vector<Module>& mods, const Config& cfg) {
  for (const auto& s : mods)
    if (!is_brick(s, cfg)) return false;
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i + 1; j < mods.size(); ++j)
      if (hom_dim(mods[i], mods[j]) != 0 || hom_dim(mods[j], mods[i]) != 0) return false;
  return true;
}

bool is_semibrick_module(const Module& m, const Config& cfg) {
  const Decomposition dec = decompose(m, cfg);
  std::vector<Module> distinct;
  for (const auto& s : dec.summands) distinct.push_back(s.first);
  return is_semibrick(distinct, cfg);
}

}  // namespace modbrick
