// Simple submodules by the MeatAxe: for a random algebra element A and an
// irreducible f with f(A) singular, spin a null vector of f(A). A proper span
// is a submodule; a proper span under the transposed action gives one through
// its annihilator; and when both spans are everything with nullity(f(A)) =
// deg f, Norton's criterion proves the module irreducible.

#include "modbrick/error.hpp"
#include "modbrick/hom.hpp"
#include "rng.hpp"

#include <algorithm>

namespace modbrick {

namespace {

// Monic polynomials of degree 1..3 with no root in the field, low degree first.
// Without a root, degrees 2 and 3 are irreducible.
std::vector<std::vector<FieldElem>> small_irreducibles(const FieldSpec& f) {
  const auto elems = f.elements();
  std::vector<std::vector<FieldElem>> out;
  for (int deg = 1; deg <= 3; ++deg) {
    std::vector<std::size_t> idx(deg, 0);
    while (true) {
      std::vector<FieldElem> poly;
      for (int i = 0; i < deg; ++i) poly.push_back(elems[idx[i]]);
      poly.push_back(f.one());
      bool has_root = false;
      if (deg > 1) {
        for (const auto& r : elems) {
          FieldElem acc = f.zero();
          for (int i = deg; i >= 0; --i) acc = acc * r + poly[i];
          if (acc.is_zero()) {
            has_root = true;
            break;
          }
        }
      }
      if (!has_root) out.push_back(std::move(poly));
      int k = 0;
      while (k < deg && ++idx[k] == elems.size()) idx[k++] = 0;
      if (k == deg) break;
    }
  }
  return out;
}

Matrix spin_transposed(const Module& m, const Vector& w) {
  EchelonBasis<FieldElem> eb(m.dim());
  std::vector<Vector> todo;
  if (eb.insert(w)) todo.push_back(w);
  for (std::size_t i = 0; i < todo.size() && eb.size() < m.dim(); ++i) {
    for (const auto& a : m.action()) {
      Vector next = a.transpose() * todo[i];
      if (eb.insert(next)) todo.push_back(std::move(next));
    }
  }
  return eb.matrix();
}

// Exhaustive fallback: a cyclic submodule of least dimension is simple.
std::optional<Matrix> minimal_cyclic(const Module& m, const Config& cfg) {
  if (projective_count(m.field(), m.dim()) > cfg.enum_cap) return std::nullopt;
  Matrix best;
  Index best_dim = m.dim() + 1;
  for_each_projective(m.field(), m.dim(), [&](const std::vector<FieldElem>& c) {
    Vector v(m.dim());
    for (Index i = 0; i < m.dim(); ++i) v(i) = c[i];
    Matrix w = spin(m, v);
    if (w.cols() < best_dim) {
      best_dim = w.cols();
      best = std::move(w);
    }
    return best_dim == 1;
  });
  return best;
}

enum class Verdict { Simple, Reduced, Unknown };

// One MeatAxe round on `cur`. On Reduced, `sub` is a proper nonzero submodule.
Verdict meataxe_round(const Module& cur, detail::Rng& rng, const std::vector<std::vector<FieldElem>>& polys,
                      Matrix& sub) {
  const FieldSpec f = cur.field();
  const Index d = cur.dim();
  const Group& g = cur.group();
  Matrix a = zeros(f, d, d);
  const std::size_t terms = std::min<std::size_t>(g.order(), 12);
  for (std::size_t t = 0; t < terms; ++t) {
    const std::size_t x = g.order() <= 12 ? t : rng.below(g.order());
    a += rng.elem(f) * cur.element_matrix(x);
  }
  const Matrix id = identity(f, d);
  const Matrix a2 = a * a;
  const Matrix a3 = a2 * a;
  const Matrix* powers[] = {&id, &a, &a2, &a3};

  for (const auto& poly : polys) {
    const Index deg = static_cast<Index>(poly.size()) - 1;
    Matrix theta = zeros(f, d, d);
    for (Index i = 0; i <= deg; ++i)
      if (!poly[i].is_zero()) theta += poly[i] * *powers[i];
    const Matrix ker = kernel_basis(theta);
    if (ker.cols() == 0) continue;
    Matrix w = spin(cur, Vector(ker.col(0)));
    if (w.cols() < d) {
      sub = std::move(w);
      return Verdict::Reduced;
    }
    if (ker.cols() != deg) continue;
    const Matrix kert = kernel_basis(Matrix(theta.transpose()));
    const Matrix u = spin_transposed(cur, kert.col(0));
    if (u.cols() < d) {
      sub = kernel_basis(Matrix(u.transpose()));
      tag(sub, f);
      sub = column_space(sub);
      return Verdict::Reduced;
    }
    return Verdict::Simple;
  }
  return Verdict::Unknown;
}

}  // namespace

Matrix simple_submodule(const Module& m, const Config& cfg) {
  if (m.dim() == 0) raise(ErrorKind::DimensionMismatch, "the zero module has no simple submodule");
  const auto polys = small_irreducibles(m.field());
  detail::Rng rng(cfg.seed, 0x51);
  Module cur = m;
  Matrix embed = identity(m.field(), m.dim());
  std::uint64_t rounds = 0;
  while (cur.dim() > 1) {
    if (rounds++ >= cfg.iteration_cap) {
      if (auto w = minimal_cyclic(cur, cfg)) return column_space(Matrix(embed * *w));
      raise(ErrorKind::Indeterminate, "MeatAxe made no progress within iteration_cap");
    }
    Matrix sub;
    const Verdict v = meataxe_round(cur, rng, polys, sub);
    if (v == Verdict::Simple) break;
    if (v == Verdict::Reduced) {
      auto s = submodule(cur, sub);
      cur = s.module;
      embed = embed * s.map;
    }
  }
  Matrix out = column_space(embed);
  tag(out, m.field());
  return out;
}

bool is_simple(const Module& m, const Config& cfg) {
  if (m.dim() == 0) return false;
  return simple_submodule(m, cfg).cols() == m.dim();
}

Index CompositionFactors::total_length() const {
  Index n = 0;
  for (const auto& f : factors) n += f.second;
  return n;
}

CompositionFactors composition_factors(const Module& m, const Config& cfg) {
  CompositionFactors out;
  Module cur = m;
  while (cur.dim() > 0) {
    const Matrix b = simple_submodule(cur, cfg);
    const Module s = submodule(cur, b).module;
    bool matched = false;
    for (auto& [rep, mult] : out.factors) {
      if (rep.dim() == s.dim() && hom_dim(s, rep) > 0) {
        ++mult;
        matched = true;
        break;
      }
    }
    if (!matched) out.factors.emplace_back(s.renamed("simple" + std::to_string(out.factors.size())), 1);
    cur = quotient(cur, b).module;
  }
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const auto& a, const auto& b) { return a.first.dim() < b.first.dim(); });
  return out;
}

std::vector<int> composition_multiplicities(const Module& m, const std::vector<Module>& simples, const Config& cfg) {
  std::vector<int> out(simples.size(), 0);
  for (const auto& [s, mult] : composition_factors(m, cfg).factors) {
    bool matched = false;
    for (std::size_t i = 0; i < simples.size(); ++i) {
      if (simples[i].dim() == s.dim() && hom_dim(s, simples[i]) > 0) {
        out[i] += mult;
        matched = true;
        break;
      }
    }
    if (!matched)
      raise(ErrorKind::DimensionMismatch, "composition factor of dimension " + std::to_string(s.dim()) +
                                              " is not among the given simples");
  }
  return out;
}

}  // namespace modbrick
