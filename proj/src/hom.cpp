#include "modbrick/hom.hpp"

#include "modbrick/error.hpp"
#include "rng.hpp"

#include <limits>

namespace modbrick {

Matrix HomSpace::combine(const std::vector<FieldElem>& coeffs) const {
  Matrix out = zeros(source.field(), target.dim(), source.dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) out += coeffs[i] * basis[i];
  return out;
}

HomSpace hom_basis(const Module& m, const Module& n) {
  require_same_algebra(m, n, "hom_basis");
  const Index dm = m.dim();
  const Index dn = n.dim();
  const Index unknowns = dm * dn;
  HomSpace out{m, n, {}};
  if (unknowns == 0) return out;

  // X A - B X = 0 for every generator, X stored row-major (index i * dm + j).
  const std::size_t gens = m.group().num_generators();
  Matrix eqs = zeros(m.field(), static_cast<Index>(gens) * unknowns, unknowns);
  for (std::size_t s = 0; s < gens; ++s) {
    const Matrix& a = m.generator_matrix(s);
    const Matrix& b = n.generator_matrix(s);
    const Index base = static_cast<Index>(s) * unknowns;
    for (Index i = 0; i < dn; ++i) {
      for (Index j = 0; j < dm; ++j) {
        const Index row = base + i * dm + j;
        for (Index k = 0; k < dm; ++k)
          if (!a(k, j).is_zero()) eqs(row, i * dm + k) += a(k, j);
        for (Index k = 0; k < dn; ++k)
          if (!b(i, k).is_zero()) eqs(row, k * dm + j) -= b(i, k);
      }
    }
  }
  Matrix ker = kernel_basis(eqs);
  tag(ker, m.field());
  for (Index c = 0; c < ker.cols(); ++c)
    out.basis.emplace_back(Eigen::Map<const Matrix>(ker.col(c).eval().data(), dn, dm));
  return out;
}

Index hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).dim(); }

EndAlgebra end_algebra(const Module& m) {
  EndAlgebra out{m, hom_basis(m, m).basis, {}};
  const Index h = static_cast<Index>(out.basis.size());
  const Index d2 = m.dim() * m.dim();
  Matrix flat(d2, h);
  for (Index i = 0; i < h; ++i) flat.col(i) = Eigen::Map<const Vector>(out.basis[i].data(), d2);
  out.mult_table.resize(h);
  for (Index i = 0; i < h; ++i) {
    for (Index j = 0; j < h; ++j) {
      const Matrix prod = out.basis[i] * out.basis[j];
      const auto c = solve_linear(flat, Eigen::Map<const Vector>(prod.data(), d2));
      if (!c) raise(ErrorKind::NotAHomomorphism, "endomorphisms are not closed under composition");
      out.mult_table[i].emplace_back(c->data(), c->data() + h);
    }
  }
  return out;
}

std::uint64_t projective_count(const FieldSpec& f, Index h) {
  const std::uint64_t q = f.order();
  std::uint64_t total = 0;
  std::uint64_t power = 1;  // q^(h - 1 - lead)
  for (Index lead = 0; lead < h; ++lead) {
    total += power;
    if (power > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    power *= q;
  }
  return total;
}

bool for_each_projective(const FieldSpec& f, Index h,
                         const std::function<bool(const std::vector<FieldElem>&)>& visit) {
  const std::uint32_t q = f.order();
  std::vector<FieldElem> c(h, f.zero());
  for (Index lead = 0; lead < h; ++lead) {
    std::fill(c.begin(), c.end(), f.zero());
    c[lead] = f.one();
    // odometer over the coordinates after `lead`
    while (true) {
      if (visit(c)) return true;
      Index k = h - 1;
      while (k > lead) {
        const std::uint32_t next = c[k].code() + 1;
        if (next < q) {
          c[k] = f.from_code(next);
          break;
        }
        c[k] = f.zero();
        --k;
      }
      if (k == lead) break;
    }
  }
  return false;
}

std::optional<ModuleMap> is_isomorphic(const Module& m, const Module& n, const Config& cfg) {
  require_same_algebra(m, n, "is_isomorphic");
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return ModuleMap(m, n, zeros(m.field(), 0, 0));
  const HomSpace hom = hom_basis(m, n);
  if (hom.dim() == 0) return std::nullopt;
  // An isomorphism identifies both Hom spaces with End(M) and End(N).
  if (hom_dim(m, m) != hom.dim() || hom_dim(n, n) != hom.dim() || hom_dim(n, m) != hom.dim())
    return std::nullopt;

  for (const auto& b : hom.basis)
    if (is_invertible(b)) return ModuleMap(m, n, b);

  std::optional<Matrix> found;
  if (projective_count(m.field(), hom.dim()) <= cfg.enum_cap) {
    for_each_projective(m.field(), hom.dim(), [&](const std::vector<FieldElem>& c) {
      Matrix x = hom.combine(c);
      if (!is_invertible(x)) return false;
      found = std::move(x);
      return true;
    });
    if (!found) return std::nullopt;
    return ModuleMap(m, n, *found);
  }
  detail::Rng rng(cfg.seed, 0x150);
  for (std::uint64_t it = 0; it < cfg.iteration_cap; ++it) {
    Matrix x = hom.combine(rng.coeffs(m.field(), hom.dim()));
    if (is_invertible(x)) return ModuleMap(m, n, x);
  }
  raise(ErrorKind::Indeterminate, "no isomorphism found within iteration_cap and the Hom space exceeds enum_cap");
}

Matrix trace_in(const Module& x, const std::vector<Module>& gens) {
  std::vector<Matrix> images;
  Index cols = 0;
  for (const auto& c : gens) {
    for (auto& b : hom_basis(c, x).basis) {
      cols += b.cols();
      images.push_back(std::move(b));
    }
  }
  Matrix all = zeros(x.field(), x.dim(), cols);
  Index off = 0;
  for (const auto& b : images) {
    all.middleCols(off, b.cols()) = b;
    off += b.cols();
  }
  Matrix out = column_space(all);
  tag(out, x.field());
  return out;
}

}  // namespace modbrick
