#include "modbrick/error.hpp"
#include "modbrick/hom.hpp"

namespace modbrick {

namespace {

Vector flatten(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

}  // namespace

Ext1Space ext1_basis(const Module& m, const Module& n) {
  require_same_algebra(m, n, "ext1_basis");
  const Group& g = m.group();
  const FieldSpec f = m.field();
  const Index dm = m.dim();
  const Index order = static_cast<Index>(g.order());
  const Module free = free_module(g, f, dm);

  // free generator (c, e) goes to the basis vector e_c
  Matrix cover = zeros(f, dm, dm * order);
  for (Index c = 0; c < dm; ++c)
    for (Index x = 0; x < order; ++x) cover.col(c * order + x) = m.element_matrix(x).col(c);
  Matrix kbasis = kernel_basis(cover);
  tag(kbasis, f);
  const auto syz = submodule(free, kbasis);

  Ext1Space out{m, n, syz.module, syz.map, {}};
  const HomSpace hk = hom_basis(syz.module, n);
  if (hk.dim() == 0) return out;

  // Hom(F0, N) = N^{dim M}: the map sending free generator c to e_v, restricted to K.
  EchelonBasis<FieldElem> image(n.dim() * kbasis.cols());
  for (Index c = 0; c < dm; ++c) {
    for (Index v = 0; v < n.dim(); ++v) {
      Matrix fmap = zeros(f, n.dim(), dm * order);
      for (Index x = 0; x < order; ++x) fmap.col(c * order + x) = n.element_matrix(x).col(v);
      image.insert(flatten(Matrix(fmap * kbasis)));
    }
  }
  for (const auto& b : hk.basis)
    if (image.insert(flatten(b))) out.reps.push_back(b);
  return out;
}

ExtensionSpace extension_space(const Module& m, const Module& n) {
  require_same_algebra(m, n, "extension_space");
  const Group& g = m.group();
  const FieldSpec f = m.field();
  const Index dm = m.dim();
  const Index dn = n.dim();
  const Index block = dm * dn;
  const std::size_t gens = g.num_generators();
  const Index unknowns = static_cast<Index>(gens) * block;
  ExtensionSpace out{m, n, {}};
  if (block == 0) return out;

  // For unit cocycle k, extend c to all elements by C(xs) = rho_N(x) c_s + C(x) rho_M(s)
  // along the BFS tree, then record the defect on every non-tree edge.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t s = 0; s < gens; ++s) {
      const std::size_t y = g.mul(x, g.generator_element(s));
      if (y == 0 || g.parent(y) != x || g.parent_generator(y) != s) edges.emplace_back(x, s);
    }
  Matrix eqs = zeros(f, static_cast<Index>(edges.size()) * block, unknowns);
  std::vector<Matrix> unit(gens);
  std::vector<Matrix> cval(g.order());
  for (Index k = 0; k < unknowns; ++k) {
    for (std::size_t s = 0; s < gens; ++s) unit[s] = zeros(f, dn, dm);
    unit[k / block](k % block / dm, k % dm) = f.one();
    cval[0] = zeros(f, dn, dm);
    for (std::size_t y = 1; y < g.order(); ++y) {
      const std::size_t x = g.parent(y);
      const std::size_t s = g.parent_generator(y);
      cval[y] = n.element_matrix(x) * unit[s] + cval[x] * m.generator_matrix(s);
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [x, s] = edges[e];
      const std::size_t y = g.mul(x, g.generator_element(s));
      const Matrix defect = cval[y] - n.element_matrix(x) * unit[s] - cval[x] * m.generator_matrix(s);
      eqs.block(static_cast<Index>(e) * block, k, block, 1) = flatten(defect);
    }
  }
  Matrix cocycles = kernel_basis(eqs);
  tag(cocycles, f);

  EchelonBasis<FieldElem> span(unknowns);
  for (Index i = 0; i < dn; ++i) {
    for (Index j = 0; j < dm; ++j) {
      Matrix a = zeros(f, dn, dm);
      a(i, j) = f.one();
      Vector cob(unknowns);
      for (std::size_t s = 0; s < gens; ++s)
        cob.segment(static_cast<Index>(s) * block, block) =
            flatten(Matrix(a * m.generator_matrix(s) - n.generator_matrix(s) * a));
      span.insert(cob);
    }
  }
  for (Index c = 0; c < cocycles.cols(); ++c) {
    if (!span.insert(cocycles.col(c))) continue;
    std::vector<Matrix> rep;
    for (std::size_t s = 0; s < gens; ++s) {
      const Vector part = cocycles.col(c).segment(static_cast<Index>(s) * block, block);
      rep.emplace_back(Eigen::Map<const Matrix>(part.data(), dn, dm));
    }
    out.reps.push_back(std::move(rep));
  }
  return out;
}

Index ext1_dim(const Module& m, const Module& n) { return extension_space(m, n).dim(); }

Module extension_module(const Module& m, const Module& n, const std::vector<Matrix>& cocycle, std::string name) {
  require_same_algebra(m, n, "extension_module");
  const Index dm = m.dim();
  const Index dn = n.dim();
  if (cocycle.size() != m.group().num_generators())
    raise(ErrorKind::DimensionMismatch, "one cocycle block per generator expected");
  std::vector<Matrix> action;
  for (std::size_t s = 0; s < cocycle.size(); ++s) {
    if (cocycle[s].rows() != dn || cocycle[s].cols() != dm)
      raise(ErrorKind::DimensionMismatch, "cocycle block has the wrong shape");
    Matrix e = zeros(m.field(), dn + dm, dn + dm);
    e.topLeftCorner(dn, dn) = n.generator_matrix(s);
    e.topRightCorner(dn, dm) = cocycle[s];
    e.bottomRightCorner(dm, dm) = m.generator_matrix(s);
    action.push_back(std::move(e));
  }
  if (name.empty()) name = "[" + m.name() + ";" + n.name() + "]";
  return Module::make(m.group(), m.field(), dn + dm, std::move(action), std::move(name));
}

}  // namespace modbrick
