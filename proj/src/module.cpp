#include "modbrick/module.hpp"

#include "modbrick/error.hpp"

#include <mutex>

namespace modbrick {

namespace detail {

struct ModuleData {
  Group group;
  FieldSpec field;
  Index dim = 0;
  std::vector<Matrix> action;
  std::string name;

  mutable std::once_flag elems_once;
  mutable std::vector<Matrix> elems;

  ModuleData(Group g, FieldSpec f, Index d, std::vector<Matrix> a, std::string n)
      : group(std::move(g)), field(f), dim(d), action(std::move(a)), name(std::move(n)) {}

  void fill_elements() const {
    std::call_once(elems_once, [this] {
      std::vector<Matrix> out(group.order());
      out[0] = identity(field, dim);
      for (std::size_t i = 1; i < group.order(); ++i)
        out[i] = out[group.parent(i)] * action[group.parent_generator(i)];
      elems = std::move(out);
    });
  }
};

}  // namespace detail

namespace {

std::shared_ptr<detail::ModuleData> prepare(Group g, FieldSpec f, Index dim, std::vector<Matrix> action,
                                            std::string name) {
  if (dim < 0) raise(ErrorKind::DimensionMismatch, "negative dimension");
  if (action.size() != g.num_generators())
    raise(ErrorKind::DimensionMismatch, "expected " + std::to_string(g.num_generators()) +
                                            " generator matrices, got " + std::to_string(action.size()));
  for (auto& m : action) {
    if (m.rows() != dim || m.cols() != dim)
      raise(ErrorKind::DimensionMismatch, "action matrix is not " + std::to_string(dim) + "x" + std::to_string(dim));
    tag(m, f);
  }
  return std::make_shared<detail::ModuleData>(std::move(g), f, dim, std::move(action), std::move(name));
}

}  // namespace

Module detail::make_unchecked(Group g, FieldSpec f, Index dim, std::vector<Matrix> action, std::string name) {
  return Module(prepare(std::move(g), f, dim, std::move(action), std::move(name)));
}

Module Module::make(Group group, FieldSpec field, Index dim, std::vector<Matrix> action, std::string name) {
  auto d = prepare(std::move(group), field, dim, std::move(action), std::move(name));
  for (std::size_t s = 0; s < d->action.size(); ++s)
    if (!is_invertible(d->action[s]))
      raise(ErrorKind::NotInvertible, "matrix for generator " + d->group.generator_name(s) + " is singular");
  d->fill_elements();
  const Group& g = d->group;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t s = 0; s < g.num_generators(); ++s) {
      const std::size_t y = g.mul(x, g.generator_element(s));
      if (d->elems[x] * d->action[s] != d->elems[y])
        raise(ErrorKind::NotAHomomorphism, "rho(" + g.word_string(x) + ") * rho(" + g.generator_name(s) +
                                               ") differs from rho(" + g.word_string(y) + ")");
    }
  }
  return Module(std::move(d));
}

Module module_make(Group group, FieldSpec field, Index dim, std::vector<Matrix> action, std::string name) {
  return Module::make(std::move(group), field, dim, std::move(action), std::move(name));
}

const Group& Module::group() const { return d_->group; }
FieldSpec Module::field() const { return d_->field; }
Index Module::dim() const { return d_->dim; }
const std::string& Module::name() const { return d_->name; }

Module Module::renamed(std::string name) const {
  auto d = std::make_shared<detail::ModuleData>(d_->group, d_->field, d_->dim, d_->action, std::move(name));
  return Module(std::move(d));
}

const std::vector<Matrix>& Module::action() const { return d_->action; }
const Matrix& Module::generator_matrix(std::size_t s) const { return d_->action.at(s); }

const Matrix& Module::element_matrix(std::size_t i) const {
  d_->fill_elements();
  return d_->elems.at(i);
}

const Matrix& Module::element_matrix(const Perm& g) const {
  auto i = d_->group.index_of(g);
  if (!i) raise(ErrorKind::NotASubgroup, "element " + perm_to_cycles(g) + " is not in the module's group");
  return element_matrix(*i);
}

bool Module::same_action(const Module& other) const {
  if (d_ == other.d_) return true;
  if (field() != other.field() || group() != other.group() || dim() != other.dim()) return false;
  for (std::size_t s = 0; s < d_->action.size(); ++s)
    if (d_->action[s] != other.d_->action[s]) return false;
  return true;
}

void require_same_algebra(const Module& a, const Module& b, const char* what) {
  if (a.group() != b.group()) raise(ErrorKind::GroupMismatch, std::string(what) + ": modules over different groups");
  if (a.field() != b.field()) raise(ErrorKind::FieldMismatch, std::string(what) + ": modules over different fields");
}

bool intertwines(const Module& source, const Module& target, const Matrix& m) {
  if (m.rows() != target.dim() || m.cols() != source.dim()) return false;
  for (std::size_t s = 0; s < source.group().num_generators(); ++s)
    if (m * source.generator_matrix(s) != target.generator_matrix(s) * m) return false;
  return true;
}

ModuleMap::ModuleMap(Module source, Module target, Matrix matrix)
    : src_(std::move(source)), dst_(std::move(target)), m_(std::move(matrix)) {
  require_same_algebra(src_, dst_, "ModuleMap");
  if (m_.rows() != dst_.dim() || m_.cols() != src_.dim())
    raise(ErrorKind::DimensionMismatch, "map matrix has the wrong shape");
  tag(m_, src_.field());
  if (!intertwines(src_, dst_, m_)) raise(ErrorKind::NotAHomomorphism, "matrix does not intertwine the actions");
}

ModuleMap ModuleMap::compose(const ModuleMap& first) const {
  if (first.target().dim() != src_.dim()) raise(ErrorKind::DimensionMismatch, "maps are not composable");
  return ModuleMap(first.source(), dst_, Matrix(m_ * first.matrix()));
}

bool ModuleMap::is_injective() const { return rank(m_) == src_.dim(); }
bool ModuleMap::is_surjective() const { return rank(m_) == dst_.dim(); }
bool ModuleMap::is_iso() const { return src_.dim() == dst_.dim() && is_injective(); }

Module trivial_module(const Group& g, const FieldSpec& f) {
  return detail::make_unchecked(g, f, 1, std::vector<Matrix>(g.num_generators(), identity(f, 1)), "k");
}

Module zero_module(const Group& g, const FieldSpec& f) {
  return detail::make_unchecked(g, f, 0, std::vector<Matrix>(g.num_generators(), zeros(f, 0, 0)), "0");
}

Module linear_character(const Group& g, const FieldSpec& f, const std::vector<FieldElem>& values,
                        std::string name) {
  std::vector<Matrix> action;
  for (const auto& v : values) {
    Matrix m = zeros(f, 1, 1);
    m(0, 0) = v;
    action.push_back(std::move(m));
  }
  return Module::make(g, f, 1, std::move(action), std::move(name));
}

Module restrict(const Module& m, const Group& sub) {
  std::vector<Matrix> action;
  for (const auto& [name, p] : sub.generators()) {
    auto i = m.group().index_of(p);
    if (!i || sub.degree() != m.group().degree())
      raise(ErrorKind::NotASubgroup, "generator " + name + " is not in the module's group");
    action.push_back(m.element_matrix(*i));
  }
  return detail::make_unchecked(sub, m.field(), m.dim(), std::move(action), "Res(" + m.name() + ")");
}

Module induce(const Module& v, const Group& ambient) {
  if (!is_normal(ambient, v.group())) raise(ErrorKind::NotNormal, "induction needs a normal subgroup");
  const CosetSystem cs(ambient, v.group());
  const Index d = v.dim();
  const Index idx = static_cast<Index>(cs.index());
  std::vector<Matrix> action;
  for (std::size_t s = 0; s < ambient.num_generators(); ++s) {
    Matrix m = zeros(v.field(), idx * d, idx * d);
    for (Index i = 0; i < idx; ++i) {
      const auto [j, n] = cs.split(ambient.generator_element(s), static_cast<std::size_t>(i));
      m.block(static_cast<Index>(j) * d, i * d, d, d) = v.element_matrix(n);
    }
    action.push_back(std::move(m));
  }
  return detail::make_unchecked(ambient, v.field(), idx * d, std::move(action), "Ind(" + v.name() + ")");
}

Module tensor(const Module& a, const Module& b) {
  require_same_algebra(a, b, "tensor");
  std::vector<Matrix> action;
  for (std::size_t s = 0; s < a.group().num_generators(); ++s)
    action.push_back(kronecker(a.generator_matrix(s), b.generator_matrix(s)));
  return detail::make_unchecked(a.group(), a.field(), a.dim() * b.dim(), std::move(action),
                                "(" + a.name() + " x " + b.name() + ")");
}

Module conjugate(const Perm& g, const Module& u) {
  const Group& n = u.group();
  if (static_cast<int>(g.size()) != n.degree())
    raise(ErrorKind::ConjugationLeavesSubgroup, "conjugating element has the wrong degree");
  const Perm ginv = perm_inverse(g);
  std::vector<Matrix> action;
  for (const auto& [name, x] : n.generators()) {
    auto y = n.index_of(perm_compose(perm_compose(ginv, x), g));
    if (!y) raise(ErrorKind::ConjugationLeavesSubgroup, "g^-1 " + name + " g leaves the subgroup");
    action.push_back(u.element_matrix(*y));
  }
  return detail::make_unchecked(n, u.field(), u.dim(), std::move(action), perm_to_cycles(g) + "." + u.name());
}

Module perm_module(const Group& ambient, const Group& normal, const FieldSpec& f) {
  const CosetSystem cs = coset_reps(ambient, normal);
  const Index idx = static_cast<Index>(cs.index());
  std::vector<Matrix> action;
  for (std::size_t s = 0; s < ambient.num_generators(); ++s) {
    Matrix m = zeros(f, idx, idx);
    for (Index i = 0; i < idx; ++i) m(static_cast<Index>(cs.split(ambient.generator_element(s), i).first), i) = f.one();
    action.push_back(std::move(m));
  }
  return detail::make_unchecked(ambient, f, idx, std::move(action), "k[G/N]");
}

Module direct_sum(const Group& g, const FieldSpec& f, const std::vector<Module>& parts) {
  Index total = 0;
  std::string name;
  for (const auto& p : parts) {
    if (p.group() != g) raise(ErrorKind::GroupMismatch, "direct_sum: modules over different groups");
    if (p.field() != f) raise(ErrorKind::FieldMismatch, "direct_sum: modules over different fields");
    total += p.dim();
    name += (name.empty() ? "" : " + ") + p.name();
  }
  std::vector<Matrix> action;
  for (std::size_t s = 0; s < g.num_generators(); ++s) {
    Matrix m = zeros(f, total, total);
    Index off = 0;
    for (const auto& p : parts) {
      m.block(off, off, p.dim(), p.dim()) = p.generator_matrix(s);
      off += p.dim();
    }
    action.push_back(std::move(m));
  }
  return detail::make_unchecked(g, f, total, std::move(action), name.empty() ? "0" : name);
}

Module direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) return zero_module(groups::trivial(), gf_make(2, 1));
  return direct_sum(parts.front().group(), parts.front().field(), parts);
}

Module free_module(const Group& g, const FieldSpec& f, Index rank) {
  const Index n = static_cast<Index>(g.order());
  std::vector<Matrix> action;
  for (std::size_t s = 0; s < g.num_generators(); ++s) {
    Matrix m = zeros(f, rank * n, rank * n);
    const std::size_t gs = g.generator_element(s);
    for (Index c = 0; c < rank; ++c)
      for (Index x = 0; x < n; ++x) m(c * n + static_cast<Index>(g.mul(gs, x)), c * n + x) = f.one();
    action.push_back(std::move(m));
  }
  return detail::make_unchecked(g, f, rank * n, std::move(action), rank == 1 ? "kG" : "kG^" + std::to_string(rank));
}

Module extend_scalars(const Module& m, const FieldEmbedding& emb) {
  if (emb.source() != m.field()) raise(ErrorKind::FieldMismatch, "embedding does not start at the module's field");
  std::vector<Matrix> action;
  for (const auto& a : m.action()) action.push_back(a.unaryExpr([&](FieldElem x) { return emb(x); }));
  return detail::make_unchecked(m.group(), emb.target(), m.dim(), std::move(action), m.name());
}

bool is_submodule(const Module& m, const Matrix& basis) {
  const Index k = rank(basis);
  for (const auto& a : m.action()) {
    Matrix both(m.dim(), basis.cols() * 2);
    both << basis, a * basis;
    if (rank(both) != k) return false;
  }
  return true;
}

Matrix spin(const Module& m, const Matrix& vectors) {
  EchelonBasis<FieldElem> eb(m.dim());
  std::vector<Vector> todo;
  for (Index c = 0; c < vectors.cols(); ++c)
    if (eb.insert(vectors.col(c))) todo.emplace_back(vectors.col(c));
  for (std::size_t i = 0; i < todo.size() && eb.size() < m.dim(); ++i) {
    for (const auto& a : m.action()) {
      Vector w = a * todo[i];
      if (eb.insert(w)) todo.push_back(std::move(w));
    }
  }
  if (eb.size() == 0) return zeros(m.field(), m.dim(), 0);
  return column_space(eb.matrix());
}

SubQuotient submodule(const Module& m, const Matrix& basis) {
  if (basis.cols() == 0) return {zero_module(m.group(), m.field()), zeros(m.field(), m.dim(), 0)};
  const Matrix left = left_inverse(basis);
  std::vector<Matrix> action;
  for (const auto& a : m.action()) {
    Matrix image = a * basis;
    if (basis * (left * image) != image) raise(ErrorKind::DimensionMismatch, "subspace is not invariant");
    action.push_back(left * image);
  }
  Matrix inc = basis;
  tag(inc, m.field());
  return {detail::make_unchecked(m.group(), m.field(), basis.cols(), std::move(action), "sub(" + m.name() + ")"),
          std::move(inc)};
}

SubQuotient quotient(const Module& m, const Matrix& basis) {
  const Index d = m.dim();
  const Index k = basis.cols();
  const Matrix comp = complement_basis(basis, m.field().one());
  Matrix full(d, d);
  full << basis, comp;
  const auto inv = inverse_matrix(full);
  if (!inv) raise(ErrorKind::DimensionMismatch, "quotient: basis columns are dependent");
  Matrix proj = inv->bottomRows(d - k);
  std::vector<Matrix> action;
  for (const auto& a : m.action()) {
    Matrix image = a * basis;
    if (!is_zero_matrix(proj * image)) raise(ErrorKind::DimensionMismatch, "subspace is not invariant");
    action.push_back(proj * a * comp);
  }
  return {detail::make_unchecked(m.group(), m.field(), d - k, std::move(action), "quot(" + m.name() + ")"),
          std::move(proj)};
}

Matrix map_kernel(const Matrix& m) { return kernel_basis(m); }
Matrix map_image(const Matrix& m) { return column_space(m); }

}  // namespace modbrick
