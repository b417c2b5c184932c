#include "modbrick/group.hpp"

#include "modbrick/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace modbrick {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

void check_perm(const Perm& p, int degree, const std::string& name) {
  if (static_cast<int>(p.size()) != degree)
    raise(ErrorKind::NotAPermutation, name + ": expected " + std::to_string(degree) + " images");
  std::vector<bool> seen(degree, false);
  for (int x : p) {
    if (x < 0 || x >= degree || seen[x]) raise(ErrorKind::NotAPermutation, name + " is not a bijection");
    seen[x] = true;
  }
}

}  // namespace

namespace detail {

struct GroupData {
  int degree = 0;
  Group::Generators gens;
  std::vector<std::size_t> gen_elem;
  std::vector<Perm> elems;
  std::unordered_map<Perm, std::size_t, PermHash> index;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> parent_gen;
  std::vector<std::size_t> inverse;
  std::vector<std::uint32_t> table;  // full multiplication table when small
};

}  // namespace detail

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<int>(x);
  return r;
}

Perm perm_identity(int degree) {
  Perm r(degree);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm r = perm_identity(degree);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) r.at(c[i]) = c[(i + 1) % c.size()];
  check_perm(r, degree, "cycle notation");
  return r;
}

std::string perm_to_cycles(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    os << '(';
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      os << (first ? "" : " ") << x;
      first = false;
      x = p[x];
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

Group Group::from_generators(int degree, Generators gens, std::size_t order_cap) {
  if (degree < 0) raise(ErrorKind::NotAPermutation, "negative degree");
  for (const auto& [name, p] : gens) check_perm(p, degree, name);

  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  d->gens = std::move(gens);
  d->elems.push_back(perm_identity(degree));
  d->index.emplace(d->elems[0], 0);
  d->parent.push_back(0);
  d->parent_gen.push_back(0);
  for (std::size_t head = 0; head < d->elems.size(); ++head) {
    for (std::size_t s = 0; s < d->gens.size(); ++s) {
      Perm y = perm_compose(d->elems[head], d->gens[s].second);
      if (d->index.count(y)) continue;
      if (d->elems.size() >= order_cap)
        raise(ErrorKind::OrderCapExceeded, "group order exceeds " + std::to_string(order_cap));
      d->index.emplace(y, d->elems.size());
      d->elems.push_back(std::move(y));
      d->parent.push_back(head);
      d->parent_gen.push_back(s);
    }
  }
  const std::size_t n = d->elems.size();
  for (const auto& g : d->gens) d->gen_elem.push_back(d->index.at(g.second));
  d->inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) d->inverse[i] = d->index.at(perm_inverse(d->elems[i]));
  if (n <= 2048) {
    d->table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d->table[i * n + j] = static_cast<std::uint32_t>(d->index.at(perm_compose(d->elems[i], d->elems[j])));
  }
  return Group(std::move(d));
}

Group group_from_generators(int degree, Group::Generators gens, std::size_t order_cap) {
  return Group::from_generators(degree, std::move(gens), order_cap);
}

int Group::degree() const { return d_->degree; }
std::size_t Group::order() const { return d_->elems.size(); }
std::size_t Group::num_generators() const { return d_->gens.size(); }
const Group::Generators& Group::generators() const { return d_->gens; }
const std::string& Group::generator_name(std::size_t i) const { return d_->gens.at(i).first; }
const Perm& Group::generator(std::size_t i) const { return d_->gens.at(i).second; }
std::size_t Group::generator_element(std::size_t i) const { return d_->gen_elem.at(i); }
const Perm& Group::element(std::size_t i) const { return d_->elems.at(i); }
const std::vector<Perm>& Group::elements() const { return d_->elems; }

std::optional<std::size_t> Group::index_of(const Perm& p) const {
  auto it = d_->index.find(p);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Group::mul(std::size_t a, std::size_t b) const {
  if (!d_->table.empty()) return d_->table[a * d_->elems.size() + b];
  return d_->index.at(perm_compose(d_->elems[a], d_->elems[b]));
}

std::size_t Group::inv(std::size_t a) const { return d_->inverse.at(a); }
std::size_t Group::parent(std::size_t i) const { return d_->parent.at(i); }
std::size_t Group::parent_generator(std::size_t i) const { return d_->parent_gen.at(i); }

std::vector<std::size_t> Group::word(std::size_t i) const {
  std::vector<std::size_t> w;
  while (i != 0) {
    w.push_back(d_->parent_gen[i]);
    i = d_->parent[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::string Group::word_string(std::size_t i) const {
  const auto w = word(i);
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "*" : "") + d_->gens[w[k]].first;
  return s;
}

bool Group::has_subgroup(const Group& sub) const {
  if (sub.degree() != degree()) return false;
  for (const auto& g : sub.generators())
    if (!contains(g.second)) return false;
  return true;
}

bool operator==(const Group& a, const Group& b) {
  if (a.d_ == b.d_) return true;
  if (a.degree() != b.degree() || a.num_generators() != b.num_generators()) return false;
  for (std::size_t i = 0; i < a.num_generators(); ++i)
    if (a.generator(i) != b.generator(i)) return false;
  return true;
}

Group subgroup(const Group& ambient, Group::Generators gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].first.empty()) gens[i].first = "h" + std::to_string(i);
    if (!ambient.contains(gens[i].second))
      raise(ErrorKind::NotASubgroup, "generator " + gens[i].first + " is not in the ambient group");
  }
  return Group::from_generators(ambient.degree(), std::move(gens));
}

bool is_normal(const Group& ambient, const Group& sub) {
  if (!ambient.has_subgroup(sub)) raise(ErrorKind::NotASubgroup, "not a subgroup of the ambient group");
  for (const auto& [gname, g] : ambient.generators()) {
    const Perm ginv = perm_inverse(g);
    for (const auto& [hname, h] : sub.generators())
      if (!sub.contains(perm_compose(perm_compose(g, h), ginv))) return false;
  }
  return true;
}

bool is_p_power(std::size_t n, int p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_p_group(const Group& g, int p) { return is_p_power(g.order(), p); }

CosetSystem::CosetSystem(Group ambient, Group sub) : ambient_(std::move(ambient)), sub_(std::move(sub)) {
  if (!ambient_.has_subgroup(sub_)) raise(ErrorKind::NotASubgroup, "not a subgroup of the ambient group");
  sub_to_ambient_.reserve(sub_.order());
  for (const auto& p : sub_.elements()) sub_to_ambient_.push_back(*ambient_.index_of(p));
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  coset_of_.assign(ambient_.order(), kUnset);
  for (std::size_t x = 0; x < ambient_.order(); ++x) {
    if (coset_of_[x] != kUnset) continue;
    const std::size_t c = reps_.size();
    reps_.push_back(x);
    for (std::size_t n : sub_to_ambient_) coset_of_[ambient_.mul(x, n)] = c;
  }
}

std::pair<std::size_t, std::size_t> CosetSystem::split(std::size_t g, std::size_t i) const {
  const std::size_t y = ambient_.mul(g, reps_[i]);
  const std::size_t j = coset_of_[y];
  const std::size_t n = ambient_.mul(ambient_.inv(reps_[j]), y);
  return {j, *sub_.index_of(ambient_.element(n))};
}

CosetSystem coset_reps(const Group& ambient, const Group& normal) {
  if (!is_normal(ambient, normal)) raise(ErrorKind::NotNormal, "subgroup is not normal");
  return CosetSystem(ambient, normal);
}

Quotient quotient_group(const Group& ambient, const Group& normal) {
  const CosetSystem cs = coset_reps(ambient, normal);
  const int idx = static_cast<int>(cs.index());
  Group::Generators gens;
  for (std::size_t s = 0; s < ambient.num_generators(); ++s) {
    Perm p(idx);
    for (int i = 0; i < idx; ++i)
      p[i] = static_cast<int>(cs.coset_of(ambient.mul(ambient.generator_element(s), cs.rep(i))));
    gens.emplace_back(ambient.generator_name(s), std::move(p));
  }
  Quotient q{Group::from_generators(idx, std::move(gens)), {}};
  q.projection.reserve(ambient.order());
  for (std::size_t x = 0; x < ambient.order(); ++x) {
    Perm p(idx);
    for (int i = 0; i < idx; ++i) p[i] = static_cast<int>(cs.coset_of(ambient.mul(x, cs.rep(i))));
    q.projection.push_back(*q.group.index_of(p));
  }
  return q;
}

namespace groups {

Group trivial() { return Group::from_generators(1, {}); }

Group symmetric(int n) {
  if (n <= 1) return Group::from_generators(std::max(n, 1), {});
  Perm cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return Group::from_generators(n, {{"a", cycle}, {"b", perm_from_cycles(n, {{0, 1}})}});
}

Group cyclic(int n) {
  Perm cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return Group::from_generators(n, {{"a", cycle}});
}

Group dihedral(int n) {
  Perm rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return Group::from_generators(n, {{"r", rot}, {"s", ref}});
}

Group alternating4() {
  return Group::from_generators(4, {{"a", perm_from_cycles(4, {{0, 1, 2}})},
                                    {"b", perm_from_cycles(4, {{0, 1}, {2, 3}})}});
}

Group klein4() {
  return Group::from_generators(4, {{"u", perm_from_cycles(4, {{0, 1}, {2, 3}})},
                                    {"v", perm_from_cycles(4, {{0, 2}, {1, 3}})}});
}

Group cyclic2_in_cyclic4() { return Group::from_generators(4, {{"a", perm_from_cycles(4, {{0, 2}, {1, 3}})}}); }

Group rotations_in_dihedral4() {
  return Group::from_generators(4, {{"r", perm_from_cycles(4, {{0, 1, 2, 3}})}});
}

}  // namespace groups

}  // namespace modbrick
