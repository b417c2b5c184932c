#include "modbrick/field.hpp"

#include "modbrick/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <tuple>

namespace modbrick {

namespace {

using Poly = std::vector<int>;  // coefficients mod p, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int lead = a.back();
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint32_t code, int p, int n) {
  Poly d(n, 0);
  for (int i = 0; i < n; ++i) {
    d[i] = static_cast<int>(code % p);
    code /= p;
  }
  return d;
}

std::uint32_t undigits(const Poly& d, int p) {
  std::uint32_t code = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p + d[i];
  return code;
}

std::uint32_t slow_mul(const detail::FieldData& f, std::uint32_t a, std::uint32_t b) {
  const Poly da = digits(a, f.p, f.n);
  const Poly db = digits(b, f.p, f.n);
  Poly prod(2 * f.n, 0);
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
  Poly r = poly_mod(prod, f.modulus, f.p);
  r.resize(f.n, 0);
  return undigits(r, f.p);
}

std::uint32_t slow_pow(const detail::FieldData& f, std::uint32_t a, std::uint64_t e) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = slow_mul(f, r, a);
    a = slow_mul(f, a, a);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::unique_ptr<detail::FieldData> build(int p, int n, Poly modulus) {
  auto f = std::make_unique<detail::FieldData>();
  f->p = p;
  f->n = n;
  f->modulus = std::move(modulus);
  f->pow_p.resize(n + 1);
  f->pow_p[0] = 1;
  for (int i = 1; i <= n; ++i) f->pow_p[i] = f->pow_p[i - 1] * p;
  f->q = f->pow_p[n];

  const std::uint32_t order = f->q - 1;
  std::uint32_t prim = 1;
  if (order > 1) {
    const auto factors = prime_factors(order);
    for (std::uint32_t g = 2; g < f->q; ++g) {
      bool ok = true;
      for (auto r : factors) {
        if (slow_pow(*f, g, order / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        prim = g;
        break;
      }
    }
  }
  f->exp_tab.resize(2 * order);
  f->log_tab.assign(f->q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    f->exp_tab[i] = x;
    f->exp_tab[i + order] = x;
    f->log_tab[x] = i;
    x = slow_mul(*f, x, prim);
  }
  if (p != 2 && f->q <= detail::FieldData::kAddTableMax) {
    f->add_tab.resize(static_cast<std::size_t>(f->q) * f->q);
    for (std::uint32_t a = 0; a < f->q; ++a)
      for (std::uint32_t b = 0; b < f->q; ++b)
        f->add_tab[a * f->q + b] = static_cast<std::uint16_t>(f->add_digits(a, b));
  }
  return f;
}

}  // namespace

std::uint32_t detail::FieldData::add_digits(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  for (int i = n - 1; i >= 0; --i) {
    const std::uint32_t da = (a / pow_p[i]) % p;
    const std::uint32_t db = (b / pow_p[i]) % p;
    r = r * p + (da + db) % p;
  }
  return r;
}

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
  Poly a = poly;
  for (auto& c : a) c = ((c % p) + p) % p;
  trim(a);
  const int deg = static_cast<int>(a.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  // make monic so poly_mod's divisor convention does not matter
  for (int k = 1; k <= deg / 2; ++k) {
    std::uint32_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
      Poly g = digits(c, p, k);
      g.push_back(1);
      if (poly_mod(a, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec FieldSpec::make(int p, int n, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) raise(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) raise(ErrorKind::InvalidModulus, "extension degree must be at least 1");
  long q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > 65536) raise(ErrorKind::FieldTooLarge, "field order exceeds 2^16");
  }

  Poly mod;
  if (modulus) {
    mod = *modulus;
    for (auto& c : mod) c = ((c % p) + p) % p;
    if (static_cast<int>(mod.size()) != n + 1 || mod.back() != 1)
      raise(ErrorKind::InvalidModulus, "modulus must be monic of degree " + std::to_string(n));
    if (!is_irreducible_mod_p(mod, p)) raise(ErrorKind::ReducibleModulus, "modulus is reducible");
  } else {
    for (std::uint32_t c = 0;; ++c) {
      Poly cand = digits(c, p, n);
      cand.push_back(1);
      if (is_irreducible_mod_p(cand, p)) {
        mod = std::move(cand);
        break;
      }
    }
  }

  static std::mutex mu;
  static std::map<std::tuple<int, int, Poly>, std::unique_ptr<detail::FieldData>> registry;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(p, n, mod);
  auto it = registry.find(key);
  if (it == registry.end()) it = registry.emplace(key, build(p, n, mod)).first;
  return FieldSpec(it->second.get());
}

FieldSpec gf_make(int p, int n, std::optional<std::vector<int>> modulus) {
  return FieldSpec::make(p, n, std::move(modulus));
}

FieldElem FieldSpec::from_code(std::uint32_t code) const {
  if (code >= d_->q) raise(ErrorKind::ParseError, "field code out of range");
  return FieldElem(d_, code);
}

FieldElem FieldSpec::from_int(long v) const {
  const long r = ((v % d_->p) + d_->p) % d_->p;
  return FieldElem(d_, static_cast<std::uint32_t>(r));
}

FieldElem FieldSpec::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > d_->n)
    raise(ErrorKind::ParseError, "too many coefficients for " + name());
  Poly d(d_->n, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0 || coeffs[i] >= d_->p)
      raise(ErrorKind::ParseError, "coefficient out of range [0, p)");
    d[i] = coeffs[i];
  }
  return FieldElem(d_, undigits(d, d_->p));
}

FieldElem FieldSpec::generator() const {
  if (d_->n >= 2) return FieldElem(d_, static_cast<std::uint32_t>(d_->p));
  return from_int(-d_->modulus[0]);
}

std::vector<int> FieldSpec::coeffs(FieldElem x) const { return digits(x.code(), d_->p, d_->n); }

std::vector<FieldElem> FieldSpec::elements() const {
  std::vector<FieldElem> out;
  out.reserve(d_->q);
  for (std::uint32_t c = 0; c < d_->q; ++c) out.emplace_back(d_, c);
  return out;
}

std::string FieldSpec::name() const { return "GF(" + std::to_string(d_->q) + ")"; }

FieldElem FieldElem::inverse() const {
  if (v_ == 0) raise(ErrorKind::NotInvertible, "inverse of zero");
  if (!f_) return *this;
  return FieldElem(f_, f_->inv(v_));
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem base = *this;
  FieldElem r(f_, 1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, FieldElem x) { return os << x.code(); }

FieldEmbedding::FieldEmbedding(FieldSpec small, FieldSpec big) : small_(small), big_(big) {
  if (small.characteristic() != big.characteristic())
    raise(ErrorKind::FieldMismatch, "embedding needs equal characteristic");
  if (big.degree() % small.degree() != 0)
    raise(ErrorKind::FieldMismatch, small.name() + " does not embed in " + big.name());
  std::optional<FieldElem> root;
  for (const auto& r : big.elements()) {
    FieldElem acc = big.zero();
    FieldElem power = big.one();
    for (int c : small.modulus()) {
      acc += big.from_int(c) * power;
      power *= r;
    }
    if (acc.is_zero()) {
      root = r;
      break;
    }
  }
  if (!root) raise(ErrorKind::FieldMismatch, "no root of the modulus in the target field");
  image_.reserve(small.order());
  for (const auto& x : small.elements()) {
    FieldElem acc = big.zero();
    FieldElem power = big.one();
    for (int c : small.coeffs(x)) {
      acc += big.from_int(c) * power;
      power *= *root;
    }
    image_.push_back(acc);
  }
}

FieldElem FieldEmbedding::operator()(FieldElem x) const { return image_.at(x.code()); }

Matrix zeros(const FieldSpec& f, Eigen::Index rows, Eigen::Index cols) {
  return Matrix::Constant(rows, cols, f.zero());
}

Matrix identity(const FieldSpec& f, Eigen::Index n) {
  Matrix m = zeros(f, n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Vector zero_vector(const FieldSpec& f, Eigen::Index n) { return Vector::Constant(n, f.zero()); }

void tag(Matrix& m, const FieldSpec& f) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    auto& x = m.data()[i];
    x = FieldElem(f.data(), x.code());
  }
}

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ConjugationLeavesSubgroup: return "ConjugationLeavesSubgroup";
    case ErrorKind::Indeterminate: return "Indeterminate";
    case ErrorKind::EnumCapExceeded: return "EnumCapExceeded";
    case ErrorKind::HypothesisNotVerified: return "HypothesisNotVerified";
    case ErrorKind::IndexNotPPower: return "IndexNotPPower";
    case ErrorKind::IndexDivisibleByP: return "IndexDivisibleByP";
    case ErrorKind::NotARetraction: return "NotARetraction";
    case ErrorKind::NotGInvariantModule: return "NotGInvariantModule";
    case ErrorKind::NotABrick: return "NotABrick";
    case ErrorKind::NotASemibrick: return "NotASemibrick";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace modbrick
