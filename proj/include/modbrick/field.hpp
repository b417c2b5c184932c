#pragma once

// Finite fields GF(p^n) in the polynomial basis, usable as an Eigen scalar.
//
// An element is stored as the integer code sum_i c_i p^i of its coefficient
// vector (c_0 the constant term), tagged with a pointer to its interned field.
// Scalar(0) and Scalar(1) built by Eigen carry no field; their codes are the
// same in every field, so they combine with tagged elements transparently.

#include <Eigen/Core>

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace modbrick {

namespace detail {

struct FieldData {
  int p = 0;
  int n = 0;
  std::uint32_t q = 0;
  std::vector<int> modulus;  // low degree first, monic, length n + 1

  // log/exp over a fixed primitive element; exp_tab has length 2(q-1).
  std::vector<std::uint32_t> log_tab;
  std::vector<std::uint32_t> exp_tab;
  // Addition table, only for odd characteristic with q <= kAddTableMax.
  std::vector<std::uint16_t> add_tab;
  std::vector<std::uint32_t> pow_p;  // p^i for i <= n

  static constexpr std::uint32_t kAddTableMax = 256;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    if (!add_tab.empty()) return add_tab[a * q + b];
    return add_digits(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (p == 2) return a;
    std::uint32_t r = 0;
    for (int i = n - 1; i >= 0; --i) {
      const std::uint32_t d = (a / pow_p[i]) % p;
      r = r * p + (d == 0 ? 0 : p - d);
    }
    return r;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_tab[log_tab[a] + log_tab[b]];
  }
  std::uint32_t inv(std::uint32_t a) const {
    assert(a != 0);
    return exp_tab[(q - 1 - log_tab[a]) % (q - 1)];
  }
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;
  // Code of a small signed integer written without a field (Eigen passes -1 as alpha).
  std::uint32_t lift(std::uint32_t raw) const {
    const long v = static_cast<std::int32_t>(raw);
    return static_cast<std::uint32_t>(((v % p) + p) % p);
  }
};

}  // namespace detail

class FieldElem {
 public:
  constexpr FieldElem() = default;
  // Only 0 and 1 are meaningful without a field; Eigen uses exactly these.
  explicit constexpr FieldElem(int v) : v_(static_cast<std::uint32_t>(v)) {}
  constexpr FieldElem(const detail::FieldData* f, std::uint32_t code) : f_(f), v_(code) {}

  std::uint32_t code() const { return v_; }
  const detail::FieldData* field_data() const { return f_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;

  friend FieldElem operator+(FieldElem a, FieldElem b) {
    const auto* f = a.f_ ? a.f_ : b.f_;
    assert(!a.f_ || !b.f_ || a.f_ == b.f_);
    if (!f) return FieldElem(nullptr, static_cast<std::uint32_t>(static_cast<std::int32_t>(a.v_) + static_cast<std::int32_t>(b.v_)));
    return FieldElem(f, f->add(a.f_ ? a.v_ : f->lift(a.v_), b.f_ ? b.v_ : f->lift(b.v_)));
  }
  friend FieldElem operator-(FieldElem a) {
    if (!a.f_) return FieldElem(nullptr, static_cast<std::uint32_t>(-static_cast<std::int32_t>(a.v_)));
    return FieldElem(a.f_, a.f_->neg(a.v_));
  }
  friend FieldElem operator-(FieldElem a, FieldElem b) { return a + (-b); }
  friend FieldElem operator*(FieldElem a, FieldElem b) {
    const auto* f = a.f_ ? a.f_ : b.f_;
    assert(!a.f_ || !b.f_ || a.f_ == b.f_);
    if (!f) return FieldElem(nullptr, static_cast<std::uint32_t>(static_cast<std::int32_t>(a.v_) * static_cast<std::int32_t>(b.v_)));
    return FieldElem(f, f->mul(a.f_ ? a.v_ : f->lift(a.v_), b.f_ ? b.v_ : f->lift(b.v_)));
  }
  friend FieldElem operator/(FieldElem a, FieldElem b) { return a * b.inverse(); }
  FieldElem& operator+=(FieldElem b) { return *this = *this + b; }
  FieldElem& operator-=(FieldElem b) { return *this = *this - b; }
  FieldElem& operator*=(FieldElem b) { return *this = *this * b; }
  FieldElem& operator/=(FieldElem b) { return *this = *this / b; }

  friend bool operator==(FieldElem a, FieldElem b) { return a.v_ == b.v_; }
  friend bool operator!=(FieldElem a, FieldElem b) { return a.v_ != b.v_; }

 private:
  const detail::FieldData* f_ = nullptr;
  std::uint32_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, FieldElem x);

inline bool is_zero(FieldElem x) { return x.is_zero(); }
inline FieldElem inverse(FieldElem x) { return x.inverse(); }

/// Handle to an interned field; equal fields share one FieldData.
class FieldSpec {
 public:
  static FieldSpec make(int p, int n, std::optional<std::vector<int>> modulus = std::nullopt);

  int characteristic() const { return d_->p; }
  int degree() const { return d_->n; }
  std::uint32_t order() const { return d_->q; }
  const std::vector<int>& modulus() const { return d_->modulus; }
  const detail::FieldData* data() const { return d_; }

  FieldElem zero() const { return FieldElem(d_, 0); }
  FieldElem one() const { return FieldElem(d_, 1); }
  FieldElem from_code(std::uint32_t code) const;
  FieldElem from_int(long v) const;
  FieldElem from_coeffs(std::span<const int> coeffs) const;
  /// The class of x in the polynomial basis.
  FieldElem generator() const;
  std::vector<int> coeffs(FieldElem x) const;
  /// Elements in code order 0, 1, ..., q-1.
  std::vector<FieldElem> elements() const;

  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.d_ == b.d_; }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.d_ != b.d_; }

 private:
  explicit FieldSpec(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_;
};

FieldSpec gf_make(int p, int n, std::optional<std::vector<int>> modulus = std::nullopt);

bool is_prime(long v);

/// Trial-division irreducibility test for a polynomial over GF(p).
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

/// An embedding of `small` into `big` sending the polynomial generator to a
/// root of small's modulus; requires small.degree() | big.degree().
class FieldEmbedding {
 public:
  FieldEmbedding(FieldSpec small, FieldSpec big);
  FieldElem operator()(FieldElem x) const;
  FieldSpec source() const { return small_; }
  FieldSpec target() const { return big_; }

 private:
  FieldSpec small_;
  FieldSpec big_;
  std::vector<FieldElem> image_;  // image of each code of `small`
};

}  // namespace modbrick

namespace Eigen {

template <>
struct NumTraits<modbrick::FieldElem> : GenericNumTraits<modbrick::FieldElem> {
  using Real = modbrick::FieldElem;
  using NonInteger = modbrick::FieldElem;
  using Literal = modbrick::FieldElem;
  using Nested = modbrick::FieldElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace modbrick {

using Matrix = Eigen::Matrix<FieldElem, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<FieldElem, Eigen::Dynamic, 1>;

Matrix zeros(const FieldSpec& f, Eigen::Index rows, Eigen::Index cols);
Matrix identity(const FieldSpec& f, Eigen::Index n);
Vector zero_vector(const FieldSpec& f, Eigen::Index n);
/// Re-tags every entry (including untagged Eigen zeros) with the field.
void tag(Matrix& m, const FieldSpec& f);

}  // namespace modbrick
