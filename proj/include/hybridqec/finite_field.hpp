#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hqec {

/// Integer encoding of a field element: e = sum_i coeffs[i] * p^i.
using Elem = std::uint32_t;

class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

/// GF(p^ell) in the polynomial basis 1, alpha, ..., alpha^(ell-1), where alpha is
/// the class of x modulo a monic irreducible polynomial. Immutable after
/// construction; arithmetic is served from precomputed tables.
class FieldSpec {
 public:
  /// Largest field order for which tables are built.
  static constexpr int kMaxOrder = 256;

  /// `poly` lists ell+1 coefficients, constant term first, and must be monic
  /// and irreducible over F_p.
  static FieldRef make(int p, int ell, std::vector<int> poly);

  /// Field of order q using the smallest irreducible polynomial (see
  /// smallest_irreducible). Accepts any prime power up to kMaxOrder.
  static FieldRef builtin(int q);

  /// The monic irreducible polynomial of degree ell whose non-leading
  /// coefficients, read as base-p digits, give the smallest integer.
  static std::vector<int> smallest_irreducible(int p, int ell);

  static bool is_prime(int p);
  static bool is_irreducible(int p, std::span<const int> poly);

  int p() const noexcept { return p_; }
  int ell() const noexcept { return ell_; }
  int q() const noexcept { return q_; }
  const std::vector<int>& poly() const noexcept { return poly_; }

  Elem add(Elem x, Elem y) const { return add_[x * q_ + y]; }
  Elem sub(Elem x, Elem y) const { return add_[x * q_ + neg_[y]]; }
  Elem mul(Elem x, Elem y) const { return mul_[x * q_ + y]; }
  Elem neg(Elem x) const { return neg_[x]; }
  Elem inv(Elem x) const;
  Elem pow(Elem x, std::uint64_t e) const;
  /// Tr(x) = sum_{i<ell} x^(p^i), returned as an integer in [0, p).
  int trace(Elem x) const { return trace_[x]; }

  /// Embedding of c (taken mod p) into the prime subfield.
  Elem scalar(long long c) const;
  int coeff(Elem x, int i) const;
  std::vector<int> coeffs(Elem x) const;
  Elem from_coeffs(std::span<const int> c) const;
  /// alpha^i for 0 <= i < ell.
  Elem basis(int i) const;

  bool valid(Elem x) const noexcept { return x < static_cast<Elem>(q_); }
  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.ell_ == b.ell_ && a.poly_ == b.poly_;
  }

 private:
  FieldSpec(int p, int ell, std::vector<int> poly);

  int p_;
  int ell_;
  int q_;
  std::vector<int> poly_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  std::vector<int> trace_;
};

bool same_field(const FieldRef& a, const FieldRef& b);

/// Throws FieldMismatch unless both references describe the same field.
void require_same_field(const FieldRef& a, const FieldRef& b);

/// A value of GF(p^ell) bound to its field.
class FieldElement {
 public:
  FieldElement(FieldRef spec, Elem value);

  static FieldElement zero(FieldRef spec) { return {std::move(spec), 0}; }
  static FieldElement one(FieldRef spec) { return {std::move(spec), 1}; }
  static FieldElement from_coeffs(const FieldRef& spec, std::span<const int> coeffs);

  const FieldRef& spec() const noexcept { return spec_; }
  Elem encoding() const noexcept { return value_; }
  std::vector<int> coeffs() const { return spec_->coeffs(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  /// Trace to the prime subfield; the result's encoding is the F_p value.
  FieldElement trace() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  /// Multiplication by an integer (an element of the prime subfield).
  friend FieldElement operator*(long long c, const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldRef spec_;
  Elem value_;
};

}  // namespace hqec
