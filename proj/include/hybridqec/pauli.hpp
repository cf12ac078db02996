#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hybridqec/finite_field.hpp"

namespace hqec {

/// Order of the phase group: powers of i (mod 4) when p = 2, powers of
/// omega = exp(2 pi i / p) (mod p) otherwise.
int phase_modulus(const FieldSpec& spec);

/// Phase exponent that makes i^c X(a)Z(b) a tensor product of Hermitian
/// single-qudit factors when p = 2 (the count of Y-like positions); 0 for odd p.
int canonical_phase(const FieldSpec& spec, std::span<const Elem> x, std::span<const Elem> z);

/// An n-qudit error operator  phase * X(a) Z(b)  with a, b in F_q^n.
///
/// The phase exponent is interpreted as a power of i when p = 2 and as a
/// power of omega otherwise. Weight and the commutation pairing never look at
/// the phase.
class PauliOperator {
 public:
  PauliOperator(FieldRef spec, std::vector<Elem> x, std::vector<Elem> z, int phase = 0);

  static PauliOperator identity(FieldRef spec, std::size_t n);
  /// X(a) on a single qudit.
  static PauliOperator x_on(FieldRef spec, std::size_t n, std::size_t qudit, Elem a);
  /// Z(b) on a single qudit.
  static PauliOperator z_on(FieldRef spec, std::size_t n, std::size_t qudit, Elem b);

  std::size_t n() const noexcept { return x_.size(); }
  const FieldRef& spec() const noexcept { return spec_; }
  const std::vector<Elem>& x() const noexcept { return x_; }
  const std::vector<Elem>& z() const noexcept { return z_; }
  Elem x(std::size_t j) const { return x_[j]; }
  Elem z(std::size_t j) const { return z_[j]; }
  int phase() const noexcept { return phase_; }

  PauliOperator with_phase(int phase) const;
  /// Same x and z, phase chosen by canonical_phase.
  PauliOperator canonical() const;
  bool is_identity_up_to_phase() const;
  bool same_up_to_phase(const PauliOperator& other) const;

  friend bool operator==(const PauliOperator& a, const PauliOperator& b);

 private:
  FieldRef spec_;
  std::vector<Elem> x_;
  std::vector<Elem> z_;
  int phase_;
};

/// Number of qudits on which the operator acts nontrivially.
std::size_t weight(const PauliOperator& e);

/// Support as 0-based qudit indices, ascending.
std::vector<std::size_t> support(const PauliOperator& e);

/// Tr(b.a' - b'.a) in F_p: E E' = omega^pairing E' E. Zero iff they commute.
int pairing(const PauliOperator& e1, const PauliOperator& e2);

/// Operator product e1 * e2 with exact phase.
PauliOperator multiply(const PauliOperator& e1, const PauliOperator& e2);

/// e^k; negative k allowed.
PauliOperator power(const PauliOperator& e, long long k);

PauliOperator inverse(const PauliOperator& e);

/// Parses the text grammar:
///   q = 2:  [sign] [IXYZ]^n, with Y = iXZ and sign one of + - i +i -i
///   q > 2:  [w^k | i^k] (a|b) (a|b) ...   with a, b integer-encoded elements
PauliOperator parse_pauli(std::string_view text, const FieldRef& spec);

/// Inverse of parse_pauli.
std::string format_pauli(const PauliOperator& e);

/// Calls `fn` on every phase-free operator of exactly `w` nontrivial
/// positions: supports in colexicographic order, then local letters
/// (encoding x*q + z, nonzero) with the lowest qudit varying slowest.
/// Stops early when `fn` returns false; returns false in that case.
bool for_each_pauli_of_weight(const FieldRef& spec, std::size_t n, std::size_t w,
                              const std::function<bool(const PauliOperator&)>& fn);

/// Colexicographic successor of a sorted combination of {0..n-1}; false when exhausted.
bool next_combination_colex(std::vector<std::size_t>& comb, std::size_t n);

}  // namespace hqec
