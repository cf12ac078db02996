#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hybridqec/pauli.hpp"

namespace hqec {

/// A vector over F_p with entries in [0, p).
using FpVector = std::vector<int>;

/// Expansion of an operator into F_p^(2 ell n): the ell polynomial-basis
/// coordinates of x_0, ..., x_{n-1}, then those of z_0, ..., z_{n-1}.
FpVector expand(const PauliOperator& e);

/// Inverse of expand; the phase is set by canonical_phase.
PauliOperator contract(const FieldRef& spec, std::size_t n, std::span<const int> v);

/// The trace-symplectic form written in expanded coordinates.
class SymplecticForm {
 public:
  SymplecticForm(FieldRef spec, std::size_t n);

  std::size_t dimension() const noexcept { return 2 * ell_ * n_; }
  int pair(std::span<const int> u, std::span<const int> v) const;
  /// Coefficients f with pair(g, v) = f . v (mod p) for every v.
  FpVector functional(std::span<const int> g) const;

 private:
  FieldRef spec_;
  std::size_t n_;
  std::size_t ell_;
  std::vector<std::vector<int>> gram_;  // gram_[s][t] = Tr(alpha^s alpha^t)
};

/// F_p-linear span of phase-stripped operators, kept in echelon form.
///
/// The basis keeps the independent input operators (with their phases) in the
/// order they were inserted; membership and coefficient recovery work on the
/// expanded vectors.
class PauliSpan {
 public:
  PauliSpan(FieldRef spec, std::size_t n);

  const FieldRef& spec() const noexcept { return spec_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  std::size_t ambient_dimension() const noexcept { return 2 * static_cast<std::size_t>(spec_->ell()) * n_; }
  const std::vector<PauliOperator>& basis() const noexcept { return basis_; }

  /// Adds `e` if it is independent of the current span. Returns whether it was added.
  bool insert(const PauliOperator& e);

  bool member(const PauliOperator& e) const;
  /// Coefficients c over basis() with expand(e) = sum c_i expand(basis_i), if any.
  std::optional<std::vector<int>> solve(const PauliOperator& e) const;
  bool contains(const PauliSpan& other) const;

  /// Ordered product basis_0^c_0 * basis_1^c_1 * ... with exact phase.
  PauliOperator combination(std::span<const int> coeffs) const;

  /// Visits all p^rank elements (as ordered products of basis powers).
  void for_each_element(const std::function<void(const PauliOperator&)>& fn) const;

 private:
  FpVector reduce(FpVector v, std::vector<int>* combo) const;

  FieldRef spec_;
  std::size_t n_;
  std::vector<PauliOperator> basis_;
  std::vector<FpVector> rows_;                // echelon rows, leading entry 1
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<int>> row_combos_;  // row_i = sum row_combos_[i][k] basis_k
};

/// Gaussian elimination over F_p; the independent operators become the basis.
PauliSpan reduce_and_rank(const FieldRef& spec, std::size_t n, std::span<const PauliOperator> ops);

/// Basis of { v : pairing(v, g) = 0 for all g in span } (operators in canonical phase).
PauliSpan centralizer_basis(const PauliSpan& span);

/// Null space of a matrix over F_p (rows of equal length `cols`), from the
/// reduced row echelon form: one basis vector per free column, ascending.
std::vector<FpVector> nullspace_mod_p(std::vector<FpVector> rows, std::size_t cols, int p);

/// Some x with rows . x = rhs over F_p, if the system is consistent.
std::optional<FpVector> solve_mod_p(std::vector<FpVector> rows, std::size_t cols, FpVector rhs, int p);

/// Rank of a matrix over F_p.
std::size_t rank_mod_p(std::vector<FpVector> rows, std::size_t cols, int p);

/// Symplectic Gram-Schmidt. Works through `ops` in order: the first remaining
/// operator u is dropped if it commutes with every remaining one; otherwise the
/// first remaining v with pairing(u, v) != 0 is scaled so pairing(u, v) = 1 and
/// (u, v) is emitted. The rest are made to commute with both. Input ordering
/// is preserved inside each operator type: if all Z-type operators come before
/// all X-type ones, every emitted u is Z-type and every v is X-type.
std::vector<std::pair<PauliOperator, PauliOperator>> symplectic_pairs(
    const FieldRef& spec, std::size_t n, std::span<const PauliOperator> ops);

/// Extends `span` to a basis of the full space with unit vectors and returns the added ones.
std::vector<PauliOperator> complement_basis(const PauliSpan& span);

/// Scalar multiple c * e in F_p units (that is, e^c with exact phase).
PauliOperator scale(const PauliOperator& e, int c);

int inverse_mod_p(int a, int p);

}  // namespace hqec
