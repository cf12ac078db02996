#pragma once

#include <cstddef>
#include <vector>

#include "hybridqec/finite_field.hpp"

namespace hqec {

using FqMatrix = std::vector<std::vector<Elem>>;

/// Reduced row echelon form over F_q, zero rows dropped.
FqMatrix rref(const FieldSpec& f, FqMatrix rows, std::size_t cols);

/// Basis of { v : rows . v = 0 } over F_q, one vector per free column.
FqMatrix kernel(const FieldSpec& f, const FqMatrix& rows, std::size_t cols);

/// Classical [n, k]_q linear code given by a full-rank generator matrix.
class LinearCode {
 public:
  /// Throws InvalidCode when the rows are dependent or of the wrong length.
  LinearCode(FieldRef spec, std::size_t n, FqMatrix generator);

  /// Repetition code [n, 1, n]_q.
  static LinearCode repetition(FieldRef spec, std::size_t n);
  /// The whole space [n, n, 1]_q.
  static LinearCode full(FieldRef spec, std::size_t n);

  const FieldRef& spec() const noexcept { return spec_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return generator_.size(); }
  const FqMatrix& generator() const noexcept { return generator_; }
  /// (n - k) x n with generator . parity_check^T = 0.
  const FqMatrix& parity_check() const noexcept { return parity_; }

  /// Same row space (compared through the reduced echelon form).
  bool same_code(const LinearCode& other) const;

 private:
  LinearCode(FieldRef spec, std::size_t n, FqMatrix generator, FqMatrix parity);
  friend LinearCode dual(const LinearCode& c);

  FieldRef spec_;
  std::size_t n_;
  FqMatrix generator_;
  FqMatrix parity_;
};

/// Minimum weight over all q^k - 1 nonzero codewords. Throws NoCodewords when k = 0.
std::size_t classical_min_distance(const LinearCode& c);

/// The code generated by the parity-check matrix.
LinearCode dual(const LinearCode& c);

}  // namespace hqec
