#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hybridqec/hybrid.hpp"

namespace hqec {

using DenseOperator = Eigen::MatrixXcd;

/// Entry tolerance for every oracle comparison.
inline constexpr double kOracleTolerance = 1e-8;

/// Largest Hilbert-space dimension the oracle accepts: HYBRIDQEC_ORACLE_CAP
/// if set to a positive integer, 4096 otherwise.
std::size_t oracle_cap();

/// q^n, throwing DimensionTooLarge above `cap`.
std::size_t hilbert_dimension(const FieldSpec& f, std::size_t n, std::size_t cap);

/// Dense matrix of the operator; qudit 0 is the most significant tensor factor.
DenseOperator pauli_matrix(const PauliOperator& e, std::size_t cap = oracle_cap());

/// Projector onto the common +1 eigenspace: the average of all group elements.
DenseOperator projector(const StabilizerGroup& s, std::size_t cap = oracle_cap());

struct KlViolation {
  int condition;        // 1: proportional to identity, 2: vanishing cross block
  PauliOperator error;
  std::size_t a;        // message indices into all_messages()
  std::size_t b;
  double residual;      // max-entry norm of the offending K x K block
};

struct KlReport {
  std::size_t dimension = 0;       // q^n
  std::size_t code_dimension = 0;  // K, rank of each inner projector
  std::size_t messages = 0;        // q^m
  std::size_t condition1_errors = 0;
  std::size_t condition2_errors = 0;
  /// Sorted by error weight, then x and z vectors, then condition, a, b.
  std::vector<KlViolation> violations;
  std::vector<std::string> warnings;

  bool passed() const noexcept { return violations.empty(); }
  /// Lightest violating error for the condition, if any.
  std::optional<std::size_t> min_witness_weight(int condition) const;
};

/// For every error E with wt(E) < d and every message a: P_a E P_a = lambda P_a.
/// For every F with wt(F) < c and a != b: P_a F P_b = 0.
KlReport check_detection(const HybridCode& h, std::size_t d, std::size_t c,
                         std::size_t cap = oracle_cap());

/// Block form on the inner-code bases B_a = t_a B_0: B_a^dag E B_b = lambda I
/// for wt(E) < d and all a, b; B_a^dag F B_b = 0 for wt(F) < c and a != b.
KlReport check_subsystem_conditions(const HybridCode& h, std::size_t d, std::size_t c,
                                    std::size_t cap = oracle_cap());

/// Correction form: products E^dag F with wt(E), wt(F) <= (d-1)/2 must satisfy
/// the first condition for each a, and products with both weights <= (c-1)/2
/// the second for a != b.
KlReport check_correction(const HybridCode& h, std::size_t d, std::size_t c,
                          std::size_t cap = oracle_cap());

}  // namespace hqec
