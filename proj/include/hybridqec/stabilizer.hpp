#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hybridqec/rational.hpp"
#include "hybridqec/symplectic.hpp"

namespace hqec {

/// A logical X/Z pair; pairing(x, z) != 0.
struct LogicalPair {
  PauliOperator x;
  PauliOperator z;
};

/// Marks a basis generator as classical, with its logical-Z label b in F_q^m.
struct ClassicalTag {
  std::size_t generator;
  std::vector<Elem> label;
};

/// Validated abelian group of Pauli operators.
///
/// Generators are kept with their exact phases; the code space is the common
/// +1 eigenspace, so a generator with phase c imposes eigenvalue omega^-c on
/// its phase-free part.
class StabilizerGroup {
 public:
  /// Throws NotAbelian (input indices) or InconsistentPhases. Dependent
  /// generators whose phase agrees with the product of earlier ones are dropped.
  StabilizerGroup(FieldRef spec, std::size_t n, std::span<const PauliOperator> gens);

  const FieldRef& spec() const noexcept { return span_.spec(); }
  std::size_t n() const noexcept { return span_.n(); }
  const PauliSpan& span() const noexcept { return span_; }
  const std::vector<PauliOperator>& generators() const noexcept { return span_.basis(); }
  /// Input index of each kept generator.
  const std::vector<std::size_t>& source_indices() const noexcept { return source_; }
  /// F_p dimension of the phase-stripped group.
  std::size_t dimension() const noexcept { return span_.rank(); }
  /// n - dimension / ell.
  Rational k() const;

  const PauliSpan& centralizer() const noexcept { return centralizer_; }

  const std::vector<ClassicalTag>& classical_tags() const noexcept { return tags_; }
  StabilizerGroup with_classical_tags(std::vector<ClassicalTag> tags) const;

  /// Exact group element equal to `e` up to phase, if `e` is in the group.
  std::optional<PauliOperator> element_for(const PauliOperator& e) const;

 private:
  StabilizerGroup(PauliSpan span, std::vector<std::size_t> source, PauliSpan centralizer,
                  std::vector<ClassicalTag> tags);

  PauliSpan span_;
  std::vector<std::size_t> source_;
  PauliSpan centralizer_;
  std::vector<ClassicalTag> tags_;
};

/// Hyperbolic basis of N(S) modulo S: ell * k pairs.
std::vector<LogicalPair> logical_operators(const StabilizerGroup& s);

/// Multiplies each classical generator g_i by omega^-Tr(b_i . a).
StabilizerGroup apply_phase_tags(const StabilizerGroup& s, std::span<const Elem> message);

/// Tr(u . v) for u, v in F_q^m.
int trace_dot(const FieldSpec& f, std::span<const Elem> u, std::span<const Elem> v);

}  // namespace hqec
