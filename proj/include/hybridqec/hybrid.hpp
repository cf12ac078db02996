#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hybridqec/subsystem.hpp"

namespace hqec {

/// Hybrid stabilizer code: q^m orthogonal translates t_a C0 of an inner
/// stabilizer code C0 with stabilizer S0 = <S_Q, g_1, ..., g_{ell m}>.
///
/// Translations are stored normalized: pairing(g_i, t_j) = delta_ij and the
/// t_j commute with each other. Translation j*ell + s realizes the message
/// alpha^s on classical qudit j.
class HybridCode {
 public:
  /// Throws NotAbelian, InconsistentPhases, InvalidHybrid, or Unsupported when
  /// the number of classical generators is not a multiple of ell. Missing
  /// translations are chosen inside N(S_Q) so that light operators moving
  /// between inner codes fall into the gauge group where possible.
  HybridCode(FieldRef spec, std::size_t n, std::span<const PauliOperator> quantum,
             std::span<const PauliOperator> classical,
             std::optional<std::vector<PauliOperator>> translations = std::nullopt);

  const FieldRef& spec() const noexcept { return quantum_.spec(); }
  std::size_t n() const noexcept { return quantum_.n(); }
  const StabilizerGroup& quantum_stabilizer() const noexcept { return quantum_; }
  /// S0 with the classical generators tagged by their labels.
  const StabilizerGroup& outer_stabilizer() const noexcept { return outer_; }
  const std::vector<PauliOperator>& classical_generators() const noexcept { return classical_; }
  /// b_i in F_q^m for each classical generator.
  const std::vector<std::vector<Elem>>& labels() const noexcept { return labels_; }
  const std::vector<PauliOperator>& translations() const noexcept { return translations_; }
  /// Phase-stripped <S0, translations>.
  const PauliSpan& gauge_group() const noexcept { return gauge_; }
  const PauliSpan& gauge_centralizer() const noexcept { return gauge_perp_; }

  Rational k() const;
  std::size_t m() const noexcept { return classical_.size() / static_cast<std::size_t>(spec()->ell()); }

 private:
  StabilizerGroup quantum_;
  std::vector<PauliOperator> classical_;
  std::vector<std::vector<Elem>> labels_;
  std::vector<PauliOperator> translations_;
  StabilizerGroup outer_;
  PauliSpan gauge_;
  PauliSpan gauge_perp_;
};

/// Fixes one operator per gauge pair: 'Z' (default) keeps G^Z as a classical
/// generator and uses G^X as translation, 'X' the reverse. An empty string
/// means all 'Z'. Throws FixedSetNotCommuting.
HybridCode gauge_fix(const SubsystemCode& c, std::string_view fixed = {});

/// The same code viewed as a subsystem code with gauge pairs (t_i, g_i).
SubsystemCode as_subsystem(const HybridCode& h);

/// Lightest element of N(S_Q) \ G.
WeightSearchResult quantum_distance(const HybridCode& h, std::size_t max_weight);

/// Lightest element of N(S0) \ S0: the distance of every inner code t_a C0.
/// An upper bound for quantum_distance.
WeightSearchResult inner_distance(const HybridCode& h, std::size_t max_weight);

/// Lightest element of N(S_Q) \ N(S0).
WeightSearchResult classical_distance(const HybridCode& h, std::size_t max_weight);

/// t_a as the ordered product of translation powers given by the coordinates of a.
PauliOperator translation_for_message(const HybridCode& h, std::span<const Elem> a);

/// Stabilizer of t_a C0: S0 with g_i replaced by omega^-Tr(b_i . a) g_i.
StabilizerGroup inner_code_stabilizer(const HybridCode& h, std::span<const Elem> a);

/// All q^m messages in the order used by the oracle (last coordinate fastest).
std::vector<std::vector<Elem>> all_messages(const HybridCode& h);

}  // namespace hqec
