#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hybridqec/stabilizer.hpp"
#include "hybridqec/weight_search.hpp"

namespace hqec {

/// Gauge pair (G^X_i, G^Z_i).
struct GaugePair {
  PauliOperator x;
  PauliOperator z;
};

/// [[n, k, r, d]]_q subsystem code: a stabilizer plus ell*r gauge pairs.
class SubsystemCode {
 public:
  /// Validates all commutation relations. Throws NotAbelian,
  /// GaugeNotInCentralizer(i) or GaugePairRelationViolated(i, j).
  SubsystemCode(FieldRef spec, std::size_t n, std::span<const PauliOperator> stabilizer,
                std::vector<GaugePair> gauge_pairs);

  const FieldRef& spec() const noexcept { return stabilizer_.spec(); }
  std::size_t n() const noexcept { return stabilizer_.n(); }
  const StabilizerGroup& stabilizer() const noexcept { return stabilizer_; }
  const std::vector<GaugePair>& gauge_pairs() const noexcept { return pairs_; }
  /// Phase-stripped G = <S, G^X_i, G^Z_i>.
  const PauliSpan& gauge_group() const noexcept { return gauge_; }
  /// Basis of the centralizer of G.
  const PauliSpan& gauge_centralizer() const noexcept { return gauge_perp_; }

  Rational r() const;
  Rational k() const;

 private:
  StabilizerGroup stabilizer_;
  std::vector<GaugePair> pairs_;
  PauliSpan gauge_;
  PauliSpan gauge_perp_;
};

/// Lightest element of N(S) \ G.
WeightSearchResult min_distance_subsystem(const SubsystemCode& c, std::size_t max_weight);

/// Lightest nonidentity element of G (searched up to n).
WeightSearchResult purity(const SubsystemCode& c);

}  // namespace hqec
