#include "hybridqec/subsystem.hpp"

#include "hybridqec/errors.hpp"

namespace hqec {

SubsystemCode::SubsystemCode(FieldRef spec, std::size_t n, std::span<const PauliOperator> stabilizer,
                             std::vector<GaugePair> gauge_pairs)
    : stabilizer_(spec, n, stabilizer),
      pairs_(std::move(gauge_pairs)),
      gauge_(spec, n),
      gauge_perp_(spec, n) {
  const auto& gens = stabilizer_.generators();
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    for (const PauliOperator* g : {&pairs_[i].x, &pairs_[i].z}) {
      if (!same_field(g->spec(), spec) || g->n() != n) {
        throw ShapeError("gauge operator " + std::to_string(i) + " has the wrong shape");
      }
      for (const auto& s : gens) {
        if (pairing(s, *g) != 0) throw GaugeNotInCentralizer(i);
      }
    }
  }
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    for (std::size_t j = 0; j < pairs_.size(); ++j) {
      const bool paired = pairing(pairs_[i].x, pairs_[j].z) != 0;
      if (paired != (i == j)) {
        throw GaugePairRelationViolated(i, j, i == j ? "G^X and G^Z commute" : "G^X and G^Z do not commute");
      }
      if (i < j && pairing(pairs_[i].x, pairs_[j].x) != 0) {
        throw GaugePairRelationViolated(i, j, "two G^X do not commute");
      }
      if (i < j && pairing(pairs_[i].z, pairs_[j].z) != 0) {
        throw GaugePairRelationViolated(i, j, "two G^Z do not commute");
      }
    }
  }
  gauge_ = stabilizer_.span();
  for (const auto& gp : pairs_) {
    gauge_.insert(gp.x);
    gauge_.insert(gp.z);
  }
  if (gauge_.rank() != stabilizer_.dimension() + 2 * pairs_.size()) {
    throw InvalidCode("gauge operators are not independent of the stabilizer");
  }
  gauge_perp_ = centralizer_basis(gauge_);
  // S <= G <= N(S)
  if (!stabilizer_.centralizer().contains(gauge_)) throw InvalidCode("gauge group leaves N(S)");
}

Rational SubsystemCode::r() const {
  return Rational(static_cast<long long>(pairs_.size()), spec()->ell());
}

Rational SubsystemCode::k() const { return stabilizer_.k() - r(); }

WeightSearchResult min_distance_subsystem(const SubsystemCode& c, std::size_t max_weight) {
  return min_weight_outside(c.spec(), c.n(), c.stabilizer().generators(),
                            c.gauge_centralizer().basis(), max_weight);
}

WeightSearchResult purity(const SubsystemCode& c) {
  return min_weight_search(c.spec(), c.n(), c.gauge_centralizer().basis(), {}, c.n());
}

}  // namespace hqec
