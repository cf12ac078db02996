#include "hybridqec/bacon_casaccino.hpp"

#include <algorithm>

#include "hybridqec/errors.hpp"

namespace hqec {

std::size_t distance_or_infinite(const LinearCode& c) {
  return c.k() == 0 ? c.n() + 1 : classical_min_distance(c);
}

SubsystemCode construct_bc(const LinearCode& c1, const LinearCode& c2) {
  require_same_field(c1.spec(), c2.spec());
  const FieldRef& spec = c1.spec();
  const FieldSpec& f = *spec;
  const std::size_t n1 = c1.n(), n2 = c2.n(), n = n1 * n2;
  const int ell = f.ell();
  auto at = [n2](std::size_t i, std::size_t j) { return i * n2 + j; };

  // Tensor-product stabilizers.
  std::vector<PauliOperator> stabilizer;
  for (const auto& h : c1.parity_check()) {
    for (const auto& v : c2.generator()) {
      for (int s = 0; s < ell; ++s) {
        std::vector<Elem> z(n, 0);
        for (std::size_t i = 0; i < n1; ++i) {
          for (std::size_t j = 0; j < n2; ++j) z[at(i, j)] = f.mul(f.mul(h[i], v[j]), f.basis(s));
        }
        stabilizer.emplace_back(spec, std::vector<Elem>(n, 0), std::move(z));
      }
    }
  }
  for (const auto& u : c1.generator()) {
    for (const auto& h : c2.parity_check()) {
      for (int s = 0; s < ell; ++s) {
        std::vector<Elem> x(n, 0);
        for (std::size_t i = 0; i < n1; ++i) {
          for (std::size_t j = 0; j < n2; ++j) x[at(i, j)] = f.mul(f.mul(u[i], h[j]), f.basis(s));
        }
        stabilizer.emplace_back(spec, std::move(x), std::vector<Elem>(n, 0));
      }
    }
  }

  // Gauge generators: Z-type column copies, then X-type row copies.
  std::vector<PauliOperator> gauge;
  for (const auto& h : c1.parity_check()) {
    for (std::size_t j = 0; j < n2; ++j) {
      for (int s = 0; s < ell; ++s) {
        std::vector<Elem> z(n, 0);
        for (std::size_t i = 0; i < n1; ++i) z[at(i, j)] = f.mul(h[i], f.basis(s));
        gauge.emplace_back(spec, std::vector<Elem>(n, 0), std::move(z));
      }
    }
  }
  for (const auto& h : c2.parity_check()) {
    for (std::size_t i = 0; i < n1; ++i) {
      for (int s = 0; s < ell; ++s) {
        std::vector<Elem> x(n, 0);
        for (std::size_t j = 0; j < n2; ++j) x[at(i, j)] = f.mul(h[j], f.basis(s));
        gauge.emplace_back(spec, std::move(x), std::vector<Elem>(n, 0));
      }
    }
  }

  const StabilizerGroup s_group(spec, n, stabilizer);
  const PauliSpan t_span = reduce_and_rank(spec, n, gauge);
  const auto pairs = symplectic_pairs(spec, n, gauge);
  const std::size_t center_rank = t_span.rank() - 2 * pairs.size();
  if (!t_span.contains(s_group.span()) || s_group.dimension() != center_rank) {
    throw InvalidCode("stabilizer is not the center of the gauge group");
  }
  for (const auto& g : s_group.generators()) {
    for (const auto& t : gauge) {
      if (pairing(g, t) != 0) throw InvalidCode("stabilizer is not the center of the gauge group");
    }
  }

  std::vector<GaugePair> gauge_pairs;
  for (const auto& [u, v] : pairs) gauge_pairs.push_back({v, u});
  return SubsystemCode(spec, n, s_group.generators(), std::move(gauge_pairs));
}

BcPrediction predict_bc(const LinearCode& c1, const LinearCode& c2) {
  require_same_field(c1.spec(), c2.spec());
  const auto n1 = static_cast<long long>(c1.n()), n2 = static_cast<long long>(c2.n());
  const auto k1 = static_cast<long long>(c1.k()), k2 = static_cast<long long>(c2.k());
  BcPrediction out;
  out.params.n = n1 * n2;
  out.params.k = Rational(k1 * k2);
  out.params.m = Rational((n1 - k1) * (n2 - k2));
  out.params.d = static_cast<long long>(std::min(distance_or_infinite(c1), distance_or_infinite(c2)));
  out.params.c = out.params.d;
  out.params.q = c1.spec()->q();
  out.purity = std::min(distance_or_infinite(dual(c1)), distance_or_infinite(dual(c2)));
  return out;
}

BcHybrid construct_bc_hybrid(const LinearCode& c1, const LinearCode& c2) {
  const SubsystemCode sub = construct_bc(c1, c2);
  HybridParams predicted = predict_bc(c1, c2).params;
  const auto dual_max = static_cast<long long>(
      std::max(distance_or_infinite(dual(c1)), distance_or_infinite(dual(c2))));
  predicted.c = std::min(predicted.d, dual_max);
  return {gauge_fix(sub), predicted};
}

}  // namespace hqec
