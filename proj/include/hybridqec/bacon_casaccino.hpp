#pragma once

#include <cstddef>

#include "hybridqec/hybrid.hpp"
#include "hybridqec/linear_code.hpp"
#include "hybridqec/params.hpp"

namespace hqec {

/// Subsystem code on the n1 x n2 lattice built from C1 (columns) and C2 (rows).
/// Qudit (i, j) has index i * n2 + j.
///
/// Z stabilizers are h (x) v for h a row of P1 and v a row of G2; X stabilizers
/// are u (x) h' for u a row of G1 and h' a row of P2 (with all alpha^s
/// multiples when ell > 1). The gauge group is generated by column copies of
/// Z(P1 rows) and row copies of X(P2 rows); the stabilizer is checked to be its
/// center, then gauge pairs are extracted Z-type first.
SubsystemCode construct_bc(const LinearCode& c1, const LinearCode& c2);

/// Parameters predicted for a Bacon-Casaccino construction. `c` is a lower bound.
struct BcPrediction {
  HybridParams params;
  std::size_t purity = 0;
};

/// Subsystem parameters [[n1 n2, k1 k2, (n1-k1)(n2-k2), min(d1, d2)]] and
/// purity min(d1', d2') (dual distances); m holds r.
BcPrediction predict_bc(const LinearCode& c1, const LinearCode& c2);

/// Gauge-fixes every Z-type gauge operator. The prediction has c = min(d, max(d1', d2')).
struct BcHybrid {
  HybridCode code;
  HybridParams predicted;
};
BcHybrid construct_bc_hybrid(const LinearCode& c1, const LinearCode& c2);

/// Minimum distance, or n + 1 for a zero-dimensional code.
std::size_t distance_or_infinite(const LinearCode& c);

}  // namespace hqec
