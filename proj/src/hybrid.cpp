#include "hybridqec/hybrid.hpp"

#include "hybridqec/errors.hpp"

namespace hqec {
namespace {

std::vector<PauliOperator> concat(std::span<const PauliOperator> a, std::span<const PauliOperator> b) {
  std::vector<PauliOperator> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Sum of c_k * expand(ops_k), returned with canonical phase.
PauliOperator linear_combination(const FieldRef& spec, std::size_t n,
                                 std::span<const PauliOperator> ops, std::span<const int> c) {
  const int p = spec->p();
  FpVector acc(2 * static_cast<std::size_t>(spec->ell()) * n, 0);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (c[k] == 0) continue;
    const FpVector v = expand(ops[k]);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + c[k] * v[i]) % p;
  }
  return contract(spec, n, acc);
}

PauliOperator add_multiple(const PauliOperator& t, const PauliOperator& g, int c) {
  return c == 0 ? t : multiply(t, power(g, c)).canonical();
}

// Some t_j in N(S_Q) with pairing(g_i, t_j) = delta_ij.
std::vector<PauliOperator> solve_translations(const StabilizerGroup& quantum,
                                              std::span<const PauliOperator> classical) {
  const FieldRef& spec = quantum.spec();
  const auto& normalizer = quantum.centralizer().basis();
  std::vector<FpVector> rows(classical.size(), FpVector(normalizer.size()));
  for (std::size_t i = 0; i < classical.size(); ++i) {
    for (std::size_t k = 0; k < normalizer.size(); ++k) rows[i][k] = pairing(classical[i], normalizer[k]);
  }
  std::vector<PauliOperator> out;
  for (std::size_t j = 0; j < classical.size(); ++j) {
    FpVector rhs(classical.size(), 0);
    rhs[j] = 1;
    auto y = solve_mod_p(rows, normalizer.size(), rhs, spec->p());
    if (!y) throw InvalidHybrid("classical generator " + std::to_string(j) + " has no translation partner");
    out.push_back(linear_combination(spec, quantum.n(), normalizer, *y));
  }
  return out;
}

FpVector classical_syndrome(std::span<const PauliOperator> classical, const PauliOperator& e) {
  FpVector v(classical.size());
  for (std::size_t i = 0; i < classical.size(); ++i) v[i] = pairing(classical[i], e);
  return v;
}

constexpr std::size_t kAutoTranslationWeight = 4;
constexpr double kAutoTranslationBudget = 4e6;

// Translation candidates for a code given without translations. Light
// operators of N(S_Q) \ N(S0) are put into the gauge group, weight layer by
// weight layer, as long as the gauge group stays free of logical operators of
// the inner code; the remaining directions come from solve_translations.
// Every element of N(S_Q) \ G lighter than the accepted layers then lies in
// N(S0) \ S0, so d reaches the inner-code distance when enough layers fit.
std::vector<PauliOperator> choose_translations(const StabilizerGroup& quantum, const StabilizerGroup& outer,
                                               std::span<const PauliOperator> classical) {
  const FieldRef& spec = quantum.spec();
  const std::size_t n = quantum.n();
  const int p = spec->p();
  const std::size_t r = classical.size();
  const auto inner = min_weight_outside(spec, n, outer.generators(), outer.centralizer().basis(),
                                        kAutoTranslationWeight + 1);
  const std::size_t top = inner.weight ? *inner.weight - 1 : kAutoTranslationWeight;

  PauliSpan span = outer.span();
  std::vector<PauliOperator> accepted;
  const double letters = static_cast<double>(spec->q()) * spec->q() - 1;
  double count = 1;
  for (std::size_t w = 1; w <= top && w <= n && accepted.size() < r; ++w) {
    count = count * static_cast<double>(n - w + 1) / static_cast<double>(w) * letters;
    if (count > kAutoTranslationBudget) break;
    PauliSpan layer_span = span;
    std::vector<PauliOperator> layer = accepted;
    for_each_pauli_of_weight(spec, n, w, [&](const PauliOperator& e) {
      for (const auto& s : quantum.generators()) {
        if (pairing(s, e) != 0) return true;
      }
      if (layer_span.insert(e)) layer.push_back(e);
      return true;
    });
    std::vector<FpVector> syndromes;
    for (const auto& e : layer) syndromes.push_back(classical_syndrome(classical, e));
    if (rank_mod_p(syndromes, r, p) != layer.size()) break;
    span = std::move(layer_span);
    accepted = std::move(layer);
  }

  std::vector<FpVector> syndromes;
  for (const auto& e : accepted) syndromes.push_back(classical_syndrome(classical, e));
  for (const auto& t : solve_translations(quantum, classical)) {
    if (accepted.size() == r) break;
    syndromes.push_back(classical_syndrome(classical, t));
    if (rank_mod_p(syndromes, r, p) == syndromes.size()) {
      accepted.push_back(t);
    } else {
      syndromes.pop_back();
    }
  }
  return accepted;
}

}  // namespace

HybridCode::HybridCode(FieldRef spec, std::size_t n, std::span<const PauliOperator> quantum,
                       std::span<const PauliOperator> classical,
                       std::optional<std::vector<PauliOperator>> translations)
    : quantum_(spec, n, quantum),
      classical_(classical.begin(), classical.end()),
      outer_(spec, n, concat(quantum_.generators(), classical)),
      gauge_(spec, n),
      gauge_perp_(spec, n) {
  const int p = spec->p();
  const auto ell = static_cast<std::size_t>(spec->ell());
  if (classical_.size() % ell != 0) {
    throw Unsupported("non-integral m: " + std::to_string(classical_.size()) +
                      " classical generators over " + spec->name());
  }
  if (outer_.dimension() != quantum_.dimension() + classical_.size()) {
    throw InvalidHybrid("classical generators are dependent on the quantum stabilizer");
  }

  if (!translations) translations = choose_translations(quantum_, outer_, classical_);
  std::vector<PauliOperator> t;
  if (translations->size() != classical_.size()) {
    throw InvalidHybrid("expected " + std::to_string(classical_.size()) + " translations");
  }
  for (std::size_t j = 0; j < translations->size(); ++j) {
    const auto& tj = (*translations)[j];
    if (!same_field(tj.spec(), spec) || tj.n() != n) throw ShapeError("translation has the wrong shape");
    if (!quantum_.centralizer().member(tj)) {
      throw InvalidHybrid("translation " + std::to_string(j) + " does not commute with S_Q");
    }
  }
  // Normalize: t'_j = sum_k C[j][k] t_k where sum_k M[i][k] C[j][k] = delta_ij
  // and M[i][k] = pairing(g_i, t_k).
  const std::size_t r = classical_.size();
  std::vector<FpVector> m_rows(r, FpVector(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) m_rows[i][k] = pairing(classical_[i], (*translations)[k]);
  }
  for (std::size_t j = 0; j < r; ++j) {
    FpVector rhs(r, 0);
    rhs[j] = 1;
    auto c = solve_mod_p(m_rows, r, rhs, p);
    if (!c) throw InvalidHybrid("translations do not pair nondegenerately with the classical generators");
    bool unit = true;
    for (std::size_t k = 0; k < r; ++k) unit = unit && (*c)[k] == (k == j ? 1 : 0);
    t.push_back(unit ? (*translations)[j] : linear_combination(spec, n, *translations, *c));
  }
  // Make translations commute: pairing(t_i, g_k) = -delta_ik, so adding
  // pairing(t_i, t_j) * g_i to t_j clears pairing(t_i, t_j).
  for (std::size_t j = 0; j < t.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) t[j] = add_multiple(t[j], classical_[i], pairing(t[i], t[j]));
  }
  translations_ = std::move(t);

  // Labels: Tr(b_{i,j} alpha^s) = pairing(g_i, t_{j ell + s}).
  const std::size_t m = classical_.size() / ell;
  labels_.assign(classical_.size(), std::vector<Elem>(m, 0));
  for (std::size_t i = 0; i < classical_.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      bool found = false;
      for (Elem b = 0; b < static_cast<Elem>(spec->q()) && !found; ++b) {
        bool ok = true;
        for (std::size_t s = 0; s < ell && ok; ++s) {
          ok = spec->trace(spec->mul(b, spec->basis(static_cast<int>(s)))) ==
               pairing(classical_[i], translations_[j * ell + s]);
        }
        if (ok) {
          labels_[i][j] = b;
          found = true;
        }
      }
      if (!found) throw InvalidHybrid("no logical label for classical generator " + std::to_string(i));
    }
  }

  std::vector<ClassicalTag> tags;
  for (std::size_t i = 0; i < classical_.size(); ++i) {
    tags.push_back({quantum_.dimension() + i, labels_[i]});
  }
  outer_ = outer_.with_classical_tags(std::move(tags));

  gauge_ = outer_.span();
  for (const auto& tj : translations_) gauge_.insert(tj);
  gauge_perp_ = centralizer_basis(gauge_);
}

Rational HybridCode::k() const {
  return Rational(static_cast<long long>(n())) -
         Rational(static_cast<long long>(outer_.dimension()), spec()->ell());
}

HybridCode gauge_fix(const SubsystemCode& c, std::string_view fixed) {
  const auto& pairs = c.gauge_pairs();
  if (!fixed.empty() && fixed.size() != pairs.size()) {
    throw ShapeError("fix selection needs one letter per gauge pair");
  }
  std::vector<PauliOperator> classical, translations;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const char sel = fixed.empty() ? 'Z' : fixed[i];
    if (sel == 'Z' || sel == 'z') {
      classical.push_back(pairs[i].z);
      translations.push_back(pairs[i].x);
    } else if (sel == 'X' || sel == 'x') {
      classical.push_back(pairs[i].x);
      translations.push_back(pairs[i].z);
    } else {
      throw ShapeError(std::string("fix selection letter must be X or Z, got '") + sel + "'");
    }
  }
  for (std::size_t i = 0; i < classical.size(); ++i) {
    for (std::size_t j = i + 1; j < classical.size(); ++j) {
      if (pairing(classical[i], classical[j]) != 0) throw FixedSetNotCommuting(i, j);
    }
  }
  return HybridCode(c.spec(), c.n(), c.stabilizer().generators(), classical, translations);
}

SubsystemCode as_subsystem(const HybridCode& h) {
  std::vector<GaugePair> pairs;
  for (std::size_t i = 0; i < h.classical_generators().size(); ++i) {
    pairs.push_back({h.translations()[i], h.classical_generators()[i]});
  }
  return SubsystemCode(h.spec(), h.n(), h.quantum_stabilizer().generators(), std::move(pairs));
}

WeightSearchResult quantum_distance(const HybridCode& h, std::size_t max_weight) {
  return min_weight_outside(h.spec(), h.n(), h.quantum_stabilizer().generators(),
                            h.gauge_centralizer().basis(), max_weight);
}

WeightSearchResult inner_distance(const HybridCode& h, std::size_t max_weight) {
  return min_weight_outside(h.spec(), h.n(), h.outer_stabilizer().generators(),
                            h.outer_stabilizer().centralizer().basis(), max_weight);
}

WeightSearchResult classical_distance(const HybridCode& h, std::size_t max_weight) {
  return min_weight_outside(h.spec(), h.n(), h.quantum_stabilizer().generators(),
                            h.classical_generators(), max_weight);
}

PauliOperator translation_for_message(const HybridCode& h, std::span<const Elem> a) {
  if (a.size() != h.m()) throw ShapeError("message length differs from m");
  const FieldSpec& f = *h.spec();
  const auto ell = static_cast<std::size_t>(f.ell());
  PauliOperator t = PauliOperator::identity(h.spec(), h.n());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!f.valid(a[j])) throw ShapeError("message symbol out of range");
    for (std::size_t s = 0; s < ell; ++s) {
      const int c = f.coeff(a[j], static_cast<int>(s));
      if (c != 0) t = multiply(t, power(h.translations()[j * ell + s], c));
    }
  }
  return t;
}

StabilizerGroup inner_code_stabilizer(const HybridCode& h, std::span<const Elem> a) {
  if (a.size() != h.m()) throw ShapeError("message length differs from m");
  return apply_phase_tags(h.outer_stabilizer(), a);
}

std::vector<std::vector<Elem>> all_messages(const HybridCode& h) {
  const std::size_t m = h.m();
  const auto q = static_cast<Elem>(h.spec()->q());
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> a(m, 0);
  while (true) {
    out.push_back(a);
    std::size_t i = m;
    while (i > 0 && ++a[i - 1] == q) a[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace hqec
