#include "hybridqec/stabilizer.hpp"

#include <algorithm>
#include <cassert>

#include "hybridqec/errors.hpp"

namespace hqec {
namespace {

bool is_z_type(const PauliOperator& e) {
  return std::all_of(e.x().begin(), e.x().end(), [](Elem a) { return a == 0; });
}

bool is_x_type(const PauliOperator& e) {
  return std::all_of(e.z().begin(), e.z().end(), [](Elem b) { return b == 0; });
}

}  // namespace

int trace_dot(const FieldSpec& f, std::span<const Elem> u, std::span<const Elem> v) {
  if (u.size() != v.size()) throw ShapeError("vectors differ in length");
  Elem acc = 0;
  for (std::size_t j = 0; j < u.size(); ++j) acc = f.add(acc, f.mul(u[j], v[j]));
  return f.trace(acc);
}

StabilizerGroup::StabilizerGroup(FieldRef spec, std::size_t n, std::span<const PauliOperator> gens)
    : span_(spec, n), centralizer_(spec, n) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!same_field(gens[i].spec(), spec) || gens[i].n() != n) {
      throw ShapeError("generator " + std::to_string(i) + " has the wrong shape");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (pairing(gens[j], gens[i]) != 0) throw NotAbelian(j, i);
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const PauliOperator& g = gens[i];
    if (spec->p() == 2) {
      // g^2 = +I is needed, otherwise -I is in the group.
      const PauliOperator sq = multiply(g, g);
      if (sq.phase() != 0) {
        throw InconsistentPhases("generator " + std::to_string(i) + " squares to -I");
      }
    }
    if (auto coeffs = span_.solve(g)) {
      if (span_.combination(*coeffs) != g) {
        throw InconsistentPhases("generator " + std::to_string(i) +
                                 " is a product of earlier generators with a different phase");
      }
      continue;
    }
    span_.insert(g);
    source_.push_back(i);
  }
  centralizer_ = centralizer_basis(span_);
  // Nondegeneracy of the pairing.
  if (centralizer_.rank() + span_.rank() != span_.ambient_dimension()) {
    throw InvalidCode("centralizer dimension law violated");
  }
}

StabilizerGroup::StabilizerGroup(PauliSpan span, std::vector<std::size_t> source,
                                 PauliSpan centralizer, std::vector<ClassicalTag> tags)
    : span_(std::move(span)),
      source_(std::move(source)),
      centralizer_(std::move(centralizer)),
      tags_(std::move(tags)) {}

Rational StabilizerGroup::k() const {
  return Rational(static_cast<long long>(n())) -
         Rational(static_cast<long long>(dimension()), spec()->ell());
}

StabilizerGroup StabilizerGroup::with_classical_tags(std::vector<ClassicalTag> tags) const {
  std::size_t m = tags.empty() ? 0 : tags.front().label.size();
  for (const auto& t : tags) {
    if (t.generator >= dimension()) throw ShapeError("classical tag refers to a missing generator");
    if (t.label.size() != m) throw ShapeError("classical labels differ in length");
  }
  return StabilizerGroup(span_, source_, centralizer_, std::move(tags));
}

std::optional<PauliOperator> StabilizerGroup::element_for(const PauliOperator& e) const {
  auto coeffs = span_.solve(e);
  if (!coeffs) return std::nullopt;
  return span_.combination(*coeffs);
}

std::vector<LogicalPair> logical_operators(const StabilizerGroup& s) {
  // Z-type first, then X-type, then the rest, so CSS codes get CSS logicals.
  std::vector<PauliOperator> ordered;
  const auto& basis = s.centralizer().basis();
  for (const auto& e : basis) {
    if (is_z_type(e)) ordered.push_back(e);
  }
  for (const auto& e : basis) {
    if (is_x_type(e) && !is_z_type(e)) ordered.push_back(e);
  }
  for (const auto& e : basis) {
    if (!is_x_type(e) && !is_z_type(e)) ordered.push_back(e);
  }
  std::vector<LogicalPair> out;
  for (auto& [u, v] : symplectic_pairs(s.spec(), s.n(), ordered)) {
    out.push_back({std::move(v), std::move(u)});
  }
  return out;
}

StabilizerGroup apply_phase_tags(const StabilizerGroup& s, std::span<const Elem> message) {
  const FieldSpec& f = *s.spec();
  const int unit = f.p() == 2 ? 2 : 1;
  std::vector<PauliOperator> gens = s.generators();
  for (const auto& tag : s.classical_tags()) {
    if (tag.label.size() != message.size()) throw ShapeError("message length differs from m");
    PauliOperator& g = gens[tag.generator];
    g = g.with_phase(g.phase() - unit * trace_dot(f, tag.label, message));
  }
  StabilizerGroup tagged(s.spec(), s.n(), gens);
  assert(tagged.dimension() == s.dimension());
  return tagged.with_classical_tags(s.classical_tags());
}

}  // namespace hqec
