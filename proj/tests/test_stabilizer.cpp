#include "hybridqec/stabilizer.hpp"

#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "hybridqec/errors.hpp"
#include "hybridqec/hybrid.hpp"

namespace hqec {
namespace {

using testing::gf;
using testing::P;
using testing::Ps;

StabilizerGroup group(std::initializer_list<std::string_view> rows, int q = 2) {
  const auto gens = Ps(rows, q);
  return StabilizerGroup(gf(q), gens.front().n(), gens);
}

void expect_centralizer_law(const StabilizerGroup& s) {
  const auto& perp = s.centralizer();
  ASSERT_EQ(perp.rank() + s.dimension(), s.span().ambient_dimension());
  for (const auto& g : s.generators()) {
    for (const auto& h : perp.basis()) ASSERT_EQ(pairing(g, h), 0);
  }
  ASSERT_TRUE(perp.contains(s.span()));
}

void expect_logical_invariants(const StabilizerGroup& s) {
  const auto pairs = logical_operators(s);
  const auto ell = static_cast<std::size_t>(s.spec()->ell());
  ASSERT_EQ(Rational(static_cast<long long>(pairs.size())), s.k() * Rational(static_cast<long long>(ell)));
  PauliSpan all = s.span();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ASSERT_TRUE(s.centralizer().member(pairs[i].x));
    ASSERT_TRUE(s.centralizer().member(pairs[i].z));
    ASSERT_TRUE(all.insert(pairs[i].x));
    ASSERT_TRUE(all.insert(pairs[i].z));
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      ASSERT_EQ(pairing(pairs[i].x, pairs[j].z) != 0, i == j);
      if (i != j) {
        ASSERT_EQ(pairing(pairs[i].x, pairs[j].x), 0);
        ASSERT_EQ(pairing(pairs[i].z, pairs[j].z), 0);
      }
    }
  }
  ASSERT_TRUE(all.contains(s.centralizer()));
}

TEST(Stabilizer, DimensionsAndK) {
  const auto shaw = group({"YIZXXY", "ZXIIXZ", "IZXXXX", "ZZZIZI"});
  EXPECT_EQ(shaw.dimension(), 4u);
  EXPECT_EQ(shaw.k(), Rational(2));
  const auto five = group({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
  EXPECT_EQ(five.k(), Rational(1));
  // One generator over F_4 removes half a qudit.
  const StabilizerGroup half(gf(4), 1, std::vector{PauliOperator(gf(4), {1}, {0})});
  EXPECT_EQ(half.dimension(), 1u);
  EXPECT_EQ(half.k(), Rational(1, 2));
}

TEST(Stabilizer, NotAbelianReportsIndices) {
  try {
    group({"XXI", "ZZI", "ZII"});
    FAIL() << "expected NotAbelian";
  } catch (const NotAbelian& e) {
    EXPECT_EQ(e.first(), 0u);
    EXPECT_EQ(e.second(), 2u);
  }
}

TEST(Stabilizer, InconsistentPhases) {
  EXPECT_THROW(group({"XX", "-XX"}), InconsistentPhases);
  EXPECT_THROW(group({"XX", "ZZ", "YY"}), InconsistentPhases);  // XX * ZZ = -YY
  EXPECT_THROW(group({"XX", "iXX"}), Error);
}

TEST(Stabilizer, DuplicatesAreDropped) {
  const auto s = group({"XX", "ZZ", "XX", "-YY"});
  EXPECT_EQ(s.dimension(), 2u);
  EXPECT_EQ(s.source_indices(), (std::vector<std::size_t>{0, 1}));
}

TEST(Stabilizer, ElementForRecoversExactPhase) {
  const auto s = group({"XX", "ZZ"});
  const auto yy = s.element_for(P("YY"));
  ASSERT_TRUE(yy.has_value());
  EXPECT_EQ(*yy, P("-YY"));
  EXPECT_FALSE(s.element_for(P("XI")).has_value());
}

TEST(Stabilizer, CentralizerLawOnExamples) {
  expect_centralizer_law(group({"YIZXXY", "ZXIIXZ", "IZXXXX", "ZZZIZI"}));
  expect_centralizer_law(group({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}));
  for (const auto& entry : catalog()) {
    const HybridCode h = testing::example(entry.name);
    expect_centralizer_law(h.quantum_stabilizer());
    expect_centralizer_law(h.outer_stabilizer());
  }
}

TEST(Stabilizer, CentralizerLawRandomQutrits) {
  std::mt19937 rng(12);
  const FieldRef f = gf(3);
  for (int trial = 0; trial < 40; ++trial) {
    // Build commuting generators by taking a centralizer of random operators.
    PauliSpan seed(f, 3);
    seed.insert(testing::random_pauli(rng, f, 3));
    const auto c = centralizer_basis(seed);
    std::vector<PauliOperator> gens;
    for (const auto& e : c.basis()) {
      bool ok = true;
      for (const auto& g : gens) ok = ok && pairing(g, e) == 0;
      if (ok) gens.push_back(e);
    }
    const StabilizerGroup s(f, 3, gens);
    expect_centralizer_law(s);
    expect_logical_invariants(s);
  }
}

TEST(Stabilizer, LogicalOperators) {
  expect_logical_invariants(group({"YIZXXY", "ZXIIXZ", "IZXXXX", "ZZZIZI"}));
  expect_logical_invariants(group({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}));
  expect_logical_invariants(group({"II"}));
  for (const auto& entry : catalog()) expect_logical_invariants(testing::example(entry.name).quantum_stabilizer());
  const StabilizerGroup s(gf(4), 2, std::vector{PauliOperator(gf(4), {1, 1}, {0, 0})});
  expect_logical_invariants(s);
}

TEST(Stabilizer, PhaseTagsOnShaw) {
  const HybridCode h = testing::example("shaw6");
  const auto& outer = h.outer_stabilizer();
  ASSERT_EQ(outer.classical_tags().size(), 1u);
  const std::size_t gi = outer.classical_tags()[0].generator;
  EXPECT_EQ(outer.generators()[gi].canonical(), P("IIIXII"));

  const std::vector<Elem> zero{0}, one{1};
  EXPECT_EQ(apply_phase_tags(outer, zero).generators(), outer.generators());
  const auto flipped = apply_phase_tags(outer, one);
  EXPECT_EQ(flipped.generators()[gi].phase(), 2);
  for (std::size_t i = 0; i < outer.generators().size(); ++i) {
    if (i != gi) EXPECT_EQ(flipped.generators()[i], outer.generators()[i]);
  }
  // Tagging is a group action: applying twice returns the original phases.
  EXPECT_EQ(apply_phase_tags(flipped, one).generators(), outer.generators());
  EXPECT_THROW(apply_phase_tags(outer, std::vector<Elem>{0, 1}), ShapeError);
}

TEST(Stabilizer, PhaseTagsOverQutrits) {
  const auto gens = Ps({"(0|1) (0|1)", "(1|0) (2|0)"}, 3);
  const StabilizerGroup s(gf(3), 2, gens);
  const auto tagged = s.with_classical_tags({ClassicalTag{1, {1}}});
  EXPECT_EQ(apply_phase_tags(tagged, std::vector<Elem>{2}).generators()[1].phase(), 1);
  EXPECT_EQ(apply_phase_tags(tagged, std::vector<Elem>{1}).generators()[1].phase(), 2);
  for (Elem a = 0; a < 3; ++a) {
    for (Elem b = 0; b < 3; ++b) {
      const auto ab = apply_phase_tags(apply_phase_tags(tagged, std::vector<Elem>{a}), std::vector<Elem>{b});
      EXPECT_EQ(ab.generators(), apply_phase_tags(tagged, std::vector<Elem>{(a + b) % 3}).generators());
    }
  }
}

TEST(Stabilizer, TraceDot) {
  const FieldSpec& f = *gf(4);
  EXPECT_EQ(trace_dot(f, std::vector<Elem>{2}, std::vector<Elem>{1}), 1);
  EXPECT_EQ(trace_dot(f, std::vector<Elem>{1}, std::vector<Elem>{1}), 0);
  EXPECT_EQ(trace_dot(f, std::vector<Elem>{2, 2}, std::vector<Elem>{1, 1}), 0);
}

}  // namespace
}  // namespace hqec
