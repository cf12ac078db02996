#include "hybridqec/kl_oracle.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "hybridqec/bacon_casaccino.hpp"
#include "hybridqec/errors.hpp"
#include "hybridqec/hybrid.hpp"

namespace hqec {
namespace {

using testing::gf;
using testing::P;
using testing::Ps;

double max_abs(const DenseOperator& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

class ScopedCap {
 public:
  explicit ScopedCap(const char* value) { ::setenv("HYBRIDQEC_ORACLE_CAP", value, 1); }
  ~ScopedCap() { ::unsetenv("HYBRIDQEC_ORACLE_CAP"); }
};

HybridCode five_qubit() {
  return HybridCode(gf(2), 5, Ps({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}), std::vector<PauliOperator>{});
}

TEST(KlOracle, ProjectorIsHermitianIdempotentWithExpectedRank) {
  const HybridCode h = testing::example("shaw6");
  const auto p = projector(h.outer_stabilizer());
  EXPECT_LT(max_abs(p * p - p), 1e-9);
  EXPECT_LT(max_abs(p - p.adjoint()), 1e-9);
  EXPECT_NEAR(p.trace().real(), 2.0, 1e-9);

  const auto pq = projector(h.quantum_stabilizer());
  EXPECT_NEAR(pq.trace().real(), 4.0, 1e-9);
  for (const auto& g : h.quantum_stabilizer().generators()) {
    EXPECT_LT(max_abs(pauli_matrix(g) * pq - pq), 1e-9);
  }
}

TEST(KlOracle, InnerCodesAreOrthogonal) {
  for (const char* name : {"shaw6", "gottesman9x"}) {
    const HybridCode h = testing::example(name);
    const auto messages = all_messages(h);
    const auto p0 = projector(inner_code_stabilizer(h, messages[0]));
    const auto p1 = projector(inner_code_stabilizer(h, messages[1]));
    EXPECT_LT(max_abs(p0 * p1), 1e-9) << name;
    // t_a carries C0 onto the inner code of message a.
    const auto t = pauli_matrix(translation_for_message(h, messages[1]));
    EXPECT_LT(max_abs(t * p0 * t.adjoint() - p1), 1e-9) << name;
  }
}

TEST(KlOracle, QutritProjector) {
  const StabilizerGroup s(gf(3), 2, Ps({"(1|0) (2|0)"}, 3));
  const auto p = projector(s);
  EXPECT_LT(max_abs(p * p - p), 1e-9);
  EXPECT_NEAR(p.trace().real(), 3.0, 1e-9);
}

TEST(KlOracle, ShawDetection) {
  const HybridCode h = testing::example("shaw6");
  const auto ok = check_detection(h, 3, 2);
  EXPECT_TRUE(ok.passed());
  EXPECT_EQ(ok.dimension, 64u);
  EXPECT_EQ(ok.code_dimension, 2u);
  EXPECT_EQ(ok.messages, 2u);

  const auto bad_c = check_detection(h, 3, 3);
  EXPECT_FALSE(bad_c.passed());
  EXPECT_EQ(bad_c.min_witness_weight(2), std::optional<std::size_t>(2));
  EXPECT_FALSE(bad_c.min_witness_weight(1).has_value());

  const auto bad_d = check_detection(h, 4, 2);
  EXPECT_FALSE(bad_d.passed());
  EXPECT_EQ(bad_d.min_witness_weight(1), std::optional<std::size_t>(3));
  for (const auto& v : bad_d.violations) {
    EXPECT_EQ(v.condition, 1);
    EXPECT_GT(v.residual, kOracleTolerance);
  }
}

TEST(KlOracle, ViolationsAreSorted) {
  const auto r = check_detection(testing::example("shaw6"), 4, 3);
  ASSERT_FALSE(r.violations.empty());
  for (std::size_t i = 1; i < r.violations.size(); ++i) {
    EXPECT_LE(weight(r.violations[i - 1].error), weight(r.violations[i].error));
  }
}

TEST(KlOracle, Gottesman9Detection) {
  const HybridCode h = testing::example("gottesman9x");
  EXPECT_TRUE(check_detection(h, 3, 3).passed());
  EXPECT_EQ(check_detection(h, 4, 3).min_witness_weight(1), std::optional<std::size_t>(3));
  EXPECT_EQ(check_detection(h, 3, 4).min_witness_weight(2), std::optional<std::size_t>(3));
}

TEST(KlOracle, BaconShorSubsystemConditions) {
  const HybridCode h = testing::example("baconshor9");
  const auto r = check_subsystem_conditions(h, 3, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.dimension, 512u);
  EXPECT_EQ(r.messages, 16u);
  EXPECT_TRUE(check_detection(h, 3, 2).passed());
  EXPECT_FALSE(check_detection(h, 3, 3).passed());
  EXPECT_FALSE(check_subsystem_conditions(h, 4, 2).passed());
}

TEST(KlOracle, FiveQubitCodeWithoutClassicalPart) {
  const HybridCode h = five_qubit();
  const auto r = check_detection(h, 3, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.messages, 1u);
  EXPECT_EQ(r.code_dimension, 2u);
  EXPECT_EQ(check_detection(h, 4, 1).min_witness_weight(1), std::optional<std::size_t>(3));
  EXPECT_TRUE(check_correction(h, 3, 1).passed());
}

TEST(KlOracle, ShawCorrection) {
  const HybridCode h = testing::example("shaw6");
  EXPECT_TRUE(check_correction(h, 3, 1).passed());
  EXPECT_TRUE(check_correction(h, 3, 2).passed());
  EXPECT_FALSE(check_correction(h, 5, 1).passed());
}

TEST(KlOracle, CapFromEnvironment) {
  {
    ScopedCap cap("32");
    EXPECT_EQ(oracle_cap(), 32u);
    EXPECT_THROW(check_detection(testing::example("shaw6"), 3, 2), DimensionTooLarge);
    EXPECT_EQ(hilbert_dimension(*gf(2), 5, oracle_cap()), 32u);
  }
  {
    ScopedCap cap("not-a-number");
    EXPECT_EQ(oracle_cap(), 4096u);
  }
  EXPECT_EQ(oracle_cap(), 4096u);
}

TEST(KlOracle, DimensionTooLarge) {
  try {
    check_detection(testing::example("toric18"), 3, 2);
    FAIL() << "expected DimensionTooLarge";
  } catch (const DimensionTooLarge& e) {
    EXPECT_EQ(e.dimension(), std::size_t{1} << 18);
    EXPECT_EQ(e.cap(), 4096u);
  }
  EXPECT_THROW(pauli_matrix(PauliOperator::identity(gf(3), 8)), DimensionTooLarge);
}

TEST(KlOracle, Grassl12CorrectionAtCapWarns) {
  const HybridCode h = testing::example("grassl12");
  const auto r = check_correction(h, 5, 4);
  EXPECT_EQ(r.dimension, 4096u);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.warnings.empty());
}

TEST(KlOracle, Grassl12DetectionSeesOnlyTheInnerCode) {
  // Weight-4 operators that leave the gauge group all move between inner
  // codes, so every diagonal block they produce vanishes.
  const HybridCode h = testing::example("grassl12");
  EXPECT_TRUE(check_detection(h, 5, 4).passed());
  EXPECT_EQ(check_detection(h, 5, 5).min_witness_weight(2), std::optional<std::size_t>(4));
}

}  // namespace
}  // namespace hqec
