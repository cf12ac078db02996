#include "hybridqec/pauli.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "hybridqec/errors.hpp"
#include "hybridqec/kl_oracle.hpp"

namespace hqec {
namespace {

using testing::gf;
using testing::P;

// Independent dense construction: X(a)|x> = |x + a>, Z(b)|x> = w^Tr(bx)|x>,
// tensor factor 0 most significant, global phase i^c (p = 2) or w^c.
Eigen::MatrixXcd reference_matrix(const PauliOperator& e) {
  const FieldSpec& f = *e.spec();
  const int q = f.q(), p = f.p();
  const std::complex<double> w = std::polar(1.0, 2 * std::numbers::pi / p);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t j = 0; j < e.n(); ++j) {
    Eigen::MatrixXcd local = Eigen::MatrixXcd::Zero(q, q);
    for (Elem x = 0; x < static_cast<Elem>(q); ++x) {
      const Elem y = f.add(x, e.x(j));
      local(y, x) = std::pow(w, f.trace(f.mul(e.z(j), x)));
    }
    Eigen::MatrixXcd next(m.rows() * q, m.cols() * q);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) next.block(r * q, c * q, q, q) = m(r, c) * local;
    }
    m = next;
  }
  const std::complex<double> unit = p == 2 ? std::complex<double>(0, 1) : w;
  return std::pow(unit, e.phase()) * m;
}

TEST(Pauli, Weight) {
  EXPECT_EQ(weight(PauliOperator::identity(gf(2), 6)), 0u);
  EXPECT_EQ(weight(P("YIZXXY")), 5u);
  EXPECT_EQ(weight(P("IIIZIZ")), 2u);
  EXPECT_EQ(weight(P("-iIIIIII")), 0u);
  EXPECT_EQ(support(P("IIIZIZ")), (std::vector<std::size_t>{3, 5}));
}

TEST(Pauli, PairingExamples) {
  EXPECT_EQ(pairing(P("X"), P("Z")), 1);
  EXPECT_EQ(pairing(P("YIZXXY"), P("ZXIIXZ")), 0);
  EXPECT_EQ(pairing(P("YIZXXY"), P("YIZXXY")), 0);
  EXPECT_THROW(pairing(P("XX"), P("X")), ShapeError);
  EXPECT_THROW(pairing(P("X"), P("(1|0)", 3)), ShapeError);
}

TEST(Pauli, MultiplyPhases) {
  const PauliOperator xz = multiply(P("X"), P("Z"));
  EXPECT_EQ(xz.x(0), 1u);
  EXPECT_EQ(xz.z(0), 1u);
  EXPECT_EQ(xz.phase(), 0);
  EXPECT_EQ(format_pauli(xz), "-iY");
  EXPECT_EQ(P("Y").phase(), 1);
  EXPECT_EQ(multiply(P("Z"), P("X")).phase(), 2);
  EXPECT_EQ(multiply(P("IIIZIZ"), P("IIIZIZ")), PauliOperator::identity(gf(2), 6));
  EXPECT_EQ(multiply(PauliOperator::identity(gf(2), 6), P("YIZXXY")), P("YIZXXY"));
  const PauliOperator e = P("(1|2) (0|1)", 3);
  EXPECT_TRUE(multiply(e, inverse(e)).is_identity_up_to_phase());
  EXPECT_EQ(multiply(e, inverse(e)).phase(), 0);
  EXPECT_EQ(power(e, 3), PauliOperator::identity(gf(3), 2));
}

TEST(Pauli, ParseExamples) {
  const PauliOperator g = P("IIIXII");
  EXPECT_EQ(g.x(), (std::vector<Elem>{0, 0, 0, 1, 0, 0}));
  EXPECT_EQ(g.z(), (std::vector<Elem>{0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(g.phase(), 0);
  const PauliOperator t = P("(0|0) (1|0)", 3);
  EXPECT_EQ(t.x(), (std::vector<Elem>{0, 1}));
  EXPECT_EQ(t.z(), (std::vector<Elem>{0, 0}));
  EXPECT_EQ(format_pauli(P("YIZXXY")), "YIZXXY");
  EXPECT_EQ(format_pauli(P("-iXZ")), "-iXZ");
  EXPECT_EQ(format_pauli(P("w^2 (1|2) (0|0)", 3)), "w^2 (1|2) (0|0)");
}

TEST(Pauli, ParseErrorsCarryColumn) {
  try {
    P("IQX");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 2u);
  }
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("(1|9)", 3), ParseError);
  EXPECT_THROW(P("(1|0", 3), ParseError);
  EXPECT_THROW(P("(1 0)", 3), ParseError);
}

TEST(Pauli, RoundTripRandom) {
  std::mt19937 rng(7);
  for (int q : {2, 3, 4, 5, 8, 9}) {
    const FieldRef f = gf(q);
    std::uniform_int_distribution<int> ph(0, phase_modulus(*f) - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const PauliOperator e = testing::random_pauli(rng, f, 1 + trial % 5).with_phase(ph(rng));
      ASSERT_EQ(parse_pauli(format_pauli(e), f), e) << format_pauli(e);
    }
  }
}

TEST(Pauli, PairingBilinearAntisymmetricRandomized) {
  std::mt19937 rng(11);
  for (int q : {2, 3, 4, 9}) {
    const FieldRef f = gf(q);
    const int p = f->p();
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
      const auto a = testing::random_pauli(rng, f, n);
      const auto b = testing::random_pauli(rng, f, n);
      const auto c = testing::random_pauli(rng, f, n);
      ASSERT_EQ(pairing(a, b), (p - pairing(b, a)) % p);
      ASSERT_EQ(pairing(a, a), 0);
      ASSERT_EQ(pairing(multiply(a, b), c), (pairing(a, c) + pairing(b, c)) % p);
      ASSERT_EQ(pairing(a, multiply(b, c)), (pairing(a, b) + pairing(a, c)) % p);
      ASSERT_LE(weight(multiply(a, b)), weight(a) + weight(b));
    }
  }
}

TEST(Pauli, MultiplyIsAssociativeRandomized) {
  std::mt19937 rng(5);
  for (int q : {2, 3, 4}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = testing::random_pauli(rng, gf(q), 4);
      const auto b = testing::random_pauli(rng, gf(q), 4);
      const auto c = testing::random_pauli(rng, gf(q), 4);
      ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    }
  }
}

TEST(Pauli, MatrixOfProductIsProductOfMatrices) {
  for (int q : {2, 3, 4}) {
    const auto ops = testing::all_paulis(gf(q), q == 4 ? 1 : 2);
    for (const auto& a : ops) {
      for (const auto& b : ops) {
        const auto lhs = pauli_matrix(multiply(a, b));
        const auto rhs = (pauli_matrix(a) * pauli_matrix(b)).eval();
        ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12) << format_pauli(a) << " * " << format_pauli(b);
      }
    }
  }
}

TEST(Pauli, MatrixMatchesReferenceConstruction) {
  std::mt19937 rng(3);
  for (int q : {2, 3, 4, 5}) {
    const std::size_t n = q == 2 ? 4 : 2;
    for (int trial = 0; trial < 40; ++trial) {
      const auto e = testing::random_pauli(rng, gf(q), n).with_phase(trial % phase_modulus(*gf(q)));
      ASSERT_LT((pauli_matrix(e) - reference_matrix(e)).cwiseAbs().maxCoeff(), 1e-12) << format_pauli(e);
    }
  }
}

TEST(Pauli, CommutationRelationHoldsForMatrices) {
  std::mt19937 rng(9);
  for (int q : {2, 3, 4}) {
    const FieldRef f = gf(q);
    const std::complex<double> w = std::polar(1.0, 2 * std::numbers::pi / f->p());
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = testing::random_pauli(rng, f, 2);
      const auto b = testing::random_pauli(rng, f, 2);
      const auto ma = pauli_matrix(a), mb = pauli_matrix(b);
      const Eigen::MatrixXcd lhs = ma * mb;
      const Eigen::MatrixXcd rhs = std::pow(w, pairing(a, b)) * (mb * ma);
      ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Pauli, QubitStringsAreHermitian) {
  for (std::size_t n = 1; n <= 3; ++n) {
    testing::all_paulis(gf(2), n);
    for (const auto& e : testing::all_paulis(gf(2), n)) {
      const auto m = pauli_matrix(parse_pauli(format_pauli(e.canonical()), gf(2)));
      ASSERT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12) << format_pauli(e.canonical());
    }
  }
}

TEST(Pauli, SingleQubitMatrices) {
  using C = std::complex<double>;
  const auto y = pauli_matrix(P("Y"));
  EXPECT_EQ(y(0, 1), C(0, -1));
  EXPECT_EQ(y(1, 0), C(0, 1));
  const auto z3 = pauli_matrix(P("(0|1)", 3));
  const C w = std::polar(1.0, 2 * std::numbers::pi / 3);
  EXPECT_LT(std::abs(z3(0, 0) - 1.0), 1e-12);
  EXPECT_LT(std::abs(z3(1, 1) - w), 1e-12);
  EXPECT_LT(std::abs(z3(2, 2) - w * w), 1e-12);
}

TEST(Pauli, EnumerationOrder) {
  std::vector<std::string> seen;
  for_each_pauli_of_weight(gf(2), 3, 1, [&](const PauliOperator& e) {
    seen.push_back(format_pauli(e.canonical()));
    return true;
  });
  EXPECT_EQ(seen, (std::vector<std::string>{"ZII", "XII", "YII", "IZI", "IXI", "IYI", "IIZ", "IIX", "IIY"}));

  for (int q : {2, 3}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::size_t total = 0;
      for (std::size_t w = 0; w <= n; ++w) {
        std::size_t count = 0;
        for_each_pauli_of_weight(gf(q), n, w, [&](const PauliOperator& e) {
          EXPECT_EQ(weight(e), w);
          ++count;
          return true;
        });
        total += count;
      }
      std::size_t expected = 1;
      for (std::size_t i = 0; i < 2 * n; ++i) expected *= static_cast<std::size_t>(q);
      EXPECT_EQ(total, expected);
    }
  }
}

TEST(Pauli, ColexCombinations) {
  std::vector<std::size_t> c{0, 1};
  std::vector<std::vector<std::size_t>> all{c};
  while (next_combination_colex(c, 4)) all.push_back(c);
  const std::vector<std::vector<std::size_t>> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  EXPECT_EQ(all, expected);
}

}  // namespace
}  // namespace hqec
