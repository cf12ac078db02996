#include "hybridqec/bacon_casaccino.hpp"

#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "hybridqec/errors.hpp"
#include "hybridqec/linear_code.hpp"
#include "hybridqec/symplectic.hpp"

namespace hqec {
namespace {

using testing::gf;
using testing::Ps;

std::size_t exact(const WeightSearchResult& r, std::size_t n) {
  EXPECT_TRUE(r.exact());
  return r.weight ? *r.weight : n + 1;
}

// Brute-force minimum distance over all nonzero codewords, enumerated by coefficient vectors.
std::size_t brute_distance(const LinearCode& c) {
  const FieldSpec& f = *c.spec();
  const auto q = static_cast<std::size_t>(f.q());
  std::size_t total = 1;
  for (std::size_t i = 0; i < c.k(); ++i) total *= q;
  std::size_t best = c.n() + 1;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<Elem> word(c.n(), 0);
    std::size_t rest = code;
    for (std::size_t i = 0; i < c.k(); ++i, rest /= q) {
      const auto coeff = static_cast<Elem>(rest % q);
      for (std::size_t j = 0; j < c.n(); ++j) word[j] = f.add(word[j], f.mul(coeff, c.generator()[i][j]));
    }
    std::size_t w = 0;
    for (Elem x : word) w += x != 0;
    best = std::min(best, w);
  }
  return best;
}

LinearCode random_code(std::mt19937& rng, const FieldRef& f, std::size_t n) {
  std::uniform_int_distribution<Elem> sym(0, static_cast<Elem>(f->q() - 1));
  std::uniform_int_distribution<std::size_t> dim(1, n);
  for (;;) {
    FqMatrix g(dim(rng), std::vector<Elem>(n));
    for (auto& row : g) {
      for (auto& x : row) x = sym(rng);
    }
    try {
      return LinearCode(f, n, g);
    } catch (const InvalidCode&) {
    }
  }
}

void expect_orthogonal(const LinearCode& c) {
  const FieldSpec& f = *c.spec();
  ASSERT_EQ(c.parity_check().size(), c.n() - c.k());
  for (const auto& g : c.generator()) {
    for (const auto& h : c.parity_check()) {
      Elem s = 0;
      for (std::size_t j = 0; j < c.n(); ++j) s = f.add(s, f.mul(g[j], h[j]));
      ASSERT_EQ(s, 0u);
    }
  }
}

TEST(LinearCode, RepetitionAndDual) {
  const auto rep = LinearCode::repetition(gf(2), 3);
  EXPECT_EQ(rep.k(), 1u);
  EXPECT_EQ(classical_min_distance(rep), 3u);
  const auto d = dual(rep);
  EXPECT_EQ(d.k(), 2u);
  EXPECT_EQ(classical_min_distance(d), 2u);
  EXPECT_TRUE(dual(d).same_code(rep));
  expect_orthogonal(rep);
  expect_orthogonal(d);
}

TEST(LinearCode, FullSpaceAndEmptyDual) {
  const auto full = LinearCode::full(gf(3), 4);
  EXPECT_EQ(full.k(), 4u);
  EXPECT_EQ(classical_min_distance(full), 1u);
  const auto none = dual(full);
  EXPECT_EQ(none.k(), 0u);
  EXPECT_THROW(classical_min_distance(none), NoCodewords);
  EXPECT_EQ(distance_or_infinite(none), 5u);
}

TEST(LinearCode, RejectsDependentRows) {
  EXPECT_THROW(LinearCode(gf(2), 3, {{1, 1, 0}, {1, 1, 0}}), InvalidCode);
  EXPECT_THROW(LinearCode(gf(2), 3, {{1, 1}}), InvalidCode);
  EXPECT_THROW(LinearCode(gf(2), 2, {{1, 2}}), Error);
}

TEST(LinearCode, RandomCodesAgreeWithBruteForce) {
  std::mt19937 rng(29);
  for (int q : {2, 3, 4}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto c = random_code(rng, gf(q), 2 + static_cast<std::size_t>(trial % 4));
      expect_orthogonal(c);
      ASSERT_EQ(classical_min_distance(c), brute_distance(c));
      const auto d = dual(c);
      expect_orthogonal(d);
      ASSERT_EQ(d.k() + c.k(), c.n());
      ASSERT_EQ(distance_or_infinite(d), d.k() == 0 ? c.n() + 1 : brute_distance(d));
      ASSERT_TRUE(dual(d).same_code(c));
    }
  }
}

TEST(LinearCode, FileRoundTrip) {
  std::mt19937 rng(31);
  for (int q : {2, 4, 5}) {
    const auto c = random_code(rng, gf(q), 5);
    const auto back = parse_linear_code(write_linear_code(c));
    EXPECT_EQ(back.generator(), c.generator());
    EXPECT_EQ(back.spec()->q(), q);
  }
  EXPECT_THROW(parse_linear_code("q 2\nn 3 k 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_linear_code("q 2\nn 3 k 2\n1 1 1\n"), ParseError);
}

TEST(BaconCasaccino, Rep3Rep3IsBaconShor) {
  const auto rep = LinearCode::repetition(gf(2), 3);
  const auto code = construct_bc(rep, rep);
  EXPECT_EQ(code.n(), 9u);
  EXPECT_EQ(code.k(), Rational(1));
  EXPECT_EQ(code.r(), Rational(4));
  const auto expected = reduce_and_rank(gf(2), 9, Ps({"ZZZZZZIII", "IIIZZZZZZ", "XXIXXIXXI", "IXXIXXIXX"}));
  EXPECT_TRUE(expected.contains(code.stabilizer().span()));
  EXPECT_TRUE(code.stabilizer().span().contains(expected));
  EXPECT_EQ(exact(min_distance_subsystem(code, 9), 9), 3u);
  EXPECT_EQ(exact(purity(code), 9), 2u);

  const auto pred = predict_bc(rep, rep);
  EXPECT_EQ(format_params(pred.params), "[[9,1:4,3:3]]_2");
  EXPECT_EQ(pred.purity, 2u);
}

TEST(BaconCasaccino, Rep3Rep2) {
  const auto code = construct_bc(LinearCode::repetition(gf(2), 3), LinearCode::repetition(gf(2), 2));
  EXPECT_EQ(code.n(), 6u);
  EXPECT_EQ(code.k(), Rational(1));
  EXPECT_EQ(code.r(), Rational(2));
  EXPECT_EQ(exact(min_distance_subsystem(code, 6), 6), 2u);
}

TEST(BaconCasaccino, FullTimesFull) {
  const auto full = LinearCode::full(gf(2), 2);
  const auto code = construct_bc(full, full);
  EXPECT_EQ(code.k(), Rational(4));
  EXPECT_EQ(code.r(), Rational(0));
  EXPECT_EQ(code.stabilizer().dimension(), 0u);
  EXPECT_EQ(exact(min_distance_subsystem(code, 4), 4), 1u);
}

TEST(BaconCasaccino, FieldMismatch) {
  EXPECT_THROW(construct_bc(LinearCode::repetition(gf(2), 3), LinearCode::repetition(gf(3), 3)), FieldMismatch);
}

TEST(BaconCasaccino, PredictionMatchesEnumerationOnRandomCodes) {
  std::mt19937 rng(37);
  for (int q : {2, 3, 4}) {
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t n1 = 2 + static_cast<std::size_t>(trial % 2);
      const std::size_t n2 = q == 2 ? 2 + static_cast<std::size_t>(trial / 2 % 2) : 2;
      const auto c1 = random_code(rng, gf(q), n1);
      const auto c2 = random_code(rng, gf(q), n2);
      const auto pred = predict_bc(c1, c2);
      const auto code = construct_bc(c1, c2);
      const std::size_t n = n1 * n2;
      ASSERT_EQ(static_cast<std::size_t>(pred.params.n), n);
      ASSERT_EQ(code.k(), pred.params.k) << "q=" << q << " trial=" << trial;
      ASSERT_EQ(code.r(), pred.params.m);
      if (code.k() > Rational(0)) {
        ASSERT_EQ(static_cast<long long>(exact(min_distance_subsystem(code, n), n)), pred.params.d);
      }
      if (code.r() > Rational(0)) ASSERT_EQ(exact(purity(code), n), pred.purity);
    }
  }
}

TEST(BaconCasaccino, Gf4Instance) {
  const auto rep = LinearCode::repetition(gf(4), 2);
  const auto code = construct_bc(rep, rep);
  EXPECT_EQ(code.k(), Rational(1));
  EXPECT_EQ(code.r(), Rational(1));
  EXPECT_EQ(code.gauge_pairs().size(), 2u);  // ell * r
  EXPECT_EQ(exact(min_distance_subsystem(code, 4), 4), 2u);
  EXPECT_EQ(exact(purity(code), 4), 2u);
}

TEST(BaconCasaccino, HybridFamily) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto rep = LinearCode::repetition(gf(2), n);
    const auto [code, pred] = construct_bc_hybrid(rep, rep);
    const std::size_t total = n * n;
    EXPECT_EQ(code.k(), pred.k) << n;
    EXPECT_EQ(Rational(static_cast<long long>(code.m())), pred.m) << n;
    const std::size_t cap = std::min<std::size_t>(total, 5);
    const auto d = quantum_distance(code, cap);
    const auto c = classical_distance(code, cap);
    ASSERT_TRUE(d.weight.has_value());
    EXPECT_EQ(static_cast<long long>(*d.weight), pred.d) << n;
    ASSERT_TRUE(c.weight.has_value());
    EXPECT_GE(static_cast<long long>(*c.weight), pred.c) << n;
    for (std::size_t i = 0; i < code.m(); ++i) {
      for (std::size_t j = 0; j < code.m(); ++j) {
        EXPECT_EQ(pairing(code.classical_generators()[i], code.translations()[j]), i == j ? 1 : 0);
      }
    }
  }
}

}  // namespace
}  // namespace hqec
