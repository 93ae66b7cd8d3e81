#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vstar/field.hpp"
#include "vstar/linalg.hpp"

using namespace vstar;

namespace {

struct FieldCase {
  std::uint32_t p;
  unsigned m;
};

class FieldAxioms : public ::testing::TestWithParam<FieldCase> {};

TEST_P(FieldAxioms, MatchesPolynomialOracle) {
  const auto [p, m] = GetParam();
  const Field k(p, m);
  const oracle::PolyField o{p, m, k.modulus()};
  const auto all = k.enumerate();
  ASSERT_EQ(all.size(), k.size());
  for (auto a : all)
    for (auto b : all) {
      ASSERT_EQ(k.add(a, b).rep, o.add(a.rep, b.rep));
      ASSERT_EQ(k.mul(a, b).rep, o.mul(a.rep, b.rep)) << k.format(a) << " * " << k.format(b);
      ASSERT_EQ(k.add(k.sub(a, b), b), a);
      if (b.rep) ASSERT_EQ(k.mul(k.div(a, b), b), a);
    }
}

TEST_P(FieldAxioms, InversesAndIdentities) {
  const auto [p, m] = GetParam();
  const Field k(p, m);
  for (auto a : k.enumerate()) {
    EXPECT_EQ(k.add(a, Field::zero()), a);
    EXPECT_EQ(k.mul(a, Field::one()), a);
    EXPECT_EQ(k.add(a, k.neg(a)), Field::zero());
    if (a.rep) {
      EXPECT_EQ(k.mul(a, k.inv(a)), Field::one());
      EXPECT_EQ(k.pow(a, k.size() - 1), Field::one());
    }
    EXPECT_EQ(k.pow(a, k.size()), a);
    EXPECT_EQ(k.parse(k.format(a)), a) << k.format(a);
  }
}

TEST_P(FieldAxioms, Distributivity) {
  const auto [p, m] = GetParam();
  const Field k(p, m);
  const auto all = k.enumerate();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  const bool exhaustive = all.size() <= 32;
  const std::size_t trials = exhaustive ? all.size() * all.size() * all.size() : 200000;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = exhaustive ? all[t % all.size()] : all[pick(rng)];
    const auto b = exhaustive ? all[(t / all.size()) % all.size()] : all[pick(rng)];
    const auto c = exhaustive ? all[t / all.size() / all.size()] : all[pick(rng)];
    ASSERT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
    ASSERT_EQ(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(FieldCase{2, 1}, FieldCase{3, 1}, FieldCase{5, 1}, FieldCase{7, 1}, FieldCase{2, 2},
                                           FieldCase{2, 3}, FieldCase{2, 4}, FieldCase{3, 2}, FieldCase{5, 2}, FieldCase{3, 3},
                                           FieldCase{2, 8}, FieldCase{251, 1}),
                         [](const auto& info) {
                           return "GF" + std::to_string(info.param.p) + "_" + std::to_string(info.param.m);
                         });

}  // namespace

TEST(Field, DefaultModulusIsLeastIrreducible) {
  EXPECT_EQ(Field(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(Field(2, 3).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(Field(2, 4).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
  EXPECT_EQ(Field(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, ExplicitModulus) {
  const Field k(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1});
  const FieldElement x{2};
  EXPECT_EQ(k.pow(x, 3), k.parse("x^2+1"));
  EXPECT_THROW(Field(2, 2, std::vector<std::uint32_t>{1, 0, 1}), FieldError);  // x^2+1 = (x+1)^2
  EXPECT_THROW(Field(2, 2, std::vector<std::uint32_t>{1, 1}), FieldError);
}

TEST(Field, ParseName) {
  EXPECT_EQ(Field::parse_name("GF(2)").size(), 2u);
  EXPECT_EQ(Field::parse_name("GF(4)").degree(), 2u);
  EXPECT_EQ(Field::parse_name("GF(2^3)").size(), 8u);
  EXPECT_EQ(Field::parse_name(" GF( 9 ) ").characteristic(), 3u);
  EXPECT_EQ(Field::parse_name("GF(8)").name(), "GF(8)");
  EXPECT_THROW(Field::parse_name("GF(6)"), FieldError);
  EXPECT_THROW(Field::parse_name("GF(1)"), FieldError);
  EXPECT_THROW(Field::parse_name("F(2)"), FieldError);
  EXPECT_THROW(Field::parse_name("GF(4^2)"), FieldError);
}

TEST(Field, Errors) {
  const Field k(3, 1);
  EXPECT_THROW(k.inv(Field::zero()), FieldError);
  EXPECT_THROW(Field(4, 1), FieldError);
  EXPECT_THROW(Field(2, 0), FieldError);
  EXPECT_THROW(Field(2, 2).parse("x^2"), FieldError);
  EXPECT_THROW(Field(2, 2).parse("y"), FieldError);
}

TEST(Field, FormatAndFromInt) {
  const Field k4(2, 2);
  EXPECT_EQ(k4.format({3}), "x+1");
  EXPECT_EQ(k4.format({2}), "x");
  const Field k9(3, 2);
  EXPECT_EQ(k9.format({7}), "2x+1");
  const Field k5(5, 1);
  EXPECT_EQ(k5.from_int(-1), FieldElement{4});
  EXPECT_EQ(k5.from_int(12), FieldElement{2});
  EXPECT_EQ(k5.parse("-2"), FieldElement{3});
}

TEST(Field, BasisSpansField) {
  const Field k(3, 2);
  const auto b = k.basis();
  ASSERT_EQ(b.size(), 2u);
  std::set<std::uint32_t> span;
  for (auto c0 : Field(3, 1).enumerate())
    for (auto c1 : Field(3, 1).enumerate()) span.insert(k.add(k.mul(c0, b[0]), k.mul(c1, b[1])).rep);
  EXPECT_EQ(span.size(), 9u);
}

TEST(LinearAlgebra, RankOverPrimeFields) {
  const Field k2(2, 1);
  const Matrix m{{{1}, {1}, {0}}, {{0}, {1}, {1}}, {{1}, {0}, {1}}};
  EXPECT_EQ(rank(m, k2), 2u);  // rows sum to zero over GF(2)
  EXPECT_EQ(nullity(m, 3, k2), 1u);
  const Field k3(3, 1);
  EXPECT_EQ(rank(m, k3), 3u);
  EXPECT_EQ(rank(Matrix{}, k3), 0u);
}
