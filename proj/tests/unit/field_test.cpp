#include <random>

#include <gtest/gtest.h>

#include "orthograph/field.hpp"

using namespace orthograph;

namespace {

std::vector<Scalar> all_elements(const FieldCtx& f) {
  std::vector<Scalar> out;
  for (std::uint64_t r = 0; r < f.characteristic(); ++r) out.push_back(Scalar::from_residue(f, r));
  return out;
}

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 100);
  return Scalar(FieldCtx::rationals(), mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST(FieldCtx, RejectsNonPrimes) {
  EXPECT_THROW(FieldCtx::prime(0), Error);
  EXPECT_THROW(FieldCtx::prime(1), Error);
  EXPECT_THROW(FieldCtx::prime(4), Error);
  EXPECT_THROW(FieldCtx::prime(std::uint64_t{1} << 31), Error);
  EXPECT_EQ(FieldCtx::prime(2147483647).characteristic(), 2147483647u);
  try {
    FieldCtx::prime(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidField);
  }
}

TEST(FieldCtx, Names) {
  EXPECT_EQ(FieldCtx::prime(5).name(), "GF(5)");
  EXPECT_EQ(FieldCtx::rationals().name(), "Q");
}

TEST(ScalarInv, Examples) {
  const auto gf5 = FieldCtx::prime(5);
  // Oracle: search the residues 1..4 for the inverse of 2.
  std::uint64_t expected = 0;
  for (std::uint64_t y = 1; y < 5; ++y) {
    if (2 * y % 5 == 1) expected = y;
  }
  ASSERT_EQ(expected, 3u);
  EXPECT_EQ(scalar_inv(Scalar(gf5, 2L)).residue(), expected);
  EXPECT_TRUE(scalar_inv(Scalar::one(FieldCtx::rationals())).is_one());
  EXPECT_TRUE(scalar_inv(Scalar::one(FieldCtx::prime(2))).is_one());
}

TEST(ScalarInv, ZeroHasNoInverse) {
  for (const auto& f : {FieldCtx::prime(2), FieldCtx::prime(7), FieldCtx::rationals()}) {
    try {
      scalar_inv(Scalar::zero(f));
      FAIL() << f.name();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ZeroInverse);
    }
  }
}

TEST(Scalar, MixedFieldsRejected) {
  const Scalar a(FieldCtx::prime(3), 1L);
  const Scalar b(FieldCtx::prime(5), 1L);
  const Scalar q(FieldCtx::rationals(), 1L);
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(a * q, Error);
  EXPECT_THROW((void)(a == b), Error);
}

TEST(Scalar, ResiduesReducedAndRationalsNormalized) {
  const auto gf5 = FieldCtx::prime(5);
  EXPECT_EQ(Scalar(gf5, -1L).residue(), 4u);
  EXPECT_EQ(Scalar(gf5, 17L).residue(), 2u);
  EXPECT_EQ(Scalar(gf5, mpq_class(1, 2)).residue(), 3u);
  const auto q = FieldCtx::rationals();
  EXPECT_EQ(Scalar(q, mpq_class(2, 4)).to_string(), "1/2");
  EXPECT_EQ(Scalar(q, mpq_class(3, -6)).to_string(), "-1/2");
  EXPECT_EQ(Scalar(q, mpq_class(6, 3)).to_string(), "2");
}

TEST(Scalar, ParseEntrySyntax) {
  const auto q = FieldCtx::rationals();
  const auto gf3 = FieldCtx::prime(3);
  EXPECT_EQ(Scalar::parse(q, "-3/6").to_string(), "-1/2");
  EXPECT_EQ(Scalar::parse(q, "+7").to_string(), "7");
  EXPECT_EQ(Scalar::parse(q, "123456789012345678901234567890").to_string(), "123456789012345678901234567890");
  EXPECT_EQ(Scalar::parse(gf3, "-1").residue(), 2u);
  EXPECT_EQ(Scalar::parse(gf3, "1/2").residue(), 2u);
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "x", "1.5", "1//2", "--1"}) {
    try {
      Scalar::parse(q, bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << bad;
    }
  }
  EXPECT_THROW(Scalar::parse(gf3, "1/3"), Error);
}

TEST(Scalar, TotalOrder) {
  const auto q = FieldCtx::rationals();
  EXPECT_LT(Scalar::parse(q, "-1/2"), Scalar::parse(q, "1/3"));
  EXPECT_LT(Scalar(FieldCtx::prime(5), 1L), Scalar(FieldCtx::prime(5), 4L));
}

class PrimeFieldAxioms : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(PrimeFieldAxioms, Exhaustive) {
  const auto f = FieldCtx::prime(GetParam());
  const auto elems = all_elements(f);
  const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  for (const auto& x : elems) {
    EXPECT_EQ(x + zero, x);
    EXPECT_EQ(x * one, x);
    EXPECT_TRUE((x + -x).is_zero());
    if (!x.is_zero()) EXPECT_TRUE((x * x.inv()).is_one());
    for (const auto& y : elems) {
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ((x - y) + y, x);
      for (const auto& z : elems) {
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, PrimeFieldAxioms, ::testing::Values(2u, 3u, 5u));

TEST(RationalAxioms, Randomized) {
  std::mt19937_64 rng(20161015);
  for (int trial = 0; trial < 2000; ++trial) {
    const Scalar x = random_rational(rng), y = random_rational(rng), z = random_rational(rng);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x - y) + y, x);
    if (!x.is_zero()) {
      EXPECT_TRUE((x * x.inv()).is_one());
      EXPECT_EQ(y / x * x, y);
    }
  }
}

TEST(InverseMod, MatchesBruteForce) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (std::uint64_t r = 1; r < p; ++r) {
      EXPECT_EQ(r * inverse_mod(r, p) % p, 1u) << r << " mod " << p;
    }
  }
}
