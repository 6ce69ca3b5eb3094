#include <gtest/gtest.h>

#include "common.hpp"

using namespace sesq;

TEST(Field, PrimeResiduesReduce) {
  const Field k = Field::prime(3);
  EXPECT_EQ(k.from_int(4), k.one());
  EXPECT_EQ(k.from_int(-1), k.from_int(2));
  EXPECT_EQ(k.from_int(4).to_string(), "1");
}

TEST(Field, PrimeInversesByTable) {
  const Field k = Field::prime(7);
  for (std::int64_t a = 1; a < 7; ++a) {
    const Elem x = k.from_int(a);
    EXPECT_EQ(x * x.inv(), k.one());
  }
  EXPECT_THROW(k.zero().inv(), Error);
}

TEST(Field, RejectsNonPrime) {
  try {
    Field::prime(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
}

TEST(Field, RejectsReducibleModulus) {
  try {
    Field::extension(3, {-1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ReducibleModulus);
  }
}

TEST(Field, ExtensionAxiomsExhaustive) {
  const Field k = Field::extension(3, {1, 0, 1});  // x^2 + 1
  ASSERT_EQ(k.order(), 9u);
  for (std::uint64_t i = 0; i < 9; ++i)
    for (std::uint64_t j = 0; j < 9; ++j) {
      const Elem a = k.element(i), b = k.element(j);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b, b + a);
      for (std::uint64_t l = 0; l < 9; ++l) {
        const Elem c = k.element(l);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
      }
      if (!b.is_zero()) {
        EXPECT_EQ((a / b) * b, a);
      }
    }
}

namespace {
bool minus_one_is_square(const Field& k) {
  const Elem m = -k.one();
  for (std::uint64_t i = 0; i < k.order(); ++i)
    if (k.element(i) * k.element(i) == m) return true;
  return false;
}
}  // namespace

TEST(Field, MinusOneSquareClassInExtensions) {
  EXPECT_FALSE(minus_one_is_square(Field::prime(3)));
  EXPECT_TRUE(minus_one_is_square(Field::extension_of_degree(3, 2)));
  EXPECT_FALSE(minus_one_is_square(Field::extension_of_degree(3, 3)));
  EXPECT_EQ(Field::extension_of_degree(3, 3).order(), 27u);
}

TEST(Field, FrobeniusIsAdditive) {
  const Field k = Field::extension_of_degree(2, 4);
  for (std::uint64_t i = 0; i < k.order(); ++i)
    for (std::uint64_t j = 0; j < k.order(); j += 3) {
      const Elem a = k.element(i), b = k.element(j);
      EXPECT_EQ((a + b).pow(2), a.pow(2) + b.pow(2));
    }
  for (std::uint64_t i = 1; i < k.order(); ++i) EXPECT_EQ(k.element(i).pow(15), k.one());
}

TEST(Field, RationalArithmeticIsExact) {
  const Field q = Field::rational();
  const Elem a = q.from_rational(Rational(1, 3)), b = q.from_rational(Rational(1, 6));
  EXPECT_EQ(a + b, q.from_rational(Rational(1, 2)));
  EXPECT_EQ((a / b).to_string(), "2");
  EXPECT_EQ((a - b).to_string(), "1/6");
  const Elem big = q.from_int(BigInt(1) << 200);
  EXPECT_EQ(big / big, q.one());
}

TEST(Field, MixingFieldsIsAnError) {
  const Field a = Field::prime(3), b = Field::prime(5);
  try {
    (void)(a.one() + b.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ContextMismatch);
  }
}

TEST(Field, Embeddings) {
  const Field f3 = Field::prime(3), f9 = Field::extension_of_degree(3, 2);
  EXPECT_TRUE(can_embed(f3, f9));
  EXPECT_FALSE(can_embed(f9, f3));
  EXPECT_FALSE(can_embed(Field::prime(5), f9));
  EXPECT_EQ(field_embed(f3, f9, f3.from_int(2)), f9.from_int(2));
  EXPECT_THROW(field_embed(Field::prime(5), f9, Field::prime(5).one()), Error);
}
