#include <gtest/gtest.h>

#include <census/bigint.hpp>

using namespace census;

TEST(BigInt, FactorialAndBinomial) {
  EXPECT_EQ(to_string(factorial(0)), "1");
  EXPECT_EQ(to_string(factorial(25)), "15511210043330985984000000");
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(60, 30), parse_bigint("118264581564861424"));
}

TEST(BigInt, ParseRejectsGarbage) {
  EXPECT_EQ(parse_bigint("-42"), -42);
  EXPECT_THROW(parse_bigint(""), std::invalid_argument);
  EXPECT_THROW(parse_bigint("12x"), std::invalid_argument);
  EXPECT_THROW(parse_bigint("1.5"), std::invalid_argument);
}

TEST(BigRat, NormalizedAfterConstruction) {
  BigRat r = make_rat(6, -8);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 4);
  EXPECT_EQ(to_string(r), "-3/4");
  EXPECT_EQ(make_rat(2, 4), make_rat(1, 2));
  EXPECT_TRUE(is_integer(make_rat(10, 5)));
  EXPECT_FALSE(is_integer(make_rat(1, 3)));
  EXPECT_THROW(make_rat(1, 0), std::domain_error);
}

TEST(BigRat, ArithmeticStaysCanonical) {
  BigRat a = make_rat(1, 6);
  BigRat b = make_rat(1, 3);
  BigRat c = a + b;
  EXPECT_EQ(to_string(c), "1/2");
  c = c * 2;
  EXPECT_TRUE(is_integer(c));
  EXPECT_EQ(to_string(c), "1");
}

TEST(BigInt, WithCommas) {
  EXPECT_EQ(with_commas(BigInt(1677488)), "1,677,488");
  EXPECT_EQ(with_commas(BigInt(999)), "999");
  EXPECT_EQ(with_commas(BigInt(-1000)), "-1,000");
  EXPECT_EQ(with_commas(BigInt(0)), "0");
}
