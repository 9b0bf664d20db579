#include <gtest/gtest.h>

#include "gen.hpp"
#include "ncurve/error.hpp"
#include "ncurve/field.hpp"

using namespace ncurve;

namespace {

std::vector<Field> fields() { return {Field::rationals(), Field::prime(), Field::prime(7)}; }

}  // namespace

TEST(Field, RejectsBadModulus) {
  EXPECT_THROW(Field::prime(4), Error);
  EXPECT_THROW(Field::prime(9), Error);
  EXPECT_THROW(Field::prime(3), Error);
  EXPECT_NO_THROW(Field::prime(5));
}

TEST(Field, ParseAndPrint) {
  const Field Q = Field::rationals();
  EXPECT_EQ(Q.to_string(Q.parse("6/4")), "3/2");
  EXPECT_EQ(Q.to_string(Q.parse("-7")), "-7");
  EXPECT_EQ(Q.to_string(Q.parse("+2/-4")), "-1/2");
  const Field F = Field::prime(7);
  EXPECT_EQ(F.to_string(F.parse("-1")), "6");
  EXPECT_EQ(F.to_string(F.parse("1/2")), "4");
  EXPECT_EQ(F.to_string(F.parse("15")), "1");
  for (const char* bad : {"", "x", "1/0", "1.5", "--2", "3/"}) {
    try {
      Q.parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Field, InverseOfZero) {
  for (const Field& F : fields()) EXPECT_THROW(F.inv(F.zero()), Error);
}

TEST(Field, NonvanishingGuard) {
  EXPECT_THROW(Field::prime(7).require_nonvanishing_upto(7, "x"), Error);
  EXPECT_NO_THROW(Field::prime(7).require_nonvanishing_upto(6, "x"));
  EXPECT_NO_THROW(Field::rationals().require_nonvanishing_upto(1000000, "x"));
  EXPECT_TRUE(Field::prime(7).vanishes(14));
  EXPECT_FALSE(Field::rationals().vanishes(14));
}

TEST(FieldProperty, Axioms) {
  for (const Field& F : fields()) {
    gen::Gen g(11);
    for (int trial = 0; trial < 300; ++trial) {
      const FieldElem a = g.elem(F), b = g.elem(F), c = g.elem(F);
      EXPECT_EQ(F.add(a, b), F.add(b, a));
      EXPECT_EQ(F.mul(a, b), F.mul(b, a));
      EXPECT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
      EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
      EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      EXPECT_TRUE(F.is_zero(F.add(a, F.neg(a))));
      EXPECT_EQ(F.sub(a, b), F.add(a, F.neg(b)));
      if (!F.is_zero(a)) EXPECT_TRUE(F.is_one(F.mul(a, F.inv(a))));
      EXPECT_EQ(F.parse(F.to_string(a)), a);
    }
  }
}

TEST(FieldProperty, FromIntIsRingHom) {
  for (const Field& F : fields()) {
    gen::Gen g(12);
    for (int trial = 0; trial < 200; ++trial) {
      const long long x = g.uniform(-100000, 100000), y = g.uniform(-100000, 100000);
      EXPECT_EQ(F.from_int(x + y), F.add(F.from_int(x), F.from_int(y)));
      EXPECT_EQ(F.from_int(x * y), F.mul(F.from_int(x), F.from_int(y)));
    }
  }
}
