#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bimulcon/field.hpp"

using namespace bimulcon;

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(65537));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(65536));
  CHECK_FALSE(is_prime(65539 * 3ULL));
}

TEST_CASE("prime field arithmetic") {
  PrimeField f(65537);
  CHECK(f.modulus() == 65537);
  CHECK(f.characteristic() == 65537);
  CHECK(f.add(65536, 1) == 0);
  CHECK(f.sub(0, 1) == 65536);
  CHECK(f.mul(256, 256) == 65536);
  CHECK(f.from_int(-1) == 65536);
  CHECK(f.from_int(65537) == 0);
  CHECK(f.neg(1) == 65536);
  for (std::uint64_t x : {1ULL, 2ULL, 12345ULL, 65536ULL})
    CHECK(f.mul(x, f.inv(x)) == 1);
  CHECK(f.pow(3, 0) == 1);
  CHECK(f.pow(2, 16) == 65536);
  CHECK(f.div(10, 5) == 2);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("prime field rejects bad moduli") {
  CHECK_THROWS_AS(PrimeField(0), std::domain_error);
  CHECK_THROWS_AS(PrimeField(1), std::domain_error);
  CHECK_THROWS_AS(PrimeField(2), std::domain_error);
  CHECK_THROWS_AS(PrimeField(4), std::domain_error);
  CHECK_THROWS_AS(PrimeField(65536), std::domain_error);
  CHECK_NOTHROW(PrimeField(3));
  CHECK_NOTHROW(PrimeField(2147483647));
}

TEST_CASE("rational field arithmetic") {
  RationalField q;
  CHECK(q.characteristic() == 0);
  Rational half = q.div(q.one(), q.from_int(2));
  CHECK(q.add(half, half) == q.one());
  CHECK(q.mul(q.from_int(-3), q.from_int(2)) == q.from_int(-6));
  CHECK(q.inv(q.from_int(4)) == Rational(1, 4));
  CHECK(q.pow(q.from_int(2), 10) == q.from_int(1024));
  CHECK(q.pow(half, 2) == Rational(1, 4));
  CHECK_THROWS_AS(q.inv(q.zero()), std::domain_error);
  CHECK(q.is_zero(q.sub(half, half)));
}

TEST_CASE("field descriptors") {
  FieldDescriptor p = FieldDescriptor::prime(65537);
  FieldDescriptor r = FieldDescriptor::rationals();
  CHECK(p.to_string() == "F65537");
  CHECK(r.to_string() == "Q");
  CHECK(p == FieldDescriptor::prime(65537));
  CHECK_FALSE(p == r);
  CHECK_THROWS_AS(FieldDescriptor::prime(15), std::domain_error);
}
