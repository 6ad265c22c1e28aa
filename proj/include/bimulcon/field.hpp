#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bimulcon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

constexpr std::uint64_t kDefaultPrime = 65537;
constexpr std::uint64_t kEscalationPrime = 2147483647;  // 2^31 - 1
constexpr std::uint64_t kMaxPrime = 2147483647;

bool is_prime(std::uint64_t n);

/* Arithmetic in F_p for an odd prime p <= 2^31 - 1.  Elements are canonical
 * residues in [0, p); keeping p below 2^31 means every product fits in a
 * 64-bit word, so no widening tricks are needed anywhere. */
class PrimeField {
public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }

  Element from_int(long long v) const {
    long long m = static_cast<long long>(p_);
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<Element>(r);
  }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  std::string to_string(Element a) const { return std::to_string(a); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
  std::uint64_t p_;
};

/* Exact rational arithmetic with the same member interface as PrimeField, so
 * the polynomial and linear algebra templates run over either field. */
class RationalField {
public:
  using Element = Rational;

  std::uint64_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return a == 0; }

  Element from_int(long long v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw std::domain_error("division by zero in rational field");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element pow(const Element& a, std::uint64_t e) const {
    Element r(1), base = a;
    while (e) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  std::string to_string(const Element& a) const { return a.str(); }

  bool operator==(const RationalField&) const { return true; }
  bool operator!=(const RationalField&) const { return false; }
};

/* Runtime tag used at the CLI / binding boundary to pick a field. */
struct FieldDescriptor {
  enum class Kind { Prime, Rationals };

  Kind kind = Kind::Prime;
  std::uint64_t p = kDefaultPrime;

  static FieldDescriptor prime(std::uint64_t p) {
    PrimeField check(p);  // validates
    return FieldDescriptor{Kind::Prime, check.modulus()};
  }
  static FieldDescriptor rationals() { return FieldDescriptor{Kind::Rationals, 0}; }

  std::string to_string() const {
    return kind == Kind::Prime ? "F" + std::to_string(p) : "Q";
  }
  bool operator==(const FieldDescriptor& o) const {
    return kind == o.kind && (kind == Kind::Rationals || p == o.p);
  }
};

}  // namespace bimulcon
