#include "bimulcon/field.hpp"

namespace bimulcon {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p <= 2) throw std::domain_error("prime field modulus must exceed 2");
  if (p > kMaxPrime)
    throw std::domain_error("prime field modulus must fit in 31 bits (max 2^31-1)");
  if (!is_prime(p))
    throw std::domain_error("prime field modulus " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
  // extended Euclid on (a, p)
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p_), newr = static_cast<long long>(a);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<long long>(p_);
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element r = 1, base = a % p_;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

}  // namespace bimulcon
