#include "fpss/numerics.hpp"

#include <limits>
#include <stdexcept>

namespace fpss {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigInt rho_exact(std::uint64_t p, std::int64_t k) {
  if (k < -1) throw std::domain_error("rho requires k >= -1");
  BigInt P = p;
  if (k % 2 != 0) {
    // k = 2m-1: (p^{2m+1}+1)/(p+1)
    std::int64_t m = (k + 1) / 2;
    BigInt num = boost::multiprecision::pow(P, static_cast<unsigned>(2 * m + 1)) + 1;
    return num / (P + 1);
  }
  // k = 2m: (p^{2m+2}-p^2)/(p^2-1)
  std::int64_t m = k / 2;
  BigInt num = boost::multiprecision::pow(P, static_cast<unsigned>(2 * m + 2)) - P * P;
  return num / (P * P - 1);
}

std::int64_t rho(std::uint64_t p, std::int64_t k) {
  BigInt v = rho_exact(p, k);
  if (v > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("rho exceeds int64");
  return static_cast<std::int64_t>(v);
}

std::int64_t rho_sat(std::uint64_t p, std::int64_t k) {
  if (k > 200) return std::numeric_limits<std::int64_t>::max();
  BigInt v = rho_exact(p, k);
  if (v > std::numeric_limits<std::int64_t>::max()) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(v);
}

RhoTable rho_table(std::uint64_t p, std::int64_t k_max) {
  RhoTable t;
  t.p = p;
  for (std::int64_t k = -1; k <= k_max; ++k) t.values.emplace(k, rho_exact(p, k));
  return t;
}

unsigned vp(std::uint64_t p, std::int64_t i) {
  if (i == 0) throw std::domain_error("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  std::uint64_t a = i < 0 ? static_cast<std::uint64_t>(-(i + 1)) + 1 : static_cast<std::uint64_t>(i);
  unsigned e = 0;
  while (a % p == 0) {
    a /= p;
    ++e;
  }
  return e;
}

unsigned vp(std::uint64_t p, const BigInt& i) {
  if (i == 0) throw std::domain_error("valuation of zero");
  BigInt a = i < 0 ? BigInt(-i) : i;
  unsigned e = 0;
  while (a % p == 0) {
    a /= p;
    ++e;
  }
  return e;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 multiplication overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 addition overflow");
  return r;
}

std::int64_t ipow(std::int64_t p, unsigned e) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, p);
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

Residue binom_mod_p(Residue p, std::uint64_t i, std::uint64_t j) {
  PrimeField f(p);
  std::uint64_t n = i + j, k = i;
  Residue result = 1;
  while (n > 0 || k > 0) {
    std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // C(nd, kd) mod p with small digits
    Residue num = 1, den = 1;
    for (std::uint64_t x = 0; x < kd; ++x) {
      num = f.mul(num, static_cast<Residue>(nd - x));
      den = f.mul(den, static_cast<Residue>(x + 1));
    }
    result = f.mul(result, f.mul(num, f.inv(den)));
    n /= p;
    k /= p;
  }
  return result;
}

}  // namespace fpss
