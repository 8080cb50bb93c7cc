#pragma once

#include <cstdint>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "fpss/fp_linalg.hpp"

namespace fpss {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);

BigInt rho_exact(std::uint64_t p, std::int64_t k);
// Throws std::overflow_error when the value does not fit in int64.
std::int64_t rho(std::uint64_t p, std::int64_t k);
// Saturates at INT64_MAX instead of throwing; for bounds where any larger value acts as infinity.
std::int64_t rho_sat(std::uint64_t p, std::int64_t k);

struct RhoTable {
  std::uint64_t p = 0;
  std::map<std::int64_t, BigInt> values;
};
RhoTable rho_table(std::uint64_t p, std::int64_t k_max);

unsigned vp(std::uint64_t p, std::int64_t i);
unsigned vp(std::uint64_t p, const BigInt& i);

// p^e, throwing std::overflow_error beyond int64.
std::int64_t ipow(std::int64_t p, unsigned e);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

// C(i+j, i) mod p.
Residue binom_mod_p(Residue p, std::uint64_t i, std::uint64_t j);

}  // namespace fpss
