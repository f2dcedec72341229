#ifndef QHI_NUMERIC_HPP
#define QHI_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhi {

// All arithmetic in this library is exact: arbitrary-precision integers,
// exact rationals, or residues modulo a prime. No floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated mathematical precondition (maps to CLI exit code 1).
struct domain_error : error {
  using error::error;
};

// Malformed textual input; `offset` is the byte position of the problem.
struct parse_error : error {
  std::size_t offset;
  parse_error(const std::string& msg, std::size_t off)
      : error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// ---- machine-word modular arithmetic (moduli < 2^62) ----

inline std::int64_t mod_reduce(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r = 1;
  base = mod_reduce(base, m);
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
  }
  return r;
}

// Inverse modulo a prime p.
std::int64_t inv_mod(std::int64_t a, std::int64_t p);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::int64_t n);

// Primes in [lo, hi], ascending.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

// base^exp with overflow check (throws domain_error on overflow).
std::int64_t pow_checked(std::int64_t base, std::int64_t exp);

// Lowest-terms rendering: "n/d", or "n" when the denominator is 1.
std::string rat_to_string(const Rat& r);

std::string int_to_string(const Int& n);

}  // namespace qhi

#endif  // QHI_NUMERIC_HPP
