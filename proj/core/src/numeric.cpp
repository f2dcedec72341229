#include "qhi/numeric.hpp"

#include <array>

namespace qhi {

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) throw domain_error("inverse of 0 modulo " + std::to_string(p));
  // extended Euclid
  std::int64_t b = p, x = 1, y = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    x -= q * y;
    std::swap(x, y);
  }
  if (a != 1) throw domain_error("inverse does not exist: modulus is not coprime");
  return mod_reduce(x, p);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // these witnesses decide primality for all n < 3.3 * 10^24
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

std::int64_t pow_checked(std::int64_t base, std::int64_t exp) {
  if (base < 0 || exp < 0) throw domain_error("pow_checked: negative input");
  Int r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  if (r > std::numeric_limits<std::int64_t>::max())
    throw domain_error("integer overflow: " + std::to_string(base) + "^" + std::to_string(exp));
  return static_cast<std::int64_t>(r);
}

std::string rat_to_string(const Rat& r) {
  return r.str();
}

std::string int_to_string(const Int& n) {
  return n.str();
}

}  // namespace qhi
