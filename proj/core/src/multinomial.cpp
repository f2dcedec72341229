#include "qhi/multinomial.hpp"

namespace qhi {

PrimeTables::PrimeTables(std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw domain_error("modulus " + std::to_string(p) + " is not prime");
  fact_.resize(static_cast<std::size_t>(p));
  inv_fact_.resize(static_cast<std::size_t>(p));
  fact_[0] = 1 % p;
  for (std::int64_t i = 1; i < p; ++i) fact_[i] = mul_mod(fact_[i - 1], i, p);
  inv_fact_[p - 1] = inv_mod(fact_[p - 1], p);
  for (std::int64_t i = p - 1; i > 0; --i) inv_fact_[i - 1] = mul_mod(inv_fact_[i], i, p);
}

std::int64_t PrimeTables::binom(std::int64_t n, std::int64_t k) const {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1 % p_;
  while (n > 0 || k > 0) {
    std::int64_t nd = n % p_, kd = k % p_;
    if (kd > nd) return 0;  // carry in k + (n-k)
    r = mul_mod(r, mul_mod(fact_[nd], mul_mod(inv_fact_[kd], inv_fact_[nd - kd], p_), p_), p_);
    n /= p_;
    k /= p_;
  }
  return r;
}

std::int64_t PrimeTables::multinomial(std::int64_t n, std::span<const std::int64_t> parts) const {
  std::int64_t r = 1 % p_;
  std::int64_t rest = n;
  for (std::int64_t a : parts) {
    r = mul_mod(r, binom(rest, a), p_);
    if (r == 0) return 0;
    rest -= a;
  }
  return rest == 0 ? r : 0;
}

std::int64_t factorial_valuation(std::int64_t n, std::int64_t p) {
  std::int64_t v = 0;
  while (n > 0) {
    n /= p;
    v += n;
  }
  return v;
}

MultinomialResidue multinomial_mod_p(std::int64_t n, const std::vector<std::int64_t>& parts,
                                     std::int64_t p) {
  if (n < 0) throw domain_error("multinomial: n must be non-negative");
  std::int64_t sum = 0;
  for (std::int64_t a : parts) {
    if (a < 0) throw domain_error("multinomial: negative part " + std::to_string(a));
    sum += a;
  }
  if (sum != n)
    throw domain_error("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                       std::to_string(n));
  PrimeTables tables(p);
  std::int64_t v = factorial_valuation(n, p);
  for (std::int64_t a : parts) v -= factorial_valuation(a, p);
  if (v > 0) return {v, 0};
  return {0, tables.multinomial(n, parts)};
}

Int factorial_exact(std::int64_t n) {
  Int r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial_exact(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

Int multinomial_exact(std::int64_t n, const std::vector<std::int64_t>& parts) {
  Int r = 1;
  std::int64_t rest = n;
  for (std::int64_t a : parts) {
    r *= binomial_exact(rest, a);
    rest -= a;
  }
  return rest == 0 ? r : Int(0);
}

}  // namespace qhi
