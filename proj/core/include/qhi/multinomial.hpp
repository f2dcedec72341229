#ifndef QHI_MULTINOMIAL_HPP
#define QHI_MULTINOMIAL_HPP

#include "qhi/numeric.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qhi {

// Factorial and inverse-factorial tables modulo a prime p (size p), the
// building block for binomials/multinomials via base-p digit decomposition.
class PrimeTables {
 public:
  explicit PrimeTables(std::int64_t p);

  std::int64_t prime() const { return p_; }

  // C(n, k) mod p, digit by digit. Returns 0 exactly when a base-p carry
  // occurs, i.e. when p divides C(n, k).
  std::int64_t binom(std::int64_t n, std::int64_t k) const;

  // n! / prod(parts!) mod p for parts summing to n (0 on any carry).
  std::int64_t multinomial(std::int64_t n, std::span<const std::int64_t> parts) const;

 private:
  std::int64_t p_;
  std::vector<std::int64_t> fact_, inv_fact_;
};

// ord_p(n!) = sum_{i>=1} floor(n / p^i).
std::int64_t factorial_valuation(std::int64_t n, std::int64_t p);

struct MultinomialResidue {
  std::int64_t valuation;  // p-adic valuation of the exact multinomial
  std::int64_t residue;    // multinomial mod p (0 whenever valuation > 0)
};

// Exact p-adic valuation and residue of n! / prod(parts!).
// Preconditions: parts sum to n, every part >= 0, p prime.
MultinomialResidue multinomial_mod_p(std::int64_t n, const std::vector<std::int64_t>& parts,
                                     std::int64_t p);

// Exact big-integer routes, used for cross-checking the fast path and for
// exact coefficient computations.
Int factorial_exact(std::int64_t n);
Int binomial_exact(std::int64_t n, std::int64_t k);
Int multinomial_exact(std::int64_t n, const std::vector<std::int64_t>& parts);

}  // namespace qhi

#endif  // QHI_MULTINOMIAL_HPP
