#ifndef QHI_COEFF_POWER_HPP
#define QHI_COEFF_POWER_HPP

#include "qhi/poly.hpp"

#include <cstdint>

namespace qhi {

// Coefficient of the monomial `target` in f^n, reduced mod p.
//
// Enumerates the compositions (beta_1..beta_T) of n over the terms of f that
// solve sum beta_t E_t = target, with early pruning of partial sums that
// overshoot the target in some coordinate. Contributions from distinct
// compositions hitting the same residual demand are accumulated through a
// memo map, so collisions for general f are handled.
std::int64_t coeff_in_power_mod(const SparsePoly& f, std::int64_t n, const ExpVec& target,
                                std::int64_t p);

// Same coefficient over the integers, exactly.
Int coeff_in_power_exact(const SparsePoly& f, std::int64_t n, const ExpVec& target);

}  // namespace qhi

#endif  // QHI_COEFF_POWER_HPP
