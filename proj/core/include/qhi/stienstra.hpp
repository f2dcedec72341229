#ifndef QHI_STIENSTRA_HPP
#define QHI_STIENSTRA_HPP

#include "qhi/multinomial.hpp"
#include "qhi/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qhi {

// Index tuple (i_0..i_N) with all entries >= 1 and weighted degree d.
using JIndex = ExpVec;

// All J-indices for the weight system, in canonical term order.
// Throws a domain_error mentioning "empty" when d is too small to admit any.
std::vector<JIndex> j_set(const WeightSystem& ws);

// b_{m-1,i,j} = coefficient of x_0^{m j_0 - i_0} ... x_N^{m j_N - i_N}
// in f^{m-1}. A target with a negative entry yields 0.
Int log_coeff_exact(const SparsePoly& f, std::int64_t m, const JIndex& i, const JIndex& j);
std::int64_t log_coeff_mod(const SparsePoly& f, std::int64_t m, const JIndex& i, const JIndex& j,
                           std::int64_t p);

struct LogCoeffEntry {
  std::int64_t m;
  JIndex i, j;
  Int value;           // exact mode
  std::int64_t value_mod;  // mod-p mode
};

struct LogCoeffTable {
  std::optional<std::int64_t> p;  // nullopt = exact mode
  std::vector<LogCoeffEntry> entries;
};

// Table of b_{m-1,i,j} for m in [1, m_max] and i, j in j_set(ws).
LogCoeffTable log_coeff_table(const SparsePoly& f, const WeightSystem& ws, std::int64_t m_max,
                              std::optional<std::int64_t> p = std::nullopt);

// Requires d = w (so J = {(1,...,1)}). True iff the coefficient of
// (x_0...x_N)^{p-1} in f^{p-1} is nonzero mod p; equivalently the attached
// one-dimensional formal group has height 1.
bool height_one_test(const SparsePoly& f, const WeightSystem& ws, std::int64_t p);

// For the Fermat polynomial x_0^d + ... + x_N^d with d = N+k, k >= 2 and
// N >= 2(k-1): exact check that b_{m-1,i,j} = 0 for all i != j and m <= m_max.
bool diagonality_check(std::int64_t N, std::int64_t d, std::int64_t m_max);

// Valuation and residue of (ad)! / prod (a*i_r)! — the diagonal logarithm
// coefficient of the Fermat hypersurface at m = 1 + a*d.
MultinomialResidue fermat_log_coeff(std::int64_t a, std::int64_t d, const JIndex& i,
                                    std::int64_t p);

// x_0^d + ... + x_N^d in variables x0..xN.
SparsePoly fermat_poly(std::int64_t N, std::int64_t d);

// default m_max values (cover the a <= 2 closed-form range)
inline std::int64_t diagonality_default_m_max(std::int64_t d) { return 1 + 2 * d; }
inline std::int64_t table_default_m_max(std::int64_t d) { return 1 + 3 * d; }

}  // namespace qhi

#endif  // QHI_STIENSTRA_HPP
