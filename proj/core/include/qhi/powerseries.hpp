#ifndef QHI_POWERSERIES_HPP
#define QHI_POWERSERIES_HPP

#include "qhi/numeric.hpp"

#include <cstdint>
#include <istream>
#include <utility>
#include <vector>

namespace qhi {

class SparsePoly;
struct WeightSystem;

// Truncated one-variable power series over exact rationals.
// coeff(k) is the coefficient of tau^k, 0 <= k <= trunc.
struct PowerSeries1 {
  std::int64_t trunc = 0;
  std::vector<Rat> c;  // size trunc+1

  PowerSeries1() = default;
  explicit PowerSeries1(std::int64_t D) : trunc(D), c(static_cast<std::size_t>(D) + 1) {}

  static PowerSeries1 identity(std::int64_t D);

  const Rat& coeff(std::int64_t k) const { return c[static_cast<std::size_t>(k)]; }
  Rat& coeff(std::int64_t k) { return c[static_cast<std::size_t>(k)]; }
};

PowerSeries1 truncate(const PowerSeries1& s, std::int64_t D);
PowerSeries1 scale(const PowerSeries1& s, const Rat& factor);
PowerSeries1 mul(const PowerSeries1& a, const PowerSeries1& b, std::int64_t D);

// Compositional inverse mod tau^{D+1}: l(rev(l)) = rev(l)(l) = tau.
// Requires zero constant term and a nonzero (unit) linear coefficient.
PowerSeries1 reversion(const PowerSeries1& l);

// outer(inner) truncated; inner must have zero constant term.
PowerSeries1 compose(const PowerSeries1& outer, const PowerSeries1& inner);

// l = sum_{m} (b_{m-1} / m) tau^m for the listed (m, b_{m-1}) pairs;
// coefficients for unlisted m are zero.
PowerSeries1 series_from_b(const std::vector<std::pair<std::int64_t, Int>>& b_rows,
                           std::int64_t D);

// Logarithm of the Artin-Mazur formal group in the d = w case:
// b_{m-1} = coefficient of (x_0...x_N)^{m-1} in f^{m-1}, exactly.
PowerSeries1 stienstra_log(const SparsePoly& f, const WeightSystem& ws, std::int64_t D);

// One-variable series with coefficients reduced modulo p.
struct ModSeries1 {
  std::int64_t p = 0;
  std::int64_t trunc = 0;
  std::vector<std::int64_t> c;  // size trunc+1
};

// Reduction mod p; throws if any coefficient has a denominator divisible by p
// (the series is then not p-integral).
ModSeries1 reduce_mod(const PowerSeries1& s, std::int64_t p);

// [p](x) = l^{-1}(p * l(x)) mod p, truncated at degree D. Requires the
// composition to be p-integral, which holds when l is the logarithm of a
// formal group law over the p-local integers.
ModSeries1 p_series(const PowerSeries1& log, std::int64_t p, std::int64_t D);

struct HeightResult {
  bool finite = false;
  std::int64_t r = 0;  // height when finite
};

// Reads the height off the lowest nonzero term of a [p]-series: index p^r
// gives height r; identically zero through degree p^{h_max} means infinite
// (the additive case); any other lowest index is malformed input.
HeightResult height_from_p_series(const ModSeries1& s, std::int64_t h_max);

// Heights add over products of formal groups; infinity is absorbing.
HeightResult product_height(const std::vector<HeightResult>& hs);

// Bivariate series F(x,y) truncated at total degree trunc.
struct GroupLaw2 {
  std::int64_t trunc = 0;
  std::vector<std::vector<Rat>> c;  // c[i][j], i+j <= trunc

  explicit GroupLaw2(std::int64_t D);
  const Rat& at(std::int64_t i, std::int64_t j) const {
    return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

// F(x,y) = l^{-1}(l(x) + l(y)) mod total degree D+1.
GroupLaw2 group_law_from_log(const PowerSeries1& log, std::int64_t D);

// "m b" per line, m strictly increasing; any other line shape is an error.
std::vector<std::pair<std::int64_t, Int>> parse_log_file(std::istream& in);

}  // namespace qhi

#endif  // QHI_POWERSERIES_HPP
