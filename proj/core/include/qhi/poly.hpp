#ifndef QHI_POLY_HPP
#define QHI_POLY_HPP

#include "qhi/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qhi {

// Exponent vector of a monomial; one entry per variable, all >= 0.
using ExpVec = std::vector<std::int64_t>;

// Canonical term order: ascending total degree, ties broken by descending
// lexicographic comparison of the exponent vectors. Under this order
// x^2 < y^5 < z^5 < w^10 and renderings read in the usual textbook order.
struct TermOrder {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Weights alpha_i = deg(x_i), their sum w, and a declared weighted degree d.
struct WeightSystem {
  std::vector<std::int64_t> alpha;
  std::int64_t d = 0;  // 0 = not yet declared

  WeightSystem() = default;
  WeightSystem(std::vector<std::int64_t> a, std::int64_t degree = 0);

  std::int64_t w() const;
  std::size_t nvars() const { return alpha.size(); }
};

std::int64_t weighted_degree(const ExpVec& e, const WeightSystem& ws);

// Sparse multivariate polynomial over the integers. Zero coefficients are
// never stored; iteration follows the canonical term order.
class SparsePoly {
 public:
  using TermMap = std::map<ExpVec, Int, TermOrder>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Accumulates c * x^e, dropping the term if the total cancels to zero.
  void add_term(const ExpVec& e, const Int& c);

  Int coeff(const ExpVec& e) const;

  SparsePoly derivative(std::size_t var) const;

  // Coefficients reduced mod p, zero terms dropped.
  SparsePoly reduced_mod(std::int64_t p) const;

  bool operator==(const SparsePoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

// Grammar (whitespace between tokens is insignificant):
//   poly := ws term (ws ('+'|'-') ws term)* ws
//   term := [integer] ( '*'? var ('^' nat)? )+  |  integer
//   var  := letter (letter|digit)*
//   integer := ['-'] digit+ ; nat := digit+
// A leading '+'/'-' before the first term is additionally accepted so that
// canonical renderings always re-parse.
SparsePoly parse_poly(std::string_view text,
                      const std::optional<std::vector<std::string>>& var_order = std::nullopt);

// Canonical rendering; parse(render(f)) reproduces f term for term.
std::string render_poly(const SparsePoly& f);

// Returns the common weighted degree D of every term, or throws a
// domain_error naming two offending terms. f must be nonzero.
std::int64_t weighted_degree_check(const SparsePoly& f, const WeightSystem& ws);

// gcd of all coefficients, always positive. f must be nonzero.
Int content(const SparsePoly& f);

}  // namespace qhi

#endif  // QHI_POLY_HPP
