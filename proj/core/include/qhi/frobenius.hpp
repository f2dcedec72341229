#ifndef QHI_FROBENIUS_HPP
#define QHI_FROBENIUS_HPP

#include "qhi/poly.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qhi {

// Witnessed value of mu_f(q) = min{ n : f^n in m^[q] } over F_p, q = p^e.
struct MuRecord {
  std::int64_t p = 0;
  std::int64_t e = 0;
  std::int64_t q = 0;
  std::int64_t mu = 0;
  std::vector<std::pair<std::int64_t, bool>> probes;  // (n, f^n in m^[q])
};

// Membership of f^n in (p) + m^[q] with m^[q] = (x_0^q, ..., x_N^q):
// true iff every monomial of f^n with coefficient != 0 mod p has some
// exponent >= q. q = p^e.
bool in_frobenius_power(const SparsePoly& f, std::int64_t n, std::int64_t p, std::int64_t e);

// ceil((w*q - w + 1) / d): cap on mu for quasi-homogeneous f of weighted
// degree d and weight sum w (every monomial of f^n has weighted degree n*d,
// and the box of exponents below q holds weighted degree at most w*(q-1)).
std::int64_t mu_upper_bound(std::int64_t w, std::int64_t d, std::int64_t q);

// (N+1)(q-1) + 1: cap valid for any f with zero constant term.
std::int64_t mu_generic_cap(std::size_t nvars, std::int64_t q);

// Binary search over the monotone membership predicate. Preconditions:
// f nonzero mod p with zero constant term; content(f) coprime to p.
MuRecord mu(const SparsePoly& f, const WeightSystem& ws, std::int64_t p, std::int64_t e);

// w/d when d >= w, else 1.
Rat lct(const WeightSystem& ws);

// Smallest q = p^e with e in [1, e_max] such that (w*q mod d) lies in
// [1, w-1]; such a witness forces fpt(f) < w/d. nullopt when none exists.
std::optional<std::int64_t> fpt_drop_witness(std::int64_t w, std::int64_t d, std::int64_t p,
                                             std::int64_t e_max);

struct FptResult {
  enum class Kind { exact, bracket };
  Kind kind = Kind::bracket;
  Rat value;                     // kind == exact
  std::pair<Rat, Rat> bracket;   // always set: [(mu-1)/q, mu/q]
  std::optional<std::int64_t> a; // exact value of the form 1 - a/p
  bool assumed_form = false;     // inferred below the proven prime bound
};

// [(mu-1)/q, mu/q] at q = p^e.
FptResult fpt_bracket(const SparsePoly& f, const WeightSystem& ws, std::int64_t p, std::int64_t e);
FptResult fpt_bracket_from_mu(const MuRecord& rec);

// Prime bound w*(N-2)+1 above which fpt = 1 - a/p with 0 <= a <= N-1 is
// guaranteed in the d = w case (N+1 variables).
std::int64_t fpt_form_prime_bound(std::int64_t w, std::size_t nvars);

// Unique candidate 1 - a/p, 0 <= a <= N-1, inside the width-1/p^e bracket.
// Requires d = w and e >= 2; below the prime bound an explicit override is
// needed and the result is flagged assumed_form.
FptResult fpt_infer(const SparsePoly& f, const WeightSystem& ws, std::int64_t p,
                    std::int64_t e = 2, bool override_range = false);
FptResult fpt_infer_from_mu(const MuRecord& rec, const WeightSystem& ws, std::size_t nvars,
                            bool override_range = false);

struct FermatFpt {
  bool at_lct = false;  // true iff p == 1 mod d, i.e. fpt = lct = (N+1)/d
  Rat value;            // (N+1)/d; exact when at_lct, strict upper bound otherwise
};

// Fermat criterion for f = x_0^d + ... + x_N^d with d = N+k, k >= 2, N > k-2
// and p not dividing d.
FermatFpt fermat_fpt(std::int64_t N, std::int64_t d, std::int64_t p);

}  // namespace qhi

#endif  // QHI_FROBENIUS_HPP
