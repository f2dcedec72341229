#include "qhi/frobenius.hpp"

#include "qhi/multinomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace qhi {

namespace {

struct VecHash {
  std::size_t operator()(const ExpVec& v) const {
    std::size_t h = v.size();
    for (std::int64_t x : v) h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b9u;
    return h;
  }
};

// beta -> sum beta_t E_t is injective on { sum beta = n } when the exponent
// rows are linearly independent over Q; then at most one composition reaches
// any monomial and the survivor scan may short-circuit.
bool rows_independent(const std::vector<ExpVec>& rows) {
  std::size_t t = rows.size();
  if (t == 0) return true;
  std::size_t nv = rows[0].size();
  if (t > nv) return false;
  std::vector<std::vector<Rat>> m(t, std::vector<Rat>(nv));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < nv; ++j) m[i][j] = rows[i][j];
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nv && rank < t; ++col) {
    std::size_t piv = rank;
    while (piv < t && m[piv][col] == 0) ++piv;
    if (piv == t) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < t; ++i) {
      if (m[i][col] == 0) continue;
      Rat factor = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < nv; ++j) m[i][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank == t;
}

class BoxProbe {
 public:
  BoxProbe(std::vector<ExpVec> rows, std::vector<std::int64_t> coeffs, std::int64_t p,
           std::int64_t box)
      : rows_(std::move(rows)),
        coeffs_(std::move(coeffs)),
        tables_(p),
        box_(box),
        collision_free_(rows_independent(rows_)) {
    // static per-term caps, for suffix feasibility pruning
    std::size_t t = rows_.size();
    caps_.resize(t);
    for (std::size_t i = 0; i < t; ++i) {
      std::int64_t cap = std::numeric_limits<std::int64_t>::max();
      for (std::int64_t x : rows_[i])
        if (x > 0) cap = std::min(cap, box_ / x);
      caps_[i] = cap;
    }
    suffix_cap_.assign(t + 1, 0);
    for (std::size_t i = t; i-- > 0;) {
      // saturating: a row of all zeros has unbounded cap
      if (caps_[i] > std::numeric_limits<std::int64_t>::max() - suffix_cap_[i + 1])
        suffix_cap_[i] = std::numeric_limits<std::int64_t>::max();
      else
        suffix_cap_[i] = suffix_cap_[i + 1] + caps_[i];
    }
  }

  // true iff f^n lies in (p) + m^[q]
  bool in_ideal(std::int64_t n) {
    survivor_found_ = false;
    accum_.clear();
    partial_.assign(rows_.empty() ? 0 : rows_[0].size(), 0);
    walk(0, n, 1 % tables_.prime());
    if (collision_free_) return !survivor_found_;
    for (const auto& [e, c] : accum_)
      if (c != 0) return false;
    return true;
  }

 private:
  void walk(std::size_t t, std::int64_t n_left, std::int64_t binom_prod) {
    if (survivor_found_) return;
    if (n_left > suffix_cap_[t]) return;  // remaining terms cannot absorb the budget
    if (t == rows_.size()) {
      // complete composition inside the box
      if (collision_free_) {
        if (binom_prod != 0) survivor_found_ = true;
      } else {
        auto [it, fresh] = accum_.emplace(partial_, binom_prod);
        if (!fresh) it->second = (it->second + binom_prod) % tables_.prime();
      }
      return;
    }
    const ExpVec& row = rows_[t];
    std::int64_t cap = n_left;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] > 0) cap = std::min(cap, (box_ - partial_[j]) / row[j]);
    std::int64_t added = 0;
    std::int64_t cpow = 1 % tables_.prime();
    for (std::int64_t b = 0; b <= cap; ++b) {
      if (b > 0) {
        for (std::size_t j = 0; j < row.size(); ++j) partial_[j] += row[j];
        added = b;
        cpow = mul_mod(cpow, coeffs_[t], tables_.prime());
      }
      std::int64_t contrib =
          mul_mod(mul_mod(binom_prod, tables_.binom(n_left, b), tables_.prime()), cpow,
                  tables_.prime());
      // a zero prefix product stays zero in every completion
      if (contrib != 0) walk(t + 1, n_left - b, contrib);
      if (survivor_found_) break;
    }
    for (std::size_t j = 0; j < row.size(); ++j) partial_[j] -= added * row[j];
  }

  std::vector<ExpVec> rows_;
  std::vector<std::int64_t> coeffs_;
  PrimeTables tables_;
  std::int64_t box_;
  bool collision_free_;
  std::vector<std::int64_t> caps_, suffix_cap_;
  bool survivor_found_ = false;
  ExpVec partial_;
  std::unordered_map<ExpVec, std::int64_t, VecHash> accum_;
};

BoxProbe make_probe(const SparsePoly& f, std::int64_t p, std::int64_t e) {
  if (!is_prime(p)) throw domain_error("p = " + std::to_string(p) + " is not prime");
  if (e < 0) throw domain_error("Frobenius exponent e must be >= 0");
  std::int64_t q = pow_checked(p, e);
  SparsePoly fp = f.reduced_mod(p);
  if (fp.is_zero()) throw domain_error("f reduces to 0 mod " + std::to_string(p));
  std::vector<ExpVec> rows;
  std::vector<std::int64_t> coeffs;
  for (const auto& [exp, c] : fp.terms()) {
    if (std::all_of(exp.begin(), exp.end(), [](std::int64_t x) { return x == 0; }))
      throw domain_error("constant term present: f does not lie in the maximal ideal");
    rows.push_back(exp);
    coeffs.push_back(static_cast<std::int64_t>(c));
  }
  return BoxProbe(std::move(rows), std::move(coeffs), p, q - 1);
}

}  // namespace

bool in_frobenius_power(const SparsePoly& f, std::int64_t n, std::int64_t p, std::int64_t e) {
  if (n < 0) throw domain_error("power n must be >= 0");
  BoxProbe probe = make_probe(f, p, e);
  return probe.in_ideal(n);
}

std::int64_t mu_upper_bound(std::int64_t w, std::int64_t d, std::int64_t q) {
  if (w < 1 || d < 1 || q < 1) throw domain_error("mu_upper_bound needs w, d, q >= 1");
  std::int64_t num = w * q - w + 1;
  return (num + d - 1) / d;
}

std::int64_t mu_generic_cap(std::size_t nvars, std::int64_t q) {
  return static_cast<std::int64_t>(nvars) * (q - 1) + 1;
}

MuRecord mu(const SparsePoly& f, const WeightSystem& ws, std::int64_t p, std::int64_t e) {
  {
    Int c = content(f);
    if (boost::multiprecision::gcd(c, Int(p)) != 1)
      throw domain_error("content(f) is divisible by p = " + std::to_string(p));
  }
  BoxProbe probe = make_probe(f, p, e);
  std::int64_t q = pow_checked(p, e);

  std::int64_t cap = mu_generic_cap(f.nvars(), q);
  try {
    std::int64_t d = weighted_degree_check(f, ws);
    cap = std::min(cap, mu_upper_bound(ws.w(), d, q));
  } catch (const domain_error&) {
    // not quasi-homogeneous under ws: keep the generic cap
  }

  MuRecord rec;
  rec.p = p;
  rec.e = e;
  rec.q = q;
  rec.probes.emplace_back(0, false);  // f^0 = 1 is never in m^[q]

  std::int64_t lo = 0;  // known out of the ideal
  std::int64_t hi = cap;
  bool hi_probed = false;
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    bool in = probe.in_ideal(mid);
    rec.probes.emplace_back(mid, in);
    if (in) {
      hi = mid;
      hi_probed = true;
    } else {
      lo = mid;
    }
  }
  if (!hi_probed) {
    bool in = probe.in_ideal(hi);
    rec.probes.emplace_back(hi, in);
    if (!in) throw error("internal error: mu cap " + std::to_string(hi) + " is not a member");
  }
  rec.mu = hi;
  return rec;
}

Rat lct(const WeightSystem& ws) {
  if (ws.d < 1) throw domain_error("lct needs a declared weighted degree d >= 1");
  std::int64_t w = ws.w();
  return ws.d >= w ? Rat(w, ws.d) : Rat(1);
}

std::optional<std::int64_t> fpt_drop_witness(std::int64_t w, std::int64_t d, std::int64_t p,
                                             std::int64_t e_max) {
  if (w < 1 || d < 1) throw domain_error("fpt_drop_witness needs w, d >= 1");
  for (std::int64_t e = 1; e <= e_max; ++e) {
    std::int64_t q = pow_checked(p, e);
    std::int64_t x = mod_reduce(mul_mod(w % d == 0 ? 0 : w % d, q % d, d), d);
    if (x >= 1 && x <= w - 1) return q;
  }
  return std::nullopt;
}

FptResult fpt_bracket_from_mu(const MuRecord& rec) {
  FptResult r;
  r.kind = FptResult::Kind::bracket;
  r.bracket = {Rat(rec.mu - 1, rec.q), Rat(rec.mu, rec.q)};
  return r;
}

FptResult fpt_bracket(const SparsePoly& f, const WeightSystem& ws, std::int64_t p,
                      std::int64_t e) {
  return fpt_bracket_from_mu(mu(f, ws, p, e));
}

std::int64_t fpt_form_prime_bound(std::int64_t w, std::size_t nvars) {
  std::int64_t N = static_cast<std::int64_t>(nvars) - 1;
  return w * (N - 2) + 1;
}

FptResult fpt_infer_from_mu(const MuRecord& rec, const WeightSystem& ws, std::size_t nvars,
                            bool override_range) {
  if (rec.e < 2)
    throw domain_error("fpt inference needs level e >= 2 (bracket width 1/p^e must separate "
                       "the candidates 1 - a/p)");
  std::int64_t N = static_cast<std::int64_t>(nvars) - 1;
  std::int64_t bound = fpt_form_prime_bound(ws.w(), nvars);
  FptResult r = fpt_bracket_from_mu(rec);
  if (rec.p < bound) {
    if (!override_range)
      throw domain_error("fpt of the form 1 - a/p is only guaranteed for p >= w(N-2)+1 = " +
                         std::to_string(bound) + "; got p = " + std::to_string(rec.p) +
                         " (use the theorem-range override to infer anyway)");
    r.assumed_form = true;
  }
  std::optional<std::int64_t> found;
  for (std::int64_t a = 0; a <= N - 1; ++a) {
    Rat cand = Rat(rec.p - a, rec.p);
    if (cand >= r.bracket.first && cand <= r.bracket.second) {
      if (found) throw error("internal error: two candidates in a width-1/q bracket");
      found = a;
    }
  }
  if (!found)
    throw domain_error("no candidate 1 - a/p with 0 <= a <= N-1 lies in the bracket [" +
                       rat_to_string(r.bracket.first) + ", " + rat_to_string(r.bracket.second) +
                       "]: the 1 - a/p form fails or a > N-1");
  r.kind = FptResult::Kind::exact;
  r.a = *found;
  r.value = Rat(rec.p - *found, rec.p);
  return r;
}

FptResult fpt_infer(const SparsePoly& f, const WeightSystem& ws, std::int64_t p, std::int64_t e,
                    bool override_range) {
  std::int64_t d = weighted_degree_check(f, ws);
  if (d != ws.w())
    throw domain_error("fpt inference requires d = w (degree equal to the weight sum); got d = " +
                       std::to_string(d) + ", w = " + std::to_string(ws.w()));
  MuRecord rec = mu(f, ws, p, e);
  return fpt_infer_from_mu(rec, ws, f.nvars(), override_range);
}

FermatFpt fermat_fpt(std::int64_t N, std::int64_t d, std::int64_t p) {
  std::int64_t k = d - N;
  if (k < 2)
    throw domain_error("k out of range: Fermat criterion needs d >= N+2 (d = N+k, k >= 2)");
  if (!(N > k - 2))
    throw domain_error("k out of range: Fermat criterion needs N > k-2, i.e. d < 2N+2");
  if (!is_prime(p)) throw domain_error("p = " + std::to_string(p) + " is not prime");
  if (d % p == 0) throw domain_error("p divides d");
  FermatFpt r;
  r.at_lct = (p % d == 1);
  r.value = Rat(N + 1, d);
  return r;
}

}  // namespace qhi
