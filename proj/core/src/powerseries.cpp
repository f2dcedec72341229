#include "qhi/powerseries.hpp"

#include "qhi/coeff_power.hpp"
#include "qhi/poly.hpp"

#include <sstream>

namespace qhi {

PowerSeries1 PowerSeries1::identity(std::int64_t D) {
  PowerSeries1 s(D);
  if (D >= 1) s.coeff(1) = 1;
  return s;
}

PowerSeries1 truncate(const PowerSeries1& s, std::int64_t D) {
  PowerSeries1 out(D);
  for (std::int64_t k = 0; k <= std::min(D, s.trunc); ++k) out.coeff(k) = s.coeff(k);
  return out;
}

PowerSeries1 scale(const PowerSeries1& s, const Rat& factor) {
  PowerSeries1 out = s;
  for (auto& x : out.c) x *= factor;
  return out;
}

PowerSeries1 mul(const PowerSeries1& a, const PowerSeries1& b, std::int64_t D) {
  PowerSeries1 out(D);
  for (std::int64_t i = 0; i <= std::min(D, a.trunc); ++i) {
    if (a.coeff(i) == 0) continue;
    std::int64_t jmax = std::min(D - i, b.trunc);
    for (std::int64_t j = 0; j <= jmax; ++j) {
      if (b.coeff(j) == 0) continue;
      out.coeff(i + j) += a.coeff(i) * b.coeff(j);
    }
  }
  return out;
}

namespace {

// 1/s for a series with unit constant term.
PowerSeries1 invert_unit(const PowerSeries1& s, std::int64_t D) {
  PowerSeries1 out(D);
  Rat inv0 = Rat(1) / s.coeff(0);
  out.coeff(0) = inv0;
  for (std::int64_t k = 1; k <= D; ++k) {
    Rat acc = 0;
    for (std::int64_t i = 1; i <= std::min(k, s.trunc); ++i) acc += s.coeff(i) * out.coeff(k - i);
    out.coeff(k) = -acc * inv0;
  }
  return out;
}

}  // namespace

PowerSeries1 reversion(const PowerSeries1& l) {
  if (l.trunc < 1 || l.coeff(0) != 0)
    throw domain_error("reversion needs a series with zero constant term");
  if (l.coeff(1) == 0) throw domain_error("reversion: linear coefficient is not a unit");
  std::int64_t D = l.trunc;
  // Lagrange inversion: g_k = (1/k) [tau^{k-1}] (tau / l)^k
  PowerSeries1 h(D - 1);
  for (std::int64_t i = 0; i < D; ++i) h.coeff(i) = l.coeff(i + 1);
  h = invert_unit(h, D - 1);
  PowerSeries1 g(D);
  PowerSeries1 hk = h;  // h^k
  g.coeff(1) = hk.coeff(0);
  for (std::int64_t k = 2; k <= D; ++k) {
    hk = mul(hk, h, D - 1);
    g.coeff(k) = hk.coeff(k - 1) / k;
  }
  return g;
}

PowerSeries1 compose(const PowerSeries1& outer, const PowerSeries1& inner) {
  if (inner.trunc >= 0 && inner.coeff(0) != 0)
    throw domain_error("compose: inner series must have zero constant term");
  std::int64_t D = std::min(outer.trunc, inner.trunc);
  PowerSeries1 res(D);
  for (std::int64_t k = std::min(outer.trunc, D); k >= 0; --k) {
    res = mul(res, inner, D);
    res.coeff(0) += outer.coeff(k);
  }
  return res;
}

PowerSeries1 series_from_b(const std::vector<std::pair<std::int64_t, Int>>& b_rows,
                           std::int64_t D) {
  PowerSeries1 l(D);
  for (const auto& [m, b] : b_rows) {
    if (m < 1) throw domain_error("logarithm rows need m >= 1");
    if (m <= D) l.coeff(m) = Rat(b, Int(m));
  }
  return l;
}

PowerSeries1 stienstra_log(const SparsePoly& f, const WeightSystem& ws, std::int64_t D) {
  std::int64_t d = weighted_degree_check(f, ws);
  if (d != ws.w())
    throw domain_error("stienstra_log requires d = w; got d = " + std::to_string(d) + ", w = " +
                       std::to_string(ws.w()));
  PowerSeries1 l(D);
  for (std::int64_t m = 1; m <= D; ++m) {
    ExpVec target(f.nvars(), m - 1);
    l.coeff(m) = Rat(coeff_in_power_exact(f, m - 1, target), Int(m));
  }
  return l;
}

ModSeries1 reduce_mod(const PowerSeries1& s, std::int64_t p) {
  ModSeries1 out;
  out.p = p;
  out.trunc = s.trunc;
  out.c.resize(static_cast<std::size_t>(s.trunc) + 1);
  for (std::int64_t k = 0; k <= s.trunc; ++k) {
    const Rat& r = s.coeff(k);
    Int den = boost::multiprecision::denominator(r);
    if (den % p == 0)
      throw domain_error("coefficient of degree " + std::to_string(k) +
                         " is not p-integral at p = " + std::to_string(p) +
                         " (not the logarithm of a group law over the p-local integers)");
    std::int64_t num_m = mod_reduce(static_cast<std::int64_t>(boost::multiprecision::numerator(r) % p), p);
    std::int64_t den_m = mod_reduce(static_cast<std::int64_t>(den % p), p);
    out.c[static_cast<std::size_t>(k)] = mul_mod(num_m, inv_mod(den_m, p), p);
  }
  return out;
}

ModSeries1 p_series(const PowerSeries1& log, std::int64_t p, std::int64_t D) {
  if (!is_prime(p)) throw domain_error("p = " + std::to_string(p) + " is not prime");
  if (log.trunc < D)
    throw domain_error("p_series: logarithm is only known to degree " + std::to_string(log.trunc) +
                       " < " + std::to_string(D));
  PowerSeries1 l = truncate(log, D);
  if (l.coeff(0) != 0 || l.coeff(1) == 0)
    throw domain_error("p_series needs a logarithm-type series (zero constant, unit linear term)");
  PowerSeries1 m = compose(reversion(l), scale(l, Rat(p)));
  return reduce_mod(m, p);
}

HeightResult height_from_p_series(const ModSeries1& s, std::int64_t h_max) {
  if (h_max < 1) throw domain_error("h_max must be >= 1");
  std::int64_t limit = pow_checked(s.p, h_max);
  if (s.trunc < limit)
    throw domain_error("height scan needs truncation >= p^h_max = " + std::to_string(limit) +
                       "; series is truncated at " + std::to_string(s.trunc));
  for (std::int64_t i = 1; i <= limit; ++i) {
    if (s.c[static_cast<std::size_t>(i)] == 0) continue;
    std::int64_t v = i, r = 0;
    while (v % s.p == 0) {
      v /= s.p;
      ++r;
    }
    if (v != 1)
      throw domain_error("lowest nonzero [p]-series index " + std::to_string(i) +
                         " is not a power of p — not the [p]-series of a group law");
    return {true, r};
  }
  return {false, 0};
}

HeightResult product_height(const std::vector<HeightResult>& hs) {
  if (hs.empty()) throw domain_error("product of an empty family of formal groups");
  HeightResult out{true, 0};
  for (const HeightResult& h : hs) {
    if (!h.finite) return {false, 0};
    out.r += h.r;
  }
  return out;
}

GroupLaw2::GroupLaw2(std::int64_t D) : trunc(D) {
  c.resize(static_cast<std::size_t>(D) + 1);
  for (std::int64_t i = 0; i <= D; ++i)
    c[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(D - i) + 1);
}

namespace {

GroupLaw2 bivar_mul(const GroupLaw2& a, const GroupLaw2& b, std::int64_t D) {
  GroupLaw2 out(D);
  for (std::int64_t i = 0; i <= D; ++i)
    for (std::int64_t j = 0; j + i <= D; ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::int64_t k = 0; i + k <= D; ++k)
        for (std::int64_t l = 0; i + j + k + l <= D; ++l) {
          if (b.at(k, l) == 0) continue;
          out.c[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(j + l)] +=
              a.at(i, j) * b.at(k, l);
        }
    }
  return out;
}

}  // namespace

GroupLaw2 group_law_from_log(const PowerSeries1& log, std::int64_t D) {
  if (log.trunc < D)
    throw domain_error("group law: logarithm is only known to degree " + std::to_string(log.trunc));
  PowerSeries1 l = truncate(log, D);
  if (l.coeff(0) != 0 || l.coeff(1) != 1)
    throw domain_error("group law needs a logarithm with l = tau + O(tau^2)");
  PowerSeries1 g = reversion(l);
  GroupLaw2 s(D);  // l(x) + l(y)
  for (std::int64_t k = 1; k <= D; ++k) {
    s.c[static_cast<std::size_t>(k)][0] = l.coeff(k);
    s.c[0][static_cast<std::size_t>(k)] = l.coeff(k);
  }
  GroupLaw2 res(D);
  for (std::int64_t k = D; k >= 0; --k) {
    res = bivar_mul(res, s, D);
    res.c[0][0] += g.coeff(k);
  }
  return res;
}

std::vector<std::pair<std::int64_t, Int>> parse_log_file(std::istream& in) {
  std::vector<std::pair<std::int64_t, Int>> rows;
  std::string line;
  std::size_t lineno = 0;
  std::int64_t last_m = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::int64_t m;
    std::string b_text;
    if (!(ls >> m))
      throw domain_error("logarithm file line " + std::to_string(lineno) + ": missing index m");
    if (!(ls >> b_text))
      throw domain_error("logarithm file line " + std::to_string(lineno) +
                         ": missing coefficient b");
    std::string extra;
    if (ls >> extra)
      throw domain_error("logarithm file line " + std::to_string(lineno) + ": trailing content '" +
                         extra + "'");
    if (m <= last_m)
      throw domain_error("logarithm file line " + std::to_string(lineno) +
                         ": m must be strictly increasing");
    last_m = m;
    Int b;
    try {
      b = Int(b_text);
    } catch (const std::exception&) {
      throw domain_error("logarithm file line " + std::to_string(lineno) +
                         ": coefficient '" + b_text + "' is not an integer");
    }
    rows.emplace_back(m, std::move(b));
  }
  if (rows.empty()) throw domain_error("logarithm file is empty");
  return rows;
}

}  // namespace qhi
