#include "qhi/stienstra.hpp"

#include "qhi/coeff_power.hpp"

#include <algorithm>

namespace qhi {

namespace {

void j_walk(const WeightSystem& ws, std::size_t var, std::int64_t remaining, ExpVec& cur,
            std::vector<JIndex>& out) {
  std::size_t nv = ws.nvars();
  if (var == nv) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  // every later entry needs at least its weight
  std::int64_t reserve = 0;
  for (std::size_t k = var + 1; k < nv; ++k) reserve += ws.alpha[k];
  for (std::int64_t i = 1; i * ws.alpha[var] + reserve <= remaining; ++i) {
    cur[var] = i;
    j_walk(ws, var + 1, remaining - i * ws.alpha[var], cur, out);
  }
  cur[var] = 0;
}

ExpVec log_coeff_target(const JIndex& i, const JIndex& j, std::int64_t m, bool& negative) {
  ExpVec target(j.size());
  negative = false;
  for (std::size_t k = 0; k < j.size(); ++k) {
    target[k] = m * j[k] - i[k];
    if (target[k] < 0) negative = true;
  }
  return target;
}

void check_indices(const SparsePoly& f, std::int64_t m, const JIndex& i, const JIndex& j) {
  if (m < 1) throw domain_error("log coefficient index m must be >= 1");
  if (i.size() != f.nvars() || j.size() != f.nvars())
    throw domain_error("J-index length does not match the variable count");
}

}  // namespace

std::vector<JIndex> j_set(const WeightSystem& ws) {
  std::vector<JIndex> out;
  ExpVec cur(ws.nvars(), 0);
  if (ws.d < 1) throw domain_error("j_set needs a declared weighted degree d >= 1");
  j_walk(ws, 0, ws.d, cur, out);
  if (out.empty())
    throw domain_error("empty J-set: no index tuple with entries >= 1 has weighted degree " +
                       std::to_string(ws.d));
  std::sort(out.begin(), out.end(), TermOrder{});
  return out;
}

Int log_coeff_exact(const SparsePoly& f, std::int64_t m, const JIndex& i, const JIndex& j) {
  check_indices(f, m, i, j);
  bool negative = false;
  ExpVec target = log_coeff_target(i, j, m, negative);
  if (negative) return 0;
  return coeff_in_power_exact(f, m - 1, target);
}

std::int64_t log_coeff_mod(const SparsePoly& f, std::int64_t m, const JIndex& i, const JIndex& j,
                           std::int64_t p) {
  check_indices(f, m, i, j);
  bool negative = false;
  ExpVec target = log_coeff_target(i, j, m, negative);
  if (negative) return 0;
  return coeff_in_power_mod(f, m - 1, target, p);
}

LogCoeffTable log_coeff_table(const SparsePoly& f, const WeightSystem& ws, std::int64_t m_max,
                              std::optional<std::int64_t> p) {
  LogCoeffTable table;
  table.p = p;
  std::vector<JIndex> J = j_set(ws);
  for (std::int64_t m = 1; m <= m_max; ++m)
    for (const JIndex& i : J)
      for (const JIndex& j : J) {
        LogCoeffEntry e;
        e.m = m;
        e.i = i;
        e.j = j;
        if (p) {
          e.value_mod = log_coeff_mod(f, m, i, j, *p);
        } else {
          e.value = log_coeff_exact(f, m, i, j);
          e.value_mod = 0;
        }
        table.entries.push_back(std::move(e));
      }
  return table;
}

bool height_one_test(const SparsePoly& f, const WeightSystem& ws, std::int64_t p) {
  std::int64_t d = weighted_degree_check(f, ws);
  if (d != ws.w())
    throw domain_error("height-one test requires d = w; got d = " + std::to_string(d) +
                       ", w = " + std::to_string(ws.w()));
  {
    Int c = content(f);
    if (boost::multiprecision::gcd(c, Int(p)) != 1)
      throw domain_error("content(f) is divisible by p = " + std::to_string(p));
  }
  JIndex ones(f.nvars(), 1);
  return log_coeff_mod(f, p, ones, ones, p) != 0;
}

bool diagonality_check(std::int64_t N, std::int64_t d, std::int64_t m_max) {
  std::int64_t k = d - N;
  if (k < 2 || N < 2 * (k - 1))
    throw domain_error("diagonality range violated: need d = N+k with k >= 2 and N >= 2(k-1)");
  SparsePoly f = fermat_poly(N, d);
  WeightSystem ws(std::vector<std::int64_t>(static_cast<std::size_t>(N) + 1, 1), d);
  std::vector<JIndex> J = j_set(ws);
  for (std::int64_t m = 1; m <= m_max; ++m)
    for (const JIndex& i : J)
      for (const JIndex& j : J) {
        if (i == j) continue;
        if (log_coeff_exact(f, m, i, j) != 0) return false;
      }
  return true;
}

MultinomialResidue fermat_log_coeff(std::int64_t a, std::int64_t d, const JIndex& i,
                                    std::int64_t p) {
  if (a < 0) throw domain_error("fermat_log_coeff needs a >= 0");
  std::int64_t sum = 0;
  for (std::int64_t x : i) sum += x;
  if (sum != d)
    throw domain_error("J-index sums to " + std::to_string(sum) + ", expected d = " +
                       std::to_string(d));
  std::vector<std::int64_t> parts;
  parts.reserve(i.size());
  for (std::int64_t x : i) parts.push_back(a * x);
  return multinomial_mod_p(a * d, parts, p);
}

SparsePoly fermat_poly(std::int64_t N, std::int64_t d) {
  if (N < 1 || d < 1) throw domain_error("fermat_poly needs N >= 1 and d >= 1");
  std::vector<std::string> vars;
  for (std::int64_t i = 0; i <= N; ++i) vars.push_back("x" + std::to_string(i));
  SparsePoly f(vars);
  for (std::int64_t i = 0; i <= N; ++i) {
    ExpVec e(static_cast<std::size_t>(N) + 1, 0);
    e[static_cast<std::size_t>(i)] = d;
    f.add_term(e, 1);
  }
  return f;
}

}  // namespace qhi
