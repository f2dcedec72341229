#include "qhi/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qhi {

bool TermOrder::operator()(const ExpVec& a, const ExpVec& b) const {
  std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

WeightSystem::WeightSystem(std::vector<std::int64_t> a, std::int64_t degree)
    : alpha(std::move(a)), d(degree) {
  if (alpha.empty()) throw domain_error("weight system needs at least one weight");
  for (std::int64_t x : alpha)
    if (x < 1) throw domain_error("weights must be positive integers");
}

std::int64_t WeightSystem::w() const {
  return std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0});
}

std::int64_t weighted_degree(const ExpVec& e, const WeightSystem& ws) {
  if (e.size() != ws.alpha.size())
    throw domain_error("exponent vector length does not match the weight system");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * ws.alpha[i];
  return d;
}

void SparsePoly::add_term(const ExpVec& e, const Int& c) {
  if (e.size() != vars_.size())
    throw domain_error("exponent vector length does not match the variable count");
  for (std::int64_t x : e)
    if (x < 0) throw domain_error("negative exponent");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int SparsePoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

SparsePoly SparsePoly::derivative(std::size_t var) const {
  SparsePoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

SparsePoly SparsePoly::reduced_mod(std::int64_t p) const {
  SparsePoly out(vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, Int(mod_reduce(static_cast<std::int64_t>(c % p), p)));
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  std::vector<std::string> vars;
  bool fixed_vars;

  explicit Parser(std::string_view text, const std::optional<std::vector<std::string>>& order)
      : s(text), fixed_vars(order.has_value()) {
    if (order) vars = *order;
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Int parse_nat() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error("expected digits", start);
    return Int(std::string(s.substr(start, pos - start)));
  }

  std::size_t parse_var() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
      throw parse_error("expected a variable", pos);
    ++pos;
    while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string name(s.substr(start, pos - start));
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it != vars.end()) return static_cast<std::size_t>(it - vars.begin());
    if (fixed_vars) throw parse_error("unknown variable '" + name + "'", start);
    vars.push_back(name);
    return vars.size() - 1;
  }

  // exponents keyed by variable index; resized to the final count later
  struct RawTerm {
    Int coeff;
    std::vector<std::pair<std::size_t, std::int64_t>> factors;
  };

  RawTerm parse_term() {
    RawTerm t;
    t.coeff = 1;
    skip_ws();
    bool have_int = false;
    char c = peek();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool neg = false;
      if (c == '-') {
        ++pos;
        neg = true;
      }
      t.coeff = parse_nat();
      if (neg) t.coeff = -t.coeff;
      have_int = true;
    }
    bool have_var = false;
    for (;;) {
      skip_ws();
      std::size_t save = pos;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
      }
      if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos]))) {
        pos = save;
        break;
      }
      std::size_t v = parse_var();
      std::int64_t e = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        Int n = parse_nat();
        if (n > std::numeric_limits<std::int64_t>::max())
          throw parse_error("exponent too large", pos);
        e = static_cast<std::int64_t>(n);
      }
      t.factors.emplace_back(v, e);
      have_var = true;
    }
    if (!have_int && !have_var) throw parse_error("expected a term", pos);
    return t;
  }
};

}  // namespace

SparsePoly parse_poly(std::string_view text,
                      const std::optional<std::vector<std::string>>& var_order) {
  if (var_order) {
    std::vector<std::string> sorted = *var_order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw domain_error("duplicate variable in var_order");
  }
  Parser p(text, var_order);
  if (p.eof()) throw parse_error("empty input", 0);

  struct Signed {
    int sign;
    Parser::RawTerm term;
  };
  std::vector<Signed> raw;

  int sign = 1;
  char c = p.peek();
  if (c == '+' || c == '-') {
    // leading sign (accepted superset; see grammar note in poly.hpp)
    std::size_t save = p.pos;
    ++p.pos;
    char n = p.peek();
    if (c == '-' && std::isdigit(static_cast<unsigned char>(n))) {
      p.pos = save;  // let the term's integer take the sign
    } else {
      sign = (c == '-') ? -1 : 1;
    }
  }
  raw.push_back({sign, p.parse_term()});
  while (!p.eof()) {
    char op = p.peek();
    if (op != '+' && op != '-') throw parse_error("expected '+' or '-'", p.pos);
    ++p.pos;
    raw.push_back({op == '-' ? -1 : 1, p.parse_term()});
  }

  SparsePoly out(p.vars);
  for (auto& [sg, t] : raw) {
    ExpVec e(p.vars.size(), 0);
    for (auto& [v, k] : t.factors) e[v] += k;
    out.add_term(e, Int(sg) * t.coeff);
  }
  return out;
}

namespace {

std::string render_term(const std::vector<std::string>& vars, const ExpVec& e, const Int& abs_c) {
  std::ostringstream os;
  bool any_var = std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x > 0; });
  bool lead = true;
  if (!any_var || abs_c != 1) {
    os << abs_c.str();
    lead = false;
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!lead) os << '*';
    os << vars[i];
    if (e[i] > 1) os << '^' << e[i];
    lead = false;
  }
  return os.str();
}

}  // namespace

std::string render_poly(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? '-' : '+');
    }
    os << render_term(f.vars(), e, neg ? Int(-c) : c);
    first = false;
  }
  return os.str();
}

std::int64_t weighted_degree_check(const SparsePoly& f, const WeightSystem& ws) {
  if (f.is_zero()) throw domain_error("weighted degree of the zero polynomial");
  if (ws.nvars() != f.nvars())
    throw domain_error("weight count does not match the variable count");
  std::optional<std::int64_t> deg;
  const ExpVec* first = nullptr;
  for (const auto& [e, c] : f.terms()) {
    std::int64_t d = weighted_degree(e, ws);
    if (!deg) {
      deg = d;
      first = &e;
    } else if (d != *deg) {
      SparsePoly a(f.vars()), b(f.vars());
      a.add_term(*first, 1);
      b.add_term(e, 1);
      throw domain_error("not quasi-homogeneous: " + render_poly(a) + " has weighted degree " +
                         std::to_string(*deg) + " but " + render_poly(b) + " has " +
                         std::to_string(d));
    }
  }
  return *deg;
}

Int content(const SparsePoly& f) {
  if (f.is_zero()) throw domain_error("content of the zero polynomial");
  Int g = 0;
  for (const auto& [e, c] : f.terms()) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? Int(-g) : g;
}

}  // namespace qhi
