#include "qhi/coeff_power.hpp"

#include "qhi/multinomial.hpp"

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

struct MemoKey {
  std::size_t term;
  std::int64_t n_left;
  ExpVec residual;
  bool operator==(const MemoKey& o) const {
    return term == o.term && n_left == o.n_left && residual == o.residual;
  }
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    return VecHash{}(k.residual) * 31 + k.term * 7 + static_cast<std::size_t>(k.n_left);
  }
};

// Ring abstraction shared by the mod-p and exact routes. The memo is keyed by
// the residual exponent demand together with (term index, remaining power).
template <class Ring>
class Enumerator {
 public:
  using Value = typename Ring::Value;

  Enumerator(const Ring& ring, std::vector<ExpVec> rows, std::vector<Value> coeffs)
      : ring_(ring), rows_(std::move(rows)), coeffs_(std::move(coeffs)) {}

  Value run(std::int64_t n, const ExpVec& target) {
    return walk(0, n, target);
  }

 private:
  Value walk(std::size_t t, std::int64_t n_left, const ExpVec& residual) {
    if (t == rows_.size()) {
      bool zero = true;
      for (std::int64_t x : residual) zero = zero && x == 0;
      return (n_left == 0 && zero) ? ring_.one() : ring_.zero();
    }
    MemoKey key{t, n_left, residual};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const ExpVec& row = rows_[t];
    std::int64_t cap = n_left;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] > 0) cap = std::min(cap, residual[j] / row[j]);

    Value sum = ring_.zero();
    ExpVec next = residual;
    Value cpow = ring_.one();
    for (std::int64_t b = 0; b <= cap; ++b) {
      if (b > 0) {
        for (std::size_t j = 0; j < row.size(); ++j) next[j] -= row[j];
        cpow = ring_.mul(cpow, coeffs_[t]);
      }
      Value below = walk(t + 1, n_left - b, next);
      if (!ring_.is_zero(below))
        sum = ring_.add(sum, ring_.mul(ring_.mul(ring_.binom(n_left, b), cpow), below));
    }
    memo_.emplace(std::move(key), sum);
    return sum;
  }

  const Ring& ring_;
  std::vector<ExpVec> rows_;
  std::vector<Value> coeffs_;
  std::unordered_map<MemoKey, Value, MemoKeyHash> memo_;
};

struct ModRing {
  using Value = std::int64_t;
  PrimeTables tables;
  explicit ModRing(std::int64_t p) : tables(p) {}
  Value zero() const { return 0; }
  Value one() const { return 1 % tables.prime(); }
  Value add(Value a, Value b) const { return (a + b) % tables.prime(); }
  Value mul(Value a, Value b) const { return mul_mod(a, b, tables.prime()); }
  bool is_zero(Value a) const { return a == 0; }
  Value binom(std::int64_t n, std::int64_t k) const { return tables.binom(n, k); }
};

struct ExactRing {
  using Value = Int;
  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  bool is_zero(const Value& a) const { return a == 0; }
  Value binom(std::int64_t n, std::int64_t k) const { return binomial_exact(n, k); }
};

void check_inputs(const SparsePoly& f, std::int64_t n, const ExpVec& target) {
  if (n < 0) throw domain_error("coeff_in_power: n must be non-negative");
  if (target.size() != f.nvars())
    throw domain_error("coeff_in_power: target length does not match the variable count");
}

}  // namespace

std::int64_t coeff_in_power_mod(const SparsePoly& f, std::int64_t n, const ExpVec& target,
                                std::int64_t p) {
  check_inputs(f, n, target);
  for (std::int64_t x : target)
    if (x < 0) return 0;
  ModRing ring(p);
  std::vector<ExpVec> rows;
  std::vector<std::int64_t> coeffs;
  for (const auto& [e, c] : f.reduced_mod(p).terms()) {
    rows.push_back(e);
    coeffs.push_back(static_cast<std::int64_t>(c));
  }
  Enumerator<ModRing> en(ring, std::move(rows), std::move(coeffs));
  return en.run(n, target);
}

Int coeff_in_power_exact(const SparsePoly& f, std::int64_t n, const ExpVec& target) {
  check_inputs(f, n, target);
  for (std::int64_t x : target)
    if (x < 0) return 0;
  ExactRing ring;
  std::vector<ExpVec> rows;
  std::vector<Int> coeffs;
  for (const auto& [e, c] : f.terms()) {
    rows.push_back(e);
    coeffs.push_back(c);
  }
  Enumerator<ExactRing> en(ring, std::move(rows), std::move(coeffs));
  return en.run(n, target);
}

}  // namespace qhi
