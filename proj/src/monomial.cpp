#include "hp0/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace hp0 {

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::vector<int> support(const Monomial& m) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(m.size()); ++i)
    if (m[i] != 0) s.push_back(i);
  return s;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("grlex_compare: monomial length mismatch");
  int da = degree(a), db = degree(b);
  if (da != db) return da <=> db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    std::int64_t hi;
    if (__builtin_mul_overflow(r, static_cast<std::int64_t>(n - k + i), &hi))
      throw std::overflow_error("binomial overflow");
    r = hi / i;  // exact: product of i consecutive integers is divisible by i!
  }
  return r;
}

namespace {

std::uint32_t monomial_count(int n, int d) {
  if (n == 0) return d == 0 ? 1 : 0;
  std::int64_t c = binomial(d + n - 1, n - 1);
  if (c > UINT32_MAX) throw std::overflow_error("degree table too large");
  return static_cast<std::uint32_t>(c);
}

}  // namespace

DegreeTable::DegreeTable(int n_vars, int degree) : n_(n_vars), d_(degree) {
  if (n_vars < 0 || degree < 0) throw std::invalid_argument("DegreeTable: negative size");
  count_ = monomial_count(n_, d_);
}

std::uint32_t DegreeTable::rank(const Monomial& m) const {
  if (static_cast<int>(m.size()) != n_)
    throw std::invalid_argument("DegreeTable::rank: wrong arity");
  std::int64_t r = 0;
  int rem = d_;
  for (int i = 0; i + 1 < n_; ++i) {
    // monomials with a strictly larger exponent at position i come first
    for (int c = m[i] + 1; c <= rem; ++c) r += binomial(rem - c + n_ - i - 2, n_ - i - 2);
    rem -= m[i];
  }
  return static_cast<std::uint32_t>(r);
}

Monomial DegreeTable::unrank(std::uint32_t id) const {
  Monomial m(n_, 0);
  std::int64_t r = id;
  int rem = d_;
  for (int i = 0; i + 1 < n_; ++i) {
    for (int c = rem; c >= 0; --c) {
      std::int64_t block = binomial(rem - c + n_ - i - 2, n_ - i - 2);
      if (r < block) {
        m[i] = c;
        rem -= c;
        break;
      }
      r -= block;
    }
  }
  if (n_ > 0) m[n_ - 1] = rem;
  return m;
}

TruncatedTable::TruncatedTable(int n_vars, int max_degree) : n_(n_vars), dmax_(max_degree) {
  if (n_vars < 0 || max_degree < 0)
    throw std::invalid_argument("TruncatedTable: negative size");
  offsets_.assign(dmax_ + 1, 0);
  std::uint32_t acc = 0;
  for (int d = dmax_; d >= 0; --d) {
    offsets_[d] = acc;
    acc += monomial_count(n_, d);
  }
  total_ = acc;
}

std::uint32_t TruncatedTable::id_of(const Monomial& m) const {
  int d = degree(m);
  if (d > dmax_) throw std::invalid_argument("TruncatedTable::id_of: degree too large");
  return offsets_[d] + DegreeTable(n_, d).rank(m);
}

int TruncatedTable::degree_of(std::uint32_t id) const {
  for (int d = dmax_; d >= 0; --d)
    if (id >= offsets_[d] && id < offsets_[d] + monomial_count(n_, d)) return d;
  throw std::out_of_range("TruncatedTable::degree_of");
}

Monomial TruncatedTable::monomial_of(std::uint32_t id) const {
  int d = degree_of(id);
  return DegreeTable(n_, d).unrank(id - offsets_[d]);
}

}  // namespace hp0
