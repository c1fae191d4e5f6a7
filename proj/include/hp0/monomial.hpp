#ifndef HP0_MONOMIAL_HPP
#define HP0_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hp0 {

/// Exponent vector in n variables.
using Monomial = std::vector<int>;

int degree(const Monomial& m);
std::vector<int> support(const Monomial& m);

/// Graded-lexicographic comparison with e1 > e2 > ... > en: total degree
/// first, ties broken at the first index where the exponents differ (the
/// larger exponent wins). Throws std::invalid_argument on length mismatch.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

/// Binomial coefficient as int64; throws std::overflow_error if it does not fit.
std::int64_t binomial(int n, int k);

/// The degree-d monomials in n variables, indexed in graded-lex descending
/// order: id 0 is e1^d, the last id is en^d. rank/unrank convert between ids
/// and exponent vectors in O(n + d).
class DegreeTable {
 public:
  DegreeTable(int n_vars, int degree);

  int n_vars() const { return n_; }
  int deg() const { return d_; }
  std::uint32_t count() const { return count_; }

  std::uint32_t rank(const Monomial& m) const;
  Monomial unrank(std::uint32_t id) const;

 private:
  int n_;
  int d_;
  std::uint32_t count_;
};

/// All monomials of degree <= max_degree, ordered graded-lex descending
/// across degrees (higher degree first). Used for inhomogeneous truncations.
class TruncatedTable {
 public:
  TruncatedTable(int n_vars, int max_degree);

  int n_vars() const { return n_; }
  int max_degree() const { return dmax_; }
  std::uint32_t count() const { return total_; }

  std::uint32_t id_of(const Monomial& m) const;
  Monomial monomial_of(std::uint32_t id) const;
  int degree_of(std::uint32_t id) const;
  std::uint32_t offset(int degree) const { return offsets_[degree]; }

 private:
  int n_;
  int dmax_;
  std::uint32_t total_;
  std::vector<std::uint32_t> offsets_;  // offsets_[d] = first id of degree d
};

}  // namespace hp0

#endif
