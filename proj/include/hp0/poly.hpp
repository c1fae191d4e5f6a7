#ifndef HP0_POLY_HPP
#define HP0_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hp0/monomial.hpp"
#include "hp0/rational.hpp"

namespace hp0 {

/// Sparse polynomial over the rationals. Terms are kept in graded-lex
/// descending order with no zero coefficients; all monomials share one arity.
class Poly {
 public:
  using Term = std::pair<Monomial, BigRat>;

  Poly() = default;
  explicit Poly(int n_vars) : n_(n_vars) {}

  static Poly monomial(const Monomial& m, const BigRat& c = BigRat(1));

  int n_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Leading (graded-lex largest) monomial; empty if zero.
  std::optional<Monomial> leading_monomial() const;

  /// True when every term has the same total degree (the zero polynomial is
  /// homogeneous of every degree).
  bool is_homogeneous() const;
  int degree() const;  // degree of the leading term; -1 for zero

  void add_term(const Monomial& m, const BigRat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly scaled(const BigRat& c) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Terms rendered graded-lex descending: "e1^2*e2 - 3*e2^3 + 1/2".
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<Term> terms_;
};

/// The derivation sending e_i to alpha_i, extended by the Leibniz rule,
/// applied to the monomial e^beta: sum_i alpha_i beta_i e^(beta - eps_i).
Poly apply_derivation(const std::vector<int>& alpha, const Monomial& beta);

}  // namespace hp0

#endif
